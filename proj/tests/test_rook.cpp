#include <doctest.h>

#include "polyalg/generate.hpp"
#include "polyalg/rook.hpp"
#include "shapes.hpp"

using namespace polyalg;

namespace {

// independent oracle: plain subset enumeration with pairwise attack tests
IntPolynomial rook_polynomial_brute(const Polyomino& p) {
  const auto& cells = p.cells();
  int n = p.rank();
  std::vector<std::int64_t> counts(n + 1, 0);
  std::vector<int> chosen;
  auto rec = [&](auto&& self, int i) -> void {
    counts[chosen.size()]++;
    for (int j = i; j < n; ++j) {
      bool ok = true;
      for (int c : chosen)
        if (attacks(p, cells[c], cells[j])) ok = false;
      if (ok) {
        chosen.push_back(j);
        self(self, j + 1);
        chosen.pop_back();
      }
    }
  };
  rec(rec, 0);
  return IntPolynomial(std::move(counts));
}

}  // namespace

TEST_CASE("attack convention") {
  auto ring = shapes::ring33();
  CHECK(attacks(ring, {0, 0}, {2, 0}));        // same rank-3 block
  CHECK_FALSE(attacks(ring, {0, 1}, {2, 1}));  // the hole breaks the interval
  CHECK_FALSE(attacks(shapes::l_tromino(), {1, 0}, {0, 1}));
  CHECK_THROWS_AS((void)attacks(ring, {1, 1}, {0, 0}), Error);
  CHECK_THROWS_AS((void)attacks(ring, {0, 0}, {0, 0}), Error);
}

TEST_CASE("rook polynomials") {
  CHECK(rook_polynomial(shapes::single_cell()) == IntPolynomial({1, 1}));
  CHECK(rook_polynomial(shapes::strip(3)) == IntPolynomial({1, 3}));
  CHECK(rook_polynomial(shapes::square_tetromino()) == IntPolynomial({1, 4, 2}));
  CHECK(rook_polynomial(shapes::ring33()) == IntPolynomial({1, 8, 16, 8, 1}));
  CHECK(rook_polynomial(shapes::l_tromino()) == IntPolynomial({1, 3, 1}));
}

TEST_CASE("rook numbers") {
  CHECK(rook_number(shapes::single_cell()) == 1);
  CHECK(rook_number(shapes::ring33()) == 4);
  CHECK(rook_number(shapes::l_tromino()) == 2);

  SUBCASE("the ring has exactly one 4-rook configuration") {
    CHECK(rook_polynomial(shapes::ring33()).coeff(4) == 1);
    auto ring = shapes::ring33();
    std::vector<Cell> config{{1, 0}, {0, 1}, {2, 1}, {1, 2}};
    for (std::size_t i = 0; i < config.size(); ++i)
      for (std::size_t j = i + 1; j < config.size(); ++j)
        CHECK_FALSE(attacks(ring, config[i], config[j]));
  }
}

TEST_CASE("backtracking equals brute force up to rank 10") {
  for (const auto& p : enumerate_polyominoes(10)) {
    auto fast = rook_polynomial(p);
    CHECK(fast == rook_polynomial_brute(p));
    CHECK(fast.coeff(0) == 1);
    CHECK(fast.coeff(1) == p.rank());
  }
}

TEST_CASE("S-property") {
  CHECK(s_property(shapes::l_tromino()).holds);
  CHECK(s_property(shapes::ring33()).holds);
  auto r43 = s_property(shapes::ring43());
  CHECK_FALSE(r43.holds);
  CHECK(r43.witness.has_value());
  CHECK(r43.witness->size() == 4);  // the offending rank-4 block
  CHECK_THROWS_AS((void)s_property(shapes::square_tetromino()), Error);

  CHECK(s_property_closed_path(shapes::ring33()));
  CHECK_FALSE(s_property_closed_path(shapes::ring43()));
  CHECK_THROWS_AS((void)s_property_closed_path(shapes::l_tromino()), Error);
}
