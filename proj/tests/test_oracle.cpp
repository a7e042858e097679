#include <doctest.h>

#include "polyalg/generate.hpp"
#include "polyalg/hilbert_oracle.hpp"
#include "shapes.hpp"

using namespace polyalg;

namespace {

VertexMonomial mono(std::initializer_list<VarId> vars) {
  VertexMonomial m;
  for (VarId v : vars) m = mul(m, VertexMonomial::var(v));
  return m;
}

void all_monomials(int nvars, int deg, int from, VertexMonomial cur,
                   std::vector<VertexMonomial>& out) {
  if (deg == 0) {
    out.push_back(cur);
    return;
  }
  for (int v = from; v < nvars; ++v)
    all_monomials(nvars, deg - 1, v, mul(cur, VertexMonomial::var(v)), out);
}

long count_standard_monomials(const std::vector<VertexMonomial>& leads, int nvars, int deg) {
  std::vector<VertexMonomial> monos;
  all_monomials(nvars, deg, 0, {}, monos);
  long count = 0;
  for (const auto& m : monos) {
    bool divisible = false;
    for (const auto& l : leads)
      if (divides(l, m)) divisible = true;
    if (!divisible) ++count;
  }
  return count;
}

}  // namespace

TEST_CASE("monomial hilbert series") {
  // (x y) in 4 variables: (1 - t^2)/(1-t)^4 = (1+t)/(1-t)^3
  auto hs = monomial_hilbert_series({mono({0, 1})}, 4);
  CHECK(hs.num == IntPolynomial({1, 1}));
  CHECK(hs.denom_exp == 3);

  // (x1 x2, x2 x3) in 3 variables
  auto hs2 = monomial_hilbert_series({mono({0, 1}), mono({1, 2})}, 3);
  CHECK(hs2.num == IntPolynomial({1, 1, -1}));
  CHECK(hs2.denom_exp == 2);

  // the free ring
  auto hs3 = monomial_hilbert_series({}, 5);
  CHECK(hs3.num == IntPolynomial::one());
  CHECK(hs3.denom_exp == 5);

  // non-minimal input is minimalized first
  auto hs4 = monomial_hilbert_series({mono({0, 1}), mono({0, 1, 2})}, 3);
  CHECK(hs4 == monomial_hilbert_series({mono({0, 1})}, 3));
}

TEST_CASE("inclusion-exclusion agrees with pivot splitting") {
  std::vector<std::vector<VertexMonomial>> cases = {
      {mono({0, 1}), mono({1, 2}), mono({2, 3}), mono({3, 4})},
      {mono({0, 1}), mono({2, 3}), mono({0, 3}), mono({1, 2})},
      {mono({0, 0}), mono({1, 1, 2})},
      {mono({0, 1, 2}), mono({1, 2, 3}), mono({0, 3})},
  };
  for (const auto& gens : cases)
    CHECK(monomial_hilbert_numerator(gens, 20) == monomial_hilbert_numerator(gens, 1));
}

TEST_CASE("oracle micro-cases") {
  auto cell = hilbert_series_oracle(shapes::single_cell());
  CHECK(cell.num == IntPolynomial({1, 1}));
  CHECK(cell.denom_exp == 3);

  auto tromino = hilbert_series_oracle(shapes::l_tromino());
  CHECK(tromino.num == IntPolynomial({1, 3, 1}));
  CHECK(tromino.denom_exp == 5);

  auto ring = hilbert_series_oracle(shapes::ring33());
  CHECK(ring.num == IntPolynomial({1, 8, 16, 8, 1}));
  CHECK(ring.denom_exp == 8);
}

TEST_CASE("hilbert function matches standard-monomial counting") {
  for (const auto& p : enumerate_polyominoes(4)) {
    auto run = hilbert_oracle_run(p);
    int nvars = static_cast<int>(p.vertices().size());
    for (int deg = 0; deg <= 4; ++deg)
      CHECK(run.series.coefficient(deg) ==
            count_standard_monomials(run.initial_ideal, nvars, deg));
  }
  // push two named shapes to degree 6
  for (const auto& p : {shapes::single_cell(), shapes::l_tromino()}) {
    auto run = hilbert_oracle_run(p);
    int nvars = static_cast<int>(p.vertices().size());
    for (int deg = 5; deg <= 6; ++deg)
      CHECK(run.series.coefficient(deg) ==
            count_standard_monomials(run.initial_ideal, nvars, deg));
  }
}

TEST_CASE("oracle output is order independent") {
  for (const auto& p : {shapes::l_tromino(), shapes::ring33()}) {
    VertexIndex vars(p);
    auto gens = inner_two_minors(p, vars);
    auto reference = hilbert_series_oracle(p);
    // three arbitrary Y choices, completed if needed
    for (std::vector<VarId> y : {std::vector<VarId>{}, {0}, {1, 3}}) {
      auto order = LexOrderConfig::make(vars.size(), y);
      auto res = buchberger(gens, order);
      std::vector<VertexMonomial> leads;
      for (const auto& g : res.basis)
        leads.push_back(order.compare(g.plus, g.minus) == std::strong_ordering::less ? g.minus
                                                                                     : g.plus);
      CHECK(monomial_hilbert_series(std::move(leads), vars.size()) == reference);
    }
  }
}

TEST_CASE("budget errors propagate") {
  OracleOptions opts;
  opts.quick_order_candidates = 0;
  opts.spair_budget = 0;
  CHECK_THROWS_AS((void)hilbert_series_oracle(shapes::ring33(), opts), Error);
}
