#include <doctest.h>

#include "polyalg/generate.hpp"
#include "polyalg/invariants.hpp"
#include "polyalg/io.hpp"
#include "polyalg/verify.hpp"
#include "shapes.hpp"

using namespace polyalg;

namespace {

Polyomino zigzag16() {
  return parse_input(
      R"({"cells":[[0,1],[0,2],[0,3],[1,0],[1,1],[1,3],[1,4],[2,0],[2,4],[3,0],[3,1],[3,3],[3,4],[4,1],[4,2],[4,3]]})");
}

Polyomino w_ring_1config() {
  return parse_input(
      "..###.\n"
      ".##.##\n"
      "##...#\n"
      "#...##\n"
      "##.##.\n"
      ".###..");
}

Polyomino w_ring_2config() {
  return parse_input(
      ".####.\n"
      "##..##\n"
      "#....#\n"
      "#...##\n"
      "##.##.\n"
      ".###..");
}

}  // namespace

TEST_CASE("h for simple thin polyominoes") {
  CHECK(h_simple_thin(shapes::l_tromino()) == IntPolynomial({1, 3, 1}));
  CHECK(h_simple_thin(shapes::strip(3)) == IntPolynomial({1, 3}));
  CHECK(h_simple_thin(shapes::single_cell()) == IntPolynomial({1, 1}));
  CHECK_THROWS_AS((void)h_simple_thin(shapes::square_tetromino()), Error);
  CHECK_THROWS_AS((void)h_simple_thin(shapes::ring33()), Error);
}

TEST_CASE("LC formula on the ring") {
  auto p = shapes::ring33();
  auto dec = decompose_lc(p);
  REQUIRE(dec);
  CHECK(h_simple_thin(dec->p4) == IntPolynomial({1, 5, 4}));
  CHECK(h_simple_thin(dec->p1) == IntPolynomial({1, 5, 5, 1}));
  CHECK(h_simple_thin(dec->p2) == IntPolynomial({1, 5, 5, 1}));
  CHECK(h_simple_thin(dec->p3) == IntPolynomial({1, 3, 1}));

  auto h = h_lc_simple(p, *dec);
  CHECK(h == IntPolynomial({1, 8, 16, 8, 1}));
  CHECK(h == rook_polynomial(p));
  CHECK(h.degree() == rook_number(p));
  CHECK(static_cast<int>(p.vertices().size()) - p.rank() == 8);
}

TEST_CASE("general LC series formula") {
  auto p = shapes::ring33();
  auto dec = decompose_lc(p);
  REQUIRE(dec);

  SUBCASE("with oracle component series it reproduces HP(P)") {
    auto hp = hp_lc_general(*dec, hilbert_series_oracle(dec->p1), hilbert_series_oracle(dec->p2),
                            hilbert_series_oracle(dec->p3), hilbert_series_oracle(dec->p4));
    CHECK(hp == HilbertSeries(IntPolynomial({1, 8, 16, 8, 1}), 8));
    CHECK(hp == hilbert_series_oracle(p));
  }

  SUBCASE("degenerate free inputs reduce to the stated rational combination") {
    HilbertSeries free2(IntPolynomial::one(), 2), free3(IntPolynomial::one(), 3);
    auto got = hp_lc_general(*dec, free2, free2, free3, free3);
    // 1/(1-t) HP4 + t/(1-t) [HP1/(1-t)^0 + HP2/(1-t)^0 + HP3/(1-t)^1]
    auto want = series_add(
        series_scale_frac(free3, 1),
        series_shift(series_scale_frac(series_add(series_add(free2, free2),
                                                  series_scale_frac(free3, 1)),
                                       1),
                     1));
    CHECK(got == want);
  }
}

TEST_CASE("W-configuration formulas") {
  auto p1 = w_ring_1config();
  auto w1 = decompose_w(p1);
  REQUIRE(w1);
  REQUIRE(w1->case_id == 1);
  CHECK(h_1config(w1->oriented, *w1) == rook_polynomial(p1));
  CHECK_THROWS_AS((void)h_2config(w1->oriented, *w1), Error);

  auto p2 = w_ring_2config();
  auto w2 = decompose_w(p2);
  REQUIRE(w2);
  REQUIRE(w2->case_id == 2);
  CHECK(h_2config(w2->oriented, *w2) == rook_polynomial(p2));
  CHECK_THROWS_AS((void)h_1config(w2->oriented, *w2), Error);

  SUBCASE("r_1 equals the rank") {
    CHECK(h_1config(w1->oriented, *w1).coeff(1) == p1.rank());
    CHECK(h_2config(w2->oriented, *w2).coeff(1) == p2.rank());
  }
}

TEST_CASE("ladder3 formula on the stored fixtures") {
  for (const auto& p : ladder3_fixtures()) {
    REQUIRE(closed_path_sequence(p));
    CHECK(find_l_configurations(p).empty());
    CHECK(find_ladders(p).first >= 3);
    auto l3 = decompose_ladder3(p);
    REQUIRE(l3);
    CHECK(l3->r >= 2);
    CHECK(l3->s >= 2);
    auto h = h_ladder3(p, *l3);
    CHECK(h == rook_polynomial(p));
    CHECK(h.coeff(0) == 1);
  }
}

TEST_CASE("HP(P) = HP(Q) + t/(1-t) HP(Q1)") {
  auto p = w_ring_1config();
  auto w = decompose_w(p);
  REQUIRE(w);
  CHECK(hp_q_relation_check(w->oriented, *w));

  SUBCASE("a deliberately wrong Q1 fails the relation") {
    WConfiguration broken = *w;
    broken.q1 = broken.q;
    CHECK_FALSE(hp_q_relation_check(w->oriented, broken));
  }

  SUBCASE("h_P - t h_Q1 has positive value at 1") {
    auto h = rook_polynomial(w->oriented) - rook_polynomial(w->q1).shifted(1);
    CHECK(h.eval(1) > 0);
  }
}

TEST_CASE("weakly closed path invariants") {
  auto p = w_ring_2config();
  auto w = decompose_w(p);
  REQUIRE(w);
  auto rep = weakly_closed_invariants(w->q, w->oriented, *w);
  CHECK(rep.methods_agree);
  CHECK(rep.h_rook == rook_polynomial(w->q));
  CHECK(rep.krull_dim ==
        static_cast<int>(w->oriented.vertices().size()) - w->oriented.rank());
  CHECK(rep.gorenstein == rep.h_rook.palindromic());

  CHECK_THROWS_AS((void)weakly_closed_invariants(w->q1, w->oriented, *w), Error);
}

TEST_CASE("closed path pipeline") {
  auto rep = closed_path_invariants(shapes::ring33());
  CHECK(rep.h_rook == IntPolynomial({1, 8, 16, 8, 1}));
  CHECK(rep.formula == "lc");
  CHECK(rep.methods_agree);
  CHECK(rep.krull_dim == 8);
  CHECK(rep.regularity == 4);
  CHECK(rep.gorenstein);

  auto rep43 = closed_path_invariants(shapes::ring43());
  CHECK(rep43.methods_agree);
  CHECK_FALSE(rep43.gorenstein);

  CHECK_THROWS_AS((void)closed_path_invariants(zigzag16()), Error);
  CHECK_THROWS_AS((void)closed_path_invariants(shapes::l_tromino()), Error);
}

TEST_CASE("gorenstein verdicts") {
  CHECK(gorenstein(shapes::ring33()));
  CHECK_FALSE(gorenstein(shapes::ring43()));
  CHECK(gorenstein(shapes::l_tromino()));
  CHECK_THROWS_AS((void)gorenstein(shapes::square_tetromino()), Error);
  CHECK_THROWS_AS((void)gorenstein(zigzag16()), Error);
}

TEST_CASE("any valid decomposition yields the same h") {
  for (int id = 0; id < 8; ++id) {
    auto q = transformed(shapes::ring33(), Transform{id});
    auto dec = decompose_lc(q);
    REQUIRE(dec);
    CHECK(h_lc_simple(q, *dec) == IntPolynomial({1, 8, 16, 8, 1}));
  }
}
