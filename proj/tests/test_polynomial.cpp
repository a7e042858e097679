#include <doctest.h>

#include <limits>

#include "polyalg/polynomial.hpp"

using namespace polyalg;

namespace {
IntPolynomial poly(std::vector<std::int64_t> c) { return IntPolynomial(std::move(c)); }
}

TEST_CASE("integer polynomial arithmetic") {
  auto a = poly({1, 2});       // 1 + 2t
  auto b = poly({0, 1, 3});    // t + 3t^2
  CHECK((a + b) == poly({1, 3, 3}));
  CHECK((a - b) == poly({1, 1, -3}));
  CHECK((a * b) == poly({0, 1, 5, 6}));
  CHECK(a.shifted(2) == poly({0, 0, 1, 2}));
  CHECK(poly({1, -1}).eval(1) == 0);
  CHECK(a.degree() == 1);
  CHECK(IntPolynomial{}.degree() == -1);
  CHECK(poly({1, 0, 0}) == poly({1}));  // trailing zeros stripped
}

TEST_CASE("palindromicity") {
  CHECK(poly({1, 8, 16, 8, 1}).palindromic());
  CHECK(poly({1, 3, 1}).palindromic());
  CHECK_FALSE(poly({1, 3}).palindromic());
  CHECK(IntPolynomial{}.palindromic());
}

TEST_CASE("division by 1-t") {
  auto p = poly({1, 0, -2, 1});  // 1 - 2t^2 + t^3 = (1-t)(1+t-t^2)
  CHECK(p.div_one_minus_t() == poly({1, 1, -1}));
  CHECK(poly({1, 1, -1}).times_one_minus_t() == p);
  CHECK_THROWS_AS((void)poly({1, 1}).div_one_minus_t(), Error);
}

TEST_CASE("overflow is detected, never wrapped") {
  auto big = poly({std::numeric_limits<std::int64_t>::max()});
  CHECK_THROWS_AS((void)(big + poly({1})), Error);
  CHECK_THROWS_AS((void)(big * poly({2})), Error);
}

TEST_CASE("hilbert series canonical form") {
  // (1 - t^2) / (1-t)^4 = (1+t) / (1-t)^3
  HilbertSeries hs(poly({1, 0, -1}), 4);
  CHECK(hs.num == poly({1, 1}));
  CHECK(hs.denom_exp == 3);
  CHECK(hs.num.eval(1) != 0);

  // canonicalization is idempotent
  HilbertSeries again(hs.num, hs.denom_exp);
  CHECK(again == hs);
}

TEST_CASE("series combination") {
  HilbertSeries one_over(poly({1}), 1);         // 1/(1-t)
  HilbertSeries t_over(poly({0, 1}), 1);        // t/(1-t)
  auto sum = series_add(one_over, t_over);      // (1+t)/(1-t)
  CHECK(sum.num == poly({1, 1}));
  CHECK(sum.denom_exp == 1);

  auto shifted = series_shift(HilbertSeries(poly({1, 1}), 3), 1);
  CHECK(shifted.num == poly({0, 1, 1}));
  CHECK(shifted.denom_exp == 3);

  auto scaled = series_scale_frac(HilbertSeries(poly({1}), 0), 3);
  CHECK(scaled.num == poly({1}));
  CHECK(scaled.denom_exp == 3);
}

TEST_CASE("series coefficients") {
  // 1/(1-t)^3: H(k) = C(k+2, 2)
  HilbertSeries free3(poly({1}), 3);
  CHECK(free3.coefficient(0) == 1);
  CHECK(free3.coefficient(1) == 3);
  CHECK(free3.coefficient(4) == 15);

  // (1+t)/(1-t)^3: 1, 4, 9, 16, ... (the single cell's Hilbert function)
  HilbertSeries cell(poly({1, 1}), 3);
  for (int k = 0; k <= 6; ++k) CHECK(cell.coefficient(k) == (k + 1) * (k + 1));
}
