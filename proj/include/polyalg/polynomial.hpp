#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "polyalg/errors.hpp"

namespace polyalg {

std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

/// Exact integer-coefficient univariate polynomial in t.
/// Canonical form: no trailing zero coefficients; the zero polynomial is empty.
/// All arithmetic is overflow-checked; wrapping raises Overflow.
class IntPolynomial {
public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<std::int64_t> coeffs);
  static IntPolynomial constant(std::int64_t v);
  static IntPolynomial one() { return constant(1); }
  static IntPolynomial monomial(int deg, std::int64_t coeff = 1);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  std::int64_t coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : 0;
  }
  const std::vector<std::int64_t>& coeffs() const { return c_; }

  std::int64_t eval(std::int64_t t) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  IntPolynomial operator*(std::int64_t k) const;
  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

  /// Multiply by t^m.
  IntPolynomial shifted(int m) const;
  IntPolynomial times_one_minus_t() const;
  /// Exact division by (1 - t); requires eval(1) == 0.
  IntPolynomial div_one_minus_t() const;

  /// True when coeff(i) == coeff(deg - i) for all i (zero counts as palindromic).
  bool palindromic() const;

  std::string str() const;

private:
  std::vector<std::int64_t> c_;
  void trim();
};

/// Rational series h(t) / (1-t)^d in canonical form (h(1) != 0, or h = 0 with d = 0).
struct HilbertSeries {
  IntPolynomial num;
  int denom_exp = 0;

  HilbertSeries() = default;
  HilbertSeries(IntPolynomial h, int d);  // canonicalizes

  friend bool operator==(const HilbertSeries&, const HilbertSeries&) = default;

  /// Series coefficient of t^k.
  std::int64_t coefficient(int k) const;
  std::string str() const;
};

HilbertSeries series_add(const HilbertSeries& a, const HilbertSeries& b);
HilbertSeries series_sub(const HilbertSeries& a, const HilbertSeries& b);
/// Multiply by t^m.
HilbertSeries series_shift(const HilbertSeries& a, int m);
/// Multiply by 1 / (1-t)^k.
HilbertSeries series_scale_frac(const HilbertSeries& a, int k);
HilbertSeries series_mul_poly(const HilbertSeries& a, const IntPolynomial& p);

}  // namespace polyalg
