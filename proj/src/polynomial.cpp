#include "polyalg/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace polyalg {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(Errc::integer_overflow, "integer addition overflow");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(Errc::integer_overflow, "integer multiplication overflow");
  return r;
}

IntPolynomial::IntPolynomial(std::vector<std::int64_t> coeffs) : c_(std::move(coeffs)) { trim(); }

void IntPolynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPolynomial IntPolynomial::constant(std::int64_t v) {
  return IntPolynomial(std::vector<std::int64_t>{v});
}

IntPolynomial IntPolynomial::monomial(int deg, std::int64_t coeff) {
  std::vector<std::int64_t> c(deg + 1, 0);
  c[deg] = coeff;
  return IntPolynomial(std::move(c));
}

std::int64_t IntPolynomial::eval(std::int64_t t) const {
  std::int64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = checked_add(checked_mul(acc, t), *it);
  return acc;
}

IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = checked_add(a.coeff(static_cast<int>(i)), b.coeff(static_cast<int>(i)));
  return IntPolynomial(std::move(c));
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<std::int64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = checked_add(a.coeff(static_cast<int>(i)), -b.coeff(static_cast<int>(i)));
  return IntPolynomial(std::move(c));
}

IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j)
      c[i + j] = checked_add(c[i + j], checked_mul(a.c_[i], b.c_[j]));
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(std::int64_t k) const {
  std::vector<std::int64_t> c(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) c[i] = checked_mul(c_[i], k);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::shifted(int m) const {
  if (is_zero()) return {};
  std::vector<std::int64_t> c(c_.size() + m, 0);
  std::copy(c_.begin(), c_.end(), c.begin() + m);
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::times_one_minus_t() const {
  return *this - shifted(1);
}

IntPolynomial IntPolynomial::div_one_minus_t() const {
  if (is_zero()) return {};
  if (eval(1) != 0) fail(Errc::integer_overflow, "polynomial not divisible by (1-t)");
  // (1-t) * q = p  =>  q_0 = p_0, q_k = q_{k-1} + p_k
  std::vector<std::int64_t> q(c_.size() - 1, 0);
  std::int64_t carry = 0;
  for (std::size_t k = 0; k + 1 < c_.size(); ++k) {
    carry = checked_add(carry, c_[k]);
    q[k] = carry;
  }
  return IntPolynomial(std::move(q));
}

bool IntPolynomial::palindromic() const {
  int d = degree();
  for (int i = 0; 2 * i <= d; ++i)
    if (coeff(i) != coeff(d - i)) return false;
  return true;
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= degree(); ++k) {
    std::int64_t v = coeff(k);
    if (v == 0) continue;
    if (!first) os << (v > 0 ? " + " : " - ");
    else if (v < 0) os << "-";
    std::int64_t a = v < 0 ? -v : v;
    if (k == 0) os << a;
    else {
      if (a != 1) os << a << "*";
      os << "t";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

HilbertSeries::HilbertSeries(IntPolynomial h, int d) : num(std::move(h)), denom_exp(d) {
  if (num.is_zero()) {
    denom_exp = 0;
    return;
  }
  while (num.eval(1) == 0) {
    num = num.div_one_minus_t();
    --denom_exp;
  }
}

std::int64_t HilbertSeries::coefficient(int k) const {
  if (k < 0) return 0;
  // h(t) * sum_j C(d-1+j, j) t^j; negative denom_exp means h(t)*(1-t)^{-d}.
  IntPolynomial h = num;
  int d = denom_exp;
  while (d < 0) {
    h = h.times_one_minus_t();
    ++d;
  }
  std::int64_t acc = 0;
  for (int j = 0; j <= std::min(k, h.degree()); ++j) {
    // binomial C(d-1+k-j, k-j)
    std::int64_t bin = 1;
    for (int i = 1; i <= k - j; ++i)
      bin = checked_mul(bin, d - 1 + i) / i;
    if (d == 0) bin = (k == j) ? 1 : 0;
    acc = checked_add(acc, checked_mul(h.coeff(j), bin));
  }
  return acc;
}

std::string HilbertSeries::str() const {
  std::ostringstream os;
  os << "(" << num.str() << ")";
  if (denom_exp != 0) os << " / (1-t)^" << denom_exp;
  return os.str();
}

HilbertSeries series_add(const HilbertSeries& a, const HilbertSeries& b) {
  int d = std::max(a.denom_exp, b.denom_exp);
  IntPolynomial na = a.num, nb = b.num;
  for (int i = a.denom_exp; i < d; ++i) na = na.times_one_minus_t();
  for (int i = b.denom_exp; i < d; ++i) nb = nb.times_one_minus_t();
  return HilbertSeries(na + nb, d);
}

HilbertSeries series_sub(const HilbertSeries& a, const HilbertSeries& b) {
  int d = std::max(a.denom_exp, b.denom_exp);
  IntPolynomial na = a.num, nb = b.num;
  for (int i = a.denom_exp; i < d; ++i) na = na.times_one_minus_t();
  for (int i = b.denom_exp; i < d; ++i) nb = nb.times_one_minus_t();
  return HilbertSeries(na - nb, d);
}

HilbertSeries series_shift(const HilbertSeries& a, int m) {
  return HilbertSeries(a.num.shifted(m), a.denom_exp);
}

HilbertSeries series_scale_frac(const HilbertSeries& a, int k) {
  return HilbertSeries(a.num, a.denom_exp + k);
}

HilbertSeries series_mul_poly(const HilbertSeries& a, const IntPolynomial& p) {
  return HilbertSeries(a.num * p, a.denom_exp);
}

}  // namespace polyalg
