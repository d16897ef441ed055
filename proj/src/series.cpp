#include "stirlab/series.hpp"

#include <stdexcept>

namespace stirlab {

ZSeries::ZSeries(std::size_t order, std::vector<RatPolynomial> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != order + 1) throw std::invalid_argument("ZSeries: need order + 1 coefficients");
}

ZSeries ZSeries::constant(const RatPolynomial& c, std::size_t order) {
  ZSeries s(order);
  s.coeffs_[0] = c;
  return s;
}

ZSeries ZSeries::from_egf(const std::vector<IntPolynomial>& terms, std::size_t order) {
  ZSeries s(order);
  BigInt factorial = 1;
  for (std::size_t m = 0; m <= order; ++m) {
    if (m > 0) factorial *= m;
    if (m < terms.size()) s.coeffs_[m] = to_rational(terms[m]) * Rational(BigInt(1), factorial);
  }
  return s;
}

namespace {

void require_same_order(const ZSeries& a, const ZSeries& b) {
  if (a.order() != b.order()) throw std::invalid_argument("ZSeries: order mismatch");
}

}  // namespace

ZSeries operator+(const ZSeries& a, const ZSeries& b) {
  require_same_order(a, b);
  ZSeries out = a;
  for (std::size_t m = 0; m <= a.order(); ++m) out.coeffs_[m] += b.coeffs_[m];
  return out;
}

ZSeries operator-(const ZSeries& a, const ZSeries& b) {
  require_same_order(a, b);
  ZSeries out = a;
  for (std::size_t m = 0; m <= a.order(); ++m) out.coeffs_[m] -= b.coeffs_[m];
  return out;
}

ZSeries operator*(const ZSeries& a, const ZSeries& b) {
  require_same_order(a, b);
  ZSeries out(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; i + j <= a.order(); ++j) out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return out;
}

ZSeries operator*(const ZSeries& a, const RatPolynomial& c) {
  ZSeries out = a;
  for (auto& p : out.coeffs_) p = p * c;
  return out;
}

ZSeries series_exp_linear(const RatPolynomial& c, std::size_t order) {
  ZSeries s(order);
  RatPolynomial power = RatPolynomial::constant(1);
  BigInt factorial = 1;
  for (std::size_t m = 0; m <= order; ++m) {
    if (m > 0) {
      power *= c;
      factorial *= m;
    }
    s.coeff(m) = power * Rational(BigInt(1), factorial);
  }
  return s;
}

ZSeries series_pow(const ZSeries& s, unsigned power) {
  if (power == 0) throw std::invalid_argument("series_pow: power must be >= 1");
  ZSeries out = s;
  for (unsigned i = 1; i < power; ++i) out = out * s;
  return out;
}

}  // namespace stirlab
