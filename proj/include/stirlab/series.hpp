#pragma once

#include <cstddef>
#include <vector>

#include "stirlab/polynomial.hpp"

namespace stirlab {

/// Power series in z truncated after z^order, with coefficients in Q[x].
/// coeff(m) is the coefficient of z^m (not divided by m!).
class ZSeries {
 public:
  explicit ZSeries(std::size_t order) : coeffs_(order + 1) {}
  ZSeries(std::size_t order, std::vector<RatPolynomial> coeffs);

  /// The constant series c + O(z^{order+1}).
  static ZSeries constant(const RatPolynomial& c, std::size_t order);

  /// Builds sum_{m<=order} terms[m] z^m / m!; missing terms are zero.
  static ZSeries from_egf(const std::vector<IntPolynomial>& terms, std::size_t order);

  std::size_t order() const { return coeffs_.size() - 1; }
  const RatPolynomial& coeff(std::size_t m) const { return coeffs_.at(m); }
  RatPolynomial& coeff(std::size_t m) { return coeffs_.at(m); }
  const std::vector<RatPolynomial>& coeffs() const { return coeffs_; }

  friend ZSeries operator+(const ZSeries& a, const ZSeries& b);
  friend ZSeries operator-(const ZSeries& a, const ZSeries& b);
  /// Cauchy product; throws std::invalid_argument on order mismatch.
  friend ZSeries operator*(const ZSeries& a, const ZSeries& b);
  friend ZSeries operator*(const ZSeries& a, const RatPolynomial& c);
  friend bool operator==(const ZSeries&, const ZSeries&) = default;

 private:
  std::vector<RatPolynomial> coeffs_;
};

/// e^{c z} = sum_m c^m z^m / m!, truncated at `order`.
ZSeries series_exp_linear(const RatPolynomial& c, std::size_t order);

/// s^power by repeated multiplication; power must be >= 1.
ZSeries series_pow(const ZSeries& s, unsigned power);

}  // namespace stirlab
