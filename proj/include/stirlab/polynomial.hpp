#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stirlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised by exact_div when the divisor does not divide the dividend.
class NonDivisibleError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense univariate polynomial, coefficients in ascending degree.
///
/// The coefficient vector is kept trimmed: the last entry is nonzero, and the
/// zero polynomial has no entries. Equality is therefore structural.
template <class Coeff>
class Polynomial {
 public:
  using coeff_type = Coeff;

  Polynomial() = default;
  Polynomial(std::initializer_list<Coeff> coeffs) : coeffs_(coeffs) { trim(); }
  explicit Polynomial(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  static Polynomial constant(Coeff c) { return Polynomial(std::vector<Coeff>{std::move(c)}); }
  static Polynomial monomial(Coeff c, std::size_t degree) {
    std::vector<Coeff> v(degree + 1);
    v[degree] = std::move(c);
    return Polynomial(std::move(v));
  }

  const std::vector<Coeff>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  /// Coefficient of x^j, zero past the degree.
  Coeff operator[](std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : Coeff(0); }

  template <class T>
  T evaluate(const T& x) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + T(*it);
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
  }
  Polynomial& operator*=(const Coeff& c) {
    for (auto& a : coeffs_) a *= c;
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(Polynomial a) {
    for (auto& c : a.coeffs_) c = -c;
    return a;
  }
  friend Polynomial operator*(Polynomial a, const Coeff& c) { return a *= c; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coeff> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return Polynomial(std::move(out));
  }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<Coeff> coeffs_;
};

using IntPolynomial = Polynomial<BigInt>;
using RatPolynomial = Polynomial<Rational>;

/// Returns q with p = d * q; throws NonDivisibleError if no such integer q exists.
IntPolynomial exact_div(const IntPolynomial& p, const IntPolynomial& d);

/// x^n * p(1/x). Throws std::invalid_argument when deg p > n.
IntPolynomial reverse(const IntPolynomial& p, std::size_t n);

/// p(x^2).
IntPolynomial subst_xsq(const IntPolynomial& p);

RatPolynomial to_rational(const IntPolynomial& p);

/// Inverse of to_rational; throws std::domain_error on a non-integral coefficient.
IntPolynomial to_integer(const RatPolynomial& p);

/// "[c0,c1,...]" with decimal coefficients; "[]" for zero.
std::string to_string(const IntPolynomial& p);
std::string to_string(const RatPolynomial& p);
inline std::string to_string(const BigInt& v) { return v.str(); }
std::vector<std::string> to_decimal_strings(const IntPolynomial& p);

/// Polynomial in x and q with big-integer coefficients, stored as rows
/// coeffs[i][j] = coefficient of x^i q^j. Trailing zero rows and columns are
/// trimmed so that equality is structural.
class BivariatePolynomial {
 public:
  BivariatePolynomial() = default;
  explicit BivariatePolynomial(std::vector<std::vector<BigInt>> coeffs);

  static BivariatePolynomial monomial(BigInt c, std::size_t x_pow, std::size_t q_pow);

  const std::vector<std::vector<BigInt>>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  BigInt coeff(std::size_t x_pow, std::size_t q_pow) const;

  /// d/dx.
  BivariatePolynomial derivative_x() const;

  /// Substitutes q = value, leaving a polynomial in x.
  RatPolynomial evaluate_q(const Rational& value) const;

  friend BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
  friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

 private:
  void trim();

  std::vector<std::vector<BigInt>> coeffs_;
};

std::string to_string(const BivariatePolynomial& p);

}  // namespace stirlab
