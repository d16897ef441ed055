#include "stirlab/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace stirlab {

IntPolynomial exact_div(const IntPolynomial& p, const IntPolynomial& d) {
  if (d.is_zero()) throw std::invalid_argument("exact_div: zero divisor");
  if (p.is_zero()) return {};
  if (p.degree() < d.degree()) throw NonDivisibleError("exact_div: remainder is nonzero");

  std::vector<BigInt> rem = p.coeffs();
  const auto& dv = d.coeffs();
  const std::size_t dd = dv.size() - 1;
  std::vector<BigInt> quot(rem.size() - dd);
  for (std::size_t i = quot.size(); i-- > 0;) {
    const BigInt& top = rem[i + dd];
    if (top == 0) continue;
    BigInt q, r;
    boost::multiprecision::divide_qr(top, dv[dd], q, r);
    if (r != 0) throw NonDivisibleError("exact_div: leading coefficient does not divide");
    for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= q * dv[j];
    quot[i] = std::move(q);
  }
  if (std::any_of(rem.begin(), rem.end(), [](const BigInt& c) { return c != 0; }))
    throw NonDivisibleError("exact_div: remainder is nonzero");
  return IntPolynomial(std::move(quot));
}

IntPolynomial reverse(const IntPolynomial& p, std::size_t n) {
  if (p.degree() > static_cast<long>(n)) throw std::invalid_argument("reverse: degree exceeds bound");
  std::vector<BigInt> out(n + 1);
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) out[n - j] = p.coeffs()[j];
  return IntPolynomial(std::move(out));
}

IntPolynomial subst_xsq(const IntPolynomial& p) {
  if (p.is_zero()) return {};
  std::vector<BigInt> out(2 * p.coeffs().size() - 1);
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) out[2 * j] = p.coeffs()[j];
  return IntPolynomial(std::move(out));
}

RatPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> out(p.coeffs().begin(), p.coeffs().end());
  return RatPolynomial(std::move(out));
}

IntPolynomial to_integer(const RatPolynomial& p) {
  std::vector<BigInt> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    if (denominator(c) != 1) throw std::domain_error("to_integer: non-integral coefficient");
    out.push_back(numerator(c));
  }
  return IntPolynomial(std::move(out));
}

std::vector<std::string> to_decimal_strings(const IntPolynomial& p) {
  std::vector<std::string> out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) out.push_back(c.str());
  return out;
}

std::string to_string(const IntPolynomial& p) {
  std::string s = "[";
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
    if (j) s += ',';
    s += p.coeffs()[j].str();
  }
  return s + "]";
}

std::string to_string(const RatPolynomial& p) {
  std::string s = "[";
  for (std::size_t j = 0; j < p.coeffs().size(); ++j) {
    if (j) s += ',';
    s += p.coeffs()[j].str();
  }
  return s + "]";
}

BivariatePolynomial::BivariatePolynomial(std::vector<std::vector<BigInt>> coeffs)
    : coeffs_(std::move(coeffs)) {
  trim();
}

BivariatePolynomial BivariatePolynomial::monomial(BigInt c, std::size_t x_pow, std::size_t q_pow) {
  std::vector<std::vector<BigInt>> rows(x_pow + 1);
  rows[x_pow].resize(q_pow + 1);
  rows[x_pow][q_pow] = std::move(c);
  return BivariatePolynomial(std::move(rows));
}

void BivariatePolynomial::trim() {
  for (auto& row : coeffs_)
    while (!row.empty() && row.back() == 0) row.pop_back();
  while (!coeffs_.empty() && coeffs_.back().empty()) coeffs_.pop_back();
}

BigInt BivariatePolynomial::coeff(std::size_t x_pow, std::size_t q_pow) const {
  if (x_pow >= coeffs_.size() || q_pow >= coeffs_[x_pow].size()) return 0;
  return coeffs_[x_pow][q_pow];
}

BivariatePolynomial BivariatePolynomial::derivative_x() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<std::vector<BigInt>> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i];
    for (auto& c : out[i - 1]) c *= i;
  }
  return BivariatePolynomial(std::move(out));
}

RatPolynomial BivariatePolynomial::evaluate_q(const Rational& value) const {
  std::vector<Rational> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    Rational acc = 0;
    for (auto it = coeffs_[i].rbegin(); it != coeffs_[i].rend(); ++it) acc = acc * value + Rational(*it);
    out[i] = acc;
  }
  return RatPolynomial(std::move(out));
}

namespace {

template <class Op>
BivariatePolynomial combine(const std::vector<std::vector<BigInt>>& a,
                            const std::vector<std::vector<BigInt>>& b, Op op) {
  std::vector<std::vector<BigInt>> out(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < out.size(); ++i) {
    const std::size_t na = i < a.size() ? a[i].size() : 0;
    const std::size_t nb = i < b.size() ? b[i].size() : 0;
    out[i].resize(std::max(na, nb));
    for (std::size_t j = 0; j < na; ++j) out[i][j] = a[i][j];
    for (std::size_t j = 0; j < nb; ++j) op(out[i][j], b[i][j]);
  }
  return BivariatePolynomial(std::move(out));
}

}  // namespace

BivariatePolynomial operator+(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  return combine(a.coeffs_, b.coeffs_, [](BigInt& acc, const BigInt& v) { acc += v; });
}

BivariatePolynomial operator-(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  return combine(a.coeffs_, b.coeffs_, [](BigInt& acc, const BigInt& v) { acc -= v; });
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::size_t qa = 0, qb = 0;
  for (const auto& r : a.coeffs_) qa = std::max(qa, r.size());
  for (const auto& r : b.coeffs_) qb = std::max(qb, r.size());
  std::vector<std::vector<BigInt>> out(a.coeffs_.size() + b.coeffs_.size() - 1,
                                       std::vector<BigInt>(qa + qb - 1));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < a.coeffs_[i].size(); ++j) {
      if (a.coeffs_[i][j] == 0) continue;
      for (std::size_t s = 0; s < b.coeffs_.size(); ++s)
        for (std::size_t t = 0; t < b.coeffs_[s].size(); ++t)
          out[i + s][j + t] += a.coeffs_[i][j] * b.coeffs_[s][t];
    }
  return BivariatePolynomial(std::move(out));
}

std::string to_string(const BivariatePolynomial& p) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) os << ',';
    os << '[';
    for (std::size_t j = 0; j < p.coeffs()[i].size(); ++j) {
      if (j) os << ',';
      os << p.coeffs()[i][j];
    }
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace stirlab
