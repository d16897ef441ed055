#include "stirlab/fold.hpp"

namespace stirlab {

std::uint64_t Histogram::total() const {
  std::uint64_t t = 0;
  for (auto c : counts_) t += c;
  return t;
}

IntPolynomial Histogram::to_polynomial() const {
  std::vector<BigInt> c(counts_.begin(), counts_.end());
  return IntPolynomial(std::move(c));
}

BivariatePolynomial Histogram2D::to_polynomial() const {
  std::vector<std::vector<BigInt>> c(counts_.size());
  for (std::size_t i = 0; i < counts_.size(); ++i) c[i].assign(counts_[i].begin(), counts_[i].end());
  return BivariatePolynomial(std::move(c));
}

unsigned resolve_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace stirlab
