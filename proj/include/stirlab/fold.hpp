#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

#include "stirlab/objects.hpp"
#include "stirlab/polynomial.hpp"

namespace stirlab {

/// Counts indexed by a statistic value. Merging is elementwise addition, so
/// the result of a fold does not depend on how the stream was partitioned.
class Histogram {
 public:
  void add(std::size_t index, std::uint64_t weight = 1) {
    if (index >= counts_.size()) counts_.resize(index + 1, 0);
    counts_[index] += weight;
  }
  void merge(const Histogram& other) {
    for (std::size_t i = 0; i < other.counts_.size(); ++i) add(i, other.counts_[i]);
  }
  const std::vector<std::uint64_t>& counts() const { return counts_; }
  std::uint64_t total() const;
  IntPolynomial to_polynomial() const;

 private:
  std::vector<std::uint64_t> counts_;
};

/// Joint counts over a pair of statistics.
class Histogram2D {
 public:
  void add(std::size_t i, std::size_t j, std::uint64_t weight = 1) {
    if (i >= counts_.size()) counts_.resize(i + 1);
    if (j >= counts_[i].size()) counts_[i].resize(j + 1, 0);
    counts_[i][j] += weight;
  }
  void merge(const Histogram2D& other) {
    for (std::size_t i = 0; i < other.counts_.size(); ++i)
      for (std::size_t j = 0; j < other.counts_[i].size(); ++j) add(i, j, other.counts_[i][j]);
  }
  const std::vector<std::vector<std::uint64_t>>& counts() const { return counts_; }
  BivariatePolynomial to_polynomial() const;

 private:
  std::vector<std::vector<std::uint64_t>> counts_;
};

/// 0 means one job per hardware thread.
unsigned resolve_jobs(unsigned jobs);

/// Folds `visit(acc, object)` over every shard. Each worker owns an
/// accumulator; accumulators are merged at the end. `make_stream(prefix)`
/// must return a stream restricted to that shard.
template <class Acc, class MakeStream, class Visit>
Acc parallel_fold(const std::vector<Word>& shards, unsigned jobs, MakeStream make_stream, Visit visit) {
  jobs = resolve_jobs(jobs);
  if (jobs > shards.size()) jobs = static_cast<unsigned>(shards.size());
  auto run_shard = [&](Acc& acc, const Word& prefix) {
    auto stream = make_stream(std::span<const Letter>(prefix));
    while (auto obj = stream.next()) visit(acc, *obj);
  };
  if (jobs <= 1) {
    Acc acc;
    for (const auto& prefix : shards) run_shard(acc, prefix);
    return acc;
  }

  std::vector<Acc> partial(jobs);
  std::atomic<std::size_t> next_shard{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        try {
          for (std::size_t s = next_shard++; s < shards.size(); s = next_shard++) run_shard(partial[w], shards[s]);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
  Acc result;
  for (const auto& p : partial) result.merge(p);
  return result;
}

/// Smallest prefix depth whose shard count reaches `target` (capped by max_depth).
template <class CountAtDepth>
unsigned choose_shard_depth(unsigned jobs, unsigned max_depth, CountAtDepth count_at_depth) {
  jobs = resolve_jobs(jobs);
  if (jobs <= 1) return 0;
  const std::size_t target = static_cast<std::size_t>(jobs) * 8;
  unsigned depth = 0;
  while (depth < max_depth && count_at_depth(depth) < target) ++depth;
  return depth;
}

}  // namespace stirlab
