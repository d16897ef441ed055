#include "stirlab/statistics.hpp"

#include <array>
#include <cstdint>
#include <stdexcept>

namespace stirlab {

unsigned asc_inv(std::span<const Letter> e, unsigned k) {
  unsigned count = 0;
  for (std::size_t idx = 0; idx + 1 < e.size(); ++idx) {
    // 1-based i = idx + 1: compare e_i (ik+1) < e_{i+1} ((i-1)k+1).
    const std::uint64_t i = idx + 1;
    const std::uint64_t lhs = std::uint64_t{e[idx]} * (i * k + 1);
    const std::uint64_t rhs = std::uint64_t{e[idx + 1]} * ((i - 1) * k + 1);
    if (lhs < rhs) ++count;
  }
  return count;
}

namespace {

bool is_plateau_block(std::span<const Letter> w, std::size_t start, unsigned k) {
  for (std::size_t t = start + 1; t < start + k; ++t)
    if (w[t] != w[start]) return false;
  return true;
}

void require_k_at_least_two(unsigned k) {
  if (k < 2) throw std::invalid_argument("ascent-plateau statistics require k >= 2");
}

}  // namespace

unsigned ap(std::span<const Letter> w, unsigned k) {
  require_k_at_least_two(k);
  if (w.size() < k) return 0;
  unsigned count = 0;
  for (std::size_t s = 1; s + k <= w.size(); ++s)
    if (w[s - 1] < w[s] && is_plateau_block(w, s, k)) ++count;
  return count;
}

unsigned ap0(std::span<const Letter> w, unsigned k) {
  require_k_at_least_two(k);
  if (w.size() < k) return 0;
  return (is_plateau_block(w, 0, k) ? 1 : 0) + ap(w, k);
}

unsigned exc(std::span<const Letter> pi) {
  unsigned count = 0;
  for (std::size_t i = 0; i < pi.size(); ++i)
    if (pi[i] > i + 1) ++count;
  return count;
}

unsigned cyc(std::span<const Letter> pi) {
  std::vector<bool> seen(pi.size(), false);
  unsigned count = 0;
  for (std::size_t start = 0; start < pi.size(); ++start) {
    if (seen[start]) continue;
    ++count;
    for (std::size_t i = start; !seen[i]; i = pi[i] - 1) seen[i] = true;
  }
  return count;
}

unsigned asc_word(std::span<const Letter> w) {
  unsigned count = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] < w[i + 1]) ++count;
  return count;
}

unsigned plateau(std::span<const Letter> w) {
  unsigned count = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] == w[i + 1]) ++count;
  return count;
}

unsigned descents(std::span<const Letter> w) {
  unsigned count = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) ++count;
  return count;
}

unsigned ipk(std::span<const Letter> pi) {
  unsigned count = 0;
  for (std::size_t i = 1; i + 1 < pi.size(); ++i)
    if (pi[i - 1] < pi[i] && pi[i] > pi[i + 1]) ++count;
  return count;
}

unsigned lpk(std::span<const Letter> pi) {
  if (pi.size() < 2) return 0;
  return ipk(pi) + (pi[0] > pi[1] ? 1 : 0);
}

unsigned runs(std::span<const Letter> pi) {
  if (pi.size() < 2) throw std::invalid_argument("runs: need at least two entries");
  unsigned changes = 0;
  for (std::size_t i = 1; i + 1 < pi.size(); ++i) {
    const bool peak = pi[i - 1] < pi[i] && pi[i] > pi[i + 1];
    const bool valley = pi[i - 1] > pi[i] && pi[i] < pi[i + 1];
    if (peak || valley) ++changes;
  }
  return changes + 1;
}

bool consecutive_patterns_in_stirling_set(std::span<const Letter> w) {
  // Reduced pattern of (a, b, c) as a three-digit number, e.g. 5,5,2 -> 221.
  auto reduce = [](Letter a, Letter b, Letter c) {
    const std::array<Letter, 3> v{a, b, c};
    int code = 0;
    for (int i = 0; i < 3; ++i) {
      int rank = 1;
      for (int j = 0; j < 3; ++j) {
        bool first_of_value = true;
        for (int t = 0; t < j; ++t)
          if (v[t] == v[j]) first_of_value = false;
        if (v[j] < v[i] && first_of_value) ++rank;
      }
      code = code * 10 + rank;
    }
    return code;
  };
  static constexpr std::array<int, 8> allowed{112, 211, 122, 221, 213, 312, 123, 321};
  for (std::size_t i = 0; i + 2 < w.size(); ++i) {
    const int p = reduce(w[i], w[i + 1], w[i + 2]);
    bool ok = false;
    for (int a : allowed) ok = ok || a == p;
    if (!ok) return false;
  }
  return true;
}

}  // namespace stirlab
