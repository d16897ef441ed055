#include "stirlab/objects.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace stirlab {

using boost::multiprecision::cpp_int;

bool is_permutation(std::span<const Letter> values) {
  std::vector<bool> seen(values.size() + 1, false);
  for (Letter v : values) {
    if (v == 0 || v > values.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

Permutation::Permutation(Word values) : values_(std::move(values)) {
  if (!is_permutation(values_)) throw std::invalid_argument("Permutation: not a permutation of 1..n");
}

bool is_inversion_sequence(std::span<const Letter> entries, unsigned k) {
  if (k == 0) return false;
  for (std::size_t i = 0; i < entries.size(); ++i)
    if (entries[i] > i * k) return false;
  return true;
}

InversionSequence::InversionSequence(Word entries, unsigned k) : entries_(std::move(entries)), k_(k) {
  if (!is_inversion_sequence(entries_, k_))
    throw std::invalid_argument("InversionSequence: entry out of range");
}

bool is_k_stirling(std::span<const Letter> word, unsigned n, unsigned k) {
  if (n == 0 || k == 0 || word.size() != static_cast<std::size_t>(n) * k) return false;
  std::vector<unsigned> count(n + 1, 0);
  std::vector<std::size_t> last(n + 1, 0);
  for (std::size_t p = 0; p < word.size(); ++p) {
    const Letter i = word[p];
    if (i == 0 || i > n) return false;
    if (count[i]++ > 0) {
      for (std::size_t q = last[i] + 1; q < p; ++q)
        if (word[q] < i) return false;
    }
    last[i] = p;
  }
  return std::all_of(count.begin() + 1, count.end(), [k](unsigned c) { return c == k; });
}

KStirlingWord::KStirlingWord(Word letters, unsigned n, unsigned k)
    : letters_(std::move(letters)), n_(n), k_(k) {
  if (!is_k_stirling(letters_, n_, k_)) throw std::invalid_argument("KStirlingWord: not in Q_n(k)");
}

cpp_int permutation_count(unsigned n) {
  cpp_int r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= i;
  return r;
}

cpp_int inversion_sequence_count(unsigned n, unsigned k) {
  cpp_int r = 1;
  for (unsigned i = 1; i <= n; ++i) r *= cpp_int(i - 1) * k + 1;
  return r;
}

cpp_int k_stirling_count(unsigned n, unsigned k) {
  cpp_int r = 1;
  for (unsigned i = 1; i < n; ++i) r *= cpp_int(i) * k + 1;
  return r;
}

void phi_into(std::span<const Letter> word, std::span<Letter> out) {
  if (out.size() != word.size()) throw std::invalid_argument("phi: output length mismatch");
  std::vector<bool> seen(word.size() / 2 + 1, false);
  for (std::size_t p = 0; p < word.size(); ++p) {
    const Letter j = word[p];
    out[p] = seen[j] ? 2 * j - 1 : 2 * j;
    seen[j] = true;
  }
}

Permutation phi(const KStirlingWord& sigma) {
  if (sigma.k() != 2) throw std::invalid_argument("phi: requires k = 2");
  Word out(sigma.letters().size());
  phi_into(sigma.letters(), out);
  return Permutation(std::move(out));
}

std::optional<KStirlingWord> phi_inverse(const Permutation& pi) {
  if (pi.size() % 2 != 0) throw std::invalid_argument("phi_inverse: odd length");
  const auto n = static_cast<unsigned>(pi.size() / 2);
  if (n == 0) return std::nullopt;
  Word word(pi.size());
  std::vector<bool> even_seen(n + 1, false);
  for (std::size_t p = 0; p < pi.size(); ++p) {
    const Letter v = pi[p];
    const Letter j = (v + 1) / 2;
    if (v % 2 == 0)
      even_seen[j] = true;
    else if (!even_seen[j])
      return std::nullopt;
    word[p] = j;
  }
  if (!is_k_stirling(word, n, 2)) return std::nullopt;
  return KStirlingWord(std::move(word), n, 2);
}

// --- PermutationStream -----------------------------------------------------

PermutationStream::PermutationStream(unsigned n, std::span<const Letter> prefix) : fixed_(prefix.size()) {
  if (n == 0) throw std::invalid_argument("PermutationStream: n must be >= 1");
  if (prefix.size() > n) throw std::invalid_argument("PermutationStream: prefix longer than n");
  std::vector<bool> used(n + 1, false);
  for (Letter v : prefix) {
    if (v == 0 || v > n || used[v]) throw std::invalid_argument("PermutationStream: invalid prefix");
    used[v] = true;
  }
  current_.assign(prefix.begin(), prefix.end());
  for (Letter v = 1; v <= n; ++v)
    if (!used[v]) current_.push_back(v);
}

std::optional<std::span<const Letter>> PermutationStream::next() {
  if (done_) return std::nullopt;
  if (started_ && !std::next_permutation(current_.begin() + static_cast<std::ptrdiff_t>(fixed_), current_.end())) {
    done_ = true;
    return std::nullopt;
  }
  started_ = true;
  return std::span<const Letter>(current_);
}

std::vector<Word> PermutationStream::prefixes(unsigned n, unsigned depth) {
  depth = std::min(depth, n);
  std::vector<Word> out;
  Word cur;
  std::vector<bool> used(n + 1, false);
  auto rec = [&](auto&& self) -> void {
    if (cur.size() == depth) {
      out.push_back(cur);
      return;
    }
    for (Letter v = 1; v <= n; ++v) {
      if (used[v]) continue;
      used[v] = true;
      cur.push_back(v);
      self(self);
      cur.pop_back();
      used[v] = false;
    }
  };
  rec(rec);
  return out;
}

// --- InversionSequenceStream -----------------------------------------------

InversionSequenceStream::InversionSequenceStream(unsigned n, unsigned k, std::span<const Letter> prefix)
    : k_(k), fixed_(prefix.size()) {
  if (n == 0 || k == 0) throw std::invalid_argument("InversionSequenceStream: n, k must be >= 1");
  if (prefix.size() > n || !is_inversion_sequence(prefix, k))
    throw std::invalid_argument("InversionSequenceStream: invalid prefix");
  current_.assign(n, 0);
  std::copy(prefix.begin(), prefix.end(), current_.begin());
}

std::optional<std::span<const Letter>> InversionSequenceStream::next() {
  if (done_) return std::nullopt;
  if (started_) {
    std::size_t i = current_.size();
    for (;;) {
      if (i == fixed_) {
        done_ = true;
        return std::nullopt;
      }
      --i;
      if (current_[i] < i * k_) {
        ++current_[i];
        std::fill(current_.begin() + static_cast<std::ptrdiff_t>(i) + 1, current_.end(), 0);
        break;
      }
    }
  }
  started_ = true;
  return std::span<const Letter>(current_);
}

std::vector<Word> InversionSequenceStream::prefixes(unsigned n, unsigned k, unsigned depth) {
  depth = std::min(depth, n);
  std::vector<Word> out;
  Word cur(depth, 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = depth;
    while (i > 0 && cur[i - 1] == (i - 1) * k) cur[--i] = 0;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

// --- KStirlingStream -------------------------------------------------------

KStirlingStream::KStirlingStream(unsigned n, unsigned k, std::span<const Letter> prefix)
    : n_(n), k_(k), choice_(n + 1, 0), fixed_(prefix.size()) {
  if (n == 0 || k == 0) throw std::invalid_argument("KStirlingStream: n, k must be >= 1");
  if (prefix.size() + 1 > n) throw std::invalid_argument("KStirlingStream: prefix longer than n - 1");
  for (std::size_t i = 0; i < prefix.size(); ++i) {
    const unsigned m = static_cast<unsigned>(i) + 2;
    if (prefix[i] > k * (m - 1)) throw std::invalid_argument("KStirlingStream: invalid prefix");
    choice_[m] = prefix[i];
  }
  word_.reserve(static_cast<std::size_t>(n) * k);
  rebuild_from(2);
}

void KStirlingStream::rebuild_from(unsigned level) {
  if (level <= 2) {
    word_.assign(k_, 1);
  } else {
    std::erase_if(word_, [level](Letter v) { return v >= level; });
  }
  for (unsigned m = std::max(level, 2u); m <= n_; ++m) {
    const std::size_t gap = word_.size() - choice_[m];
    word_.insert(word_.begin() + static_cast<std::ptrdiff_t>(gap), k_, m);
  }
}

std::optional<std::span<const Letter>> KStirlingStream::next() {
  if (done_) return std::nullopt;
  if (started_) {
    unsigned m = n_;
    const unsigned first_free = static_cast<unsigned>(fixed_) + 2;
    while (m >= first_free && choice_[m] == k_ * (m - 1)) --m;
    if (m < first_free) {
      done_ = true;
      return std::nullopt;
    }
    if (m == n_) {
      // The newest block is contiguous: shift it one place left.
      const std::size_t gap = word_.size() - k_ - choice_[m];
      auto first = word_.begin() + static_cast<std::ptrdiff_t>(gap);
      std::rotate(first - 1, first, first + k_);
      ++choice_[m];
    } else {
      ++choice_[m];
      std::fill(choice_.begin() + m + 1, choice_.end(), 0);
      rebuild_from(m);
    }
  }
  started_ = true;
  return std::span<const Letter>(word_);
}

std::vector<Word> KStirlingStream::prefixes(unsigned n, unsigned k, unsigned depth) {
  depth = std::min(depth, n == 0 ? 0u : n - 1);
  std::vector<Word> out;
  Word cur(depth, 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = depth;
    // position i-1 holds level m = i+1, whose bound is k*i
    while (i > 0 && cur[i - 1] == k * i) cur[--i] = 0;
    if (i == 0) break;
    ++cur[i - 1];
  }
  return out;
}

// --- DualSetStream ---------------------------------------------------------

DualSetStream::DualSetStream(unsigned n, std::span<const Letter> prefix)
    : words_(n, 2, prefix), image_(2 * static_cast<std::size_t>(n)) {}

std::optional<std::span<const Letter>> DualSetStream::next() {
  auto w = words_.next();
  if (!w) return std::nullopt;
  preimage_ = *w;
  phi_into(preimage_, image_);
  return std::span<const Letter>(image_);
}

}  // namespace stirlab
