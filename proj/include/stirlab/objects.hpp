#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace stirlab {

using Letter = std::uint32_t;
using Word = std::vector<Letter>;

/// A permutation of [n] in one-line notation, values 1..n.
class Permutation {
 public:
  /// Throws std::invalid_argument unless `values` is a permutation of 1..n.
  explicit Permutation(Word values);

  std::size_t size() const { return values_.size(); }
  std::span<const Letter> values() const { return values_; }
  Letter operator[](std::size_t i) const { return values_[i]; }
  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  Word values_;
};

bool is_permutation(std::span<const Letter> values);

/// e_1..e_n with 0 <= e_i <= (i-1)k.
class InversionSequence {
 public:
  InversionSequence(Word entries, unsigned k);

  std::size_t size() const { return entries_.size(); }
  unsigned k() const { return k_; }
  std::span<const Letter> entries() const { return entries_; }
  friend bool operator==(const InversionSequence&, const InversionSequence&) = default;

 private:
  Word entries_;
  unsigned k_;
};

bool is_inversion_sequence(std::span<const Letter> entries, unsigned k);

/// A k-Stirling permutation of order n: each letter 1..n appears k times and
/// every letter between two occurrences of i is at least i.
class KStirlingWord {
 public:
  KStirlingWord(Word letters, unsigned n, unsigned k);

  unsigned n() const { return n_; }
  unsigned k() const { return k_; }
  std::span<const Letter> letters() const { return letters_; }
  friend bool operator==(const KStirlingWord&, const KStirlingWord&) = default;

 private:
  Word letters_;
  unsigned n_;
  unsigned k_;
};

/// Membership in Q_n(k). Only consecutive occurrences of each letter are
/// compared, which is equivalent to checking every pair.
bool is_k_stirling(std::span<const Letter> word, unsigned n, unsigned k);

/// |S_n| = n!.
boost::multiprecision::cpp_int permutation_count(unsigned n);
/// |I_{n,k}| = prod_{i=1}^{n} ((i-1)k + 1).
boost::multiprecision::cpp_int inversion_sequence_count(unsigned n, unsigned k);
/// |Q_n(k)| = prod_{i=1}^{n-1} (ik + 1).
boost::multiprecision::cpp_int k_stirling_count(unsigned n, unsigned k);

/// The relabelling of Q_n(2) into S_{2n}: the first occurrence of j becomes 2j,
/// the second becomes 2j - 1. `out` must have the same length as `word`.
void phi_into(std::span<const Letter> word, std::span<Letter> out);
/// Throws std::invalid_argument unless sigma.k() == 2.
Permutation phi(const KStirlingWord& sigma);

/// Preimage under phi, or nullopt when pi is not in the dual set.
/// Throws std::invalid_argument for odd length.
std::optional<KStirlingWord> phi_inverse(const Permutation& pi);

// ---------------------------------------------------------------------------
// Streams
//
// Each stream is pull-based: next() returns a view of the current object that
// stays valid until the following call, or nullopt when exhausted. A stream
// may be restricted to a shard by fixing a prefix of its enumeration code;
// concatenating the shards returned by prefixes(depth) in order reproduces the
// unrestricted stream exactly.
// ---------------------------------------------------------------------------

/// All permutations of [n] in lexicographic order. The code is the leading
/// values of the permutation.
class PermutationStream {
 public:
  explicit PermutationStream(unsigned n, std::span<const Letter> prefix = {});

  std::optional<std::span<const Letter>> next();

  static std::vector<Word> prefixes(unsigned n, unsigned depth);

 private:
  Word current_;
  std::size_t fixed_;
  bool started_ = false;
  bool done_ = false;
};

/// I_{n,k} in lexicographic order (an odometer with radix (i-1)k+1 at
/// position i). The code is the leading entries.
class InversionSequenceStream {
 public:
  InversionSequenceStream(unsigned n, unsigned k, std::span<const Letter> prefix = {});

  std::optional<std::span<const Letter>> next();

  static std::vector<Word> prefixes(unsigned n, unsigned k, unsigned depth);

 private:
  Word current_;
  unsigned k_;
  std::size_t fixed_;
  bool started_ = false;
  bool done_ = false;
};

/// Q_n(k) built by inserting the block m^k into a word of order m-1, for
/// m = 2..n. The code is the sequence of insertion choices c_2..c_n with
/// 0 <= c_m <= k(m-1), where c_m counts the letters left to the right of the
/// inserted block. Enumeration is depth-first with each choice ascending, so
/// Q_2(2) comes out as 1122, 1221, 2211.
class KStirlingStream {
 public:
  KStirlingStream(unsigned n, unsigned k, std::span<const Letter> prefix = {});

  std::optional<std::span<const Letter>> next();

  static std::vector<Word> prefixes(unsigned n, unsigned k, unsigned depth);

 private:
  void rebuild_from(unsigned level);

  unsigned n_;
  unsigned k_;
  std::vector<Letter> choice_;  // choice_[m] for m = 2..n
  std::size_t fixed_;           // levels 2..fixed_+1 are pinned
  Word word_;
  bool started_ = false;
  bool done_ = false;
};

/// Phi(Q_n(2)) in the order of KStirlingStream(n, 2). next() yields the
/// permutation; preimage() is the Stirling word it came from.
class DualSetStream {
 public:
  explicit DualSetStream(unsigned n, std::span<const Letter> prefix = {});

  std::optional<std::span<const Letter>> next();
  std::span<const Letter> preimage() const { return preimage_; }

  static std::vector<Word> prefixes(unsigned n, unsigned depth) { return KStirlingStream::prefixes(n, 2, depth); }

 private:
  KStirlingStream words_;
  std::span<const Letter> preimage_;
  Word image_;
};

}  // namespace stirlab
