#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>

#include "stirlab/objects.hpp"
#include "stirlab/statistics.hpp"

using namespace stirlab;

namespace {

Word word(const std::string& digits) {
  Word w;
  for (char c : digits) w.push_back(static_cast<Letter>(c - '0'));
  return w;
}

template <class Stream>
std::vector<Word> drain(Stream s) {
  std::vector<Word> out;
  while (auto v = s.next()) out.emplace_back(v->begin(), v->end());
  return out;
}

// Every pair of equal letters must enclose only letters at least as large.
bool stirling_all_pairs(const Word& w) {
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = a + 1; b < w.size(); ++b)
      if (w[a] == w[b])
        for (std::size_t c = a + 1; c < b; ++c)
          if (w[c] < w[a]) return false;
  return true;
}

std::set<Word> stirling_oracle(unsigned n, unsigned k) {
  Word w;
  for (Letter i = 1; i <= n; ++i) w.insert(w.end(), k, i);
  std::set<Word> out;
  do {
    if (stirling_all_pairs(w)) out.insert(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

}  // namespace

TEST_CASE("enum_permutations") {
  CHECK(drain(PermutationStream(1)) == std::vector<Word>{word("1")});
  CHECK(drain(PermutationStream(2)) == std::vector<Word>{word("12"), word("21")});
  const auto four = drain(PermutationStream(4));
  CHECK(four.size() == 24);
  CHECK(four.front() == word("1234"));
  CHECK(four.back() == word("4321"));
  CHECK(std::is_sorted(four.begin(), four.end()));
}

TEST_CASE("enum_inversion_sequences") {
  CHECK(drain(InversionSequenceStream(2, 1)) == std::vector<Word>{word("00"), word("01")});
  CHECK(drain(InversionSequenceStream(1, 7)) == std::vector<Word>{word("0")});
  const auto seqs = drain(InversionSequenceStream(3, 2));
  CHECK(seqs.size() == 15);
  for (const auto& e : seqs) CHECK(is_inversion_sequence(e, 2));
  CHECK(std::set<Word>(seqs.begin(), seqs.end()).size() == 15);
}

TEST_CASE("enum_k_stirling") {
  CHECK(drain(KStirlingStream(2, 2)) == std::vector<Word>{word("1122"), word("1221"), word("2211")});
  CHECK(drain(KStirlingStream(1, 3)) == std::vector<Word>{word("111")});
  const auto q32 = drain(KStirlingStream(3, 2));
  CHECK(q32.size() == 15);
  CHECK(std::set<Word>(q32.begin(), q32.end()).size() == 15);
}

TEST_CASE("is_k_stirling") {
  CHECK(is_k_stirling(word("1221"), 2, 2));
  CHECK_FALSE(is_k_stirling(word("1212"), 2, 2));
  CHECK(is_k_stirling(word("112233321"), 3, 3));
  CHECK_FALSE(is_k_stirling(word("1122"), 2, 3));
  CHECK_FALSE(is_k_stirling(word("1133"), 2, 2));
  CHECK_THROWS_AS(KStirlingWord(word("1212"), 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(Permutation(word("112")), std::invalid_argument);
  CHECK_THROWS_AS(InversionSequence(word("01"), 0), std::invalid_argument);
  CHECK_THROWS_AS(InversionSequence(word("03"), 2), std::invalid_argument);
}

TEST_CASE("streams match an independent multiset oracle") {
  for (unsigned k = 1; k <= 3; ++k) {
    const unsigned n_max = k == 1 ? 6 : (k == 2 ? 5 : 4);
    for (unsigned n = 1; n <= n_max; ++n) {
      CAPTURE(n);
      CAPTURE(k);
      const auto got = drain(KStirlingStream(n, k));
      const std::set<Word> as_set(got.begin(), got.end());
      CHECK(as_set.size() == got.size());
      CHECK(as_set == stirling_oracle(n, k));
      CHECK(got.size() == k_stirling_count(n, k));
      for (const auto& w : got) CHECK(is_k_stirling(w, n, k));
    }
  }
}

TEST_CASE("counts for n <= 7, k <= 3") {
  for (unsigned k = 1; k <= 3; ++k)
    for (unsigned n = 1; n <= 7; ++n) {
      if (k == 3 && n == 7) continue;
      std::set<Word> seen;
      std::size_t count = 0;
      KStirlingStream s(n, k);
      while (auto w = s.next()) {
        ++count;
        CHECK(is_k_stirling(*w, n, k));
        seen.emplace(w->begin(), w->end());
      }
      CHECK(count == k_stirling_count(n, k));
      CHECK(seen.size() == count);
    }
  CHECK(k_stirling_count(4, 2) == 105);
  CHECK(inversion_sequence_count(3, 2) == 15);
  CHECK(permutation_count(10) == 3628800);
}

TEST_CASE("Q_n(1) is the symmetric group") {
  for (unsigned n = 1; n <= 6; ++n) {
    auto a = drain(KStirlingStream(n, 1));
    auto b = drain(PermutationStream(n));
    std::sort(a.begin(), a.end());
    CHECK(a == b);
  }
}

TEST_CASE("shards concatenate to the full stream") {
  for (unsigned depth = 0; depth <= 3; ++depth) {
    CAPTURE(depth);
    std::vector<Word> cat;
    for (const auto& p : PermutationStream::prefixes(5, depth)) {
      auto part = drain(PermutationStream(5, p));
      cat.insert(cat.end(), part.begin(), part.end());
    }
    CHECK(cat == drain(PermutationStream(5)));

    cat.clear();
    for (const auto& p : InversionSequenceStream::prefixes(5, 2, depth)) {
      auto part = drain(InversionSequenceStream(5, 2, p));
      cat.insert(cat.end(), part.begin(), part.end());
    }
    CHECK(cat == drain(InversionSequenceStream(5, 2)));

    cat.clear();
    for (const auto& p : KStirlingStream::prefixes(5, 2, depth)) {
      auto part = drain(KStirlingStream(5, 2, p));
      cat.insert(cat.end(), part.begin(), part.end());
    }
    CHECK(cat == drain(KStirlingStream(5, 2)));

    cat.clear();
    for (const auto& p : DualSetStream::prefixes(4, depth)) {
      auto part = drain(DualSetStream(4, p));
      cat.insert(cat.end(), part.begin(), part.end());
    }
    CHECK(cat == drain(DualSetStream(4)));
  }
}

TEST_CASE("streams are deterministic") {
  CHECK(drain(KStirlingStream(5, 3)) == drain(KStirlingStream(5, 3)));
  CHECK(drain(DualSetStream(4)) == drain(DualSetStream(4)));
  CHECK(drain(InversionSequenceStream(5, 3)) == drain(InversionSequenceStream(5, 3)));
}

TEST_CASE("phi") {
  CHECK(phi(KStirlingWord(word("221331"), 3, 2)) == Permutation(word("432651")));
  CHECK(phi(KStirlingWord(word("11"), 1, 2)) == Permutation(word("21")));
  CHECK(phi(KStirlingWord(word("1122"), 2, 2)) == Permutation(word("2143")));
  CHECK_THROWS_AS(phi(KStirlingWord(word("111"), 1, 3)), std::invalid_argument);
}

TEST_CASE("phi_inverse") {
  CHECK(phi_inverse(Permutation(word("432651"))) == KStirlingWord(word("221331"), 3, 2));
  CHECK(phi_inverse(Permutation(word("2143"))) == KStirlingWord(word("1122"), 2, 2));
  CHECK_FALSE(phi_inverse(Permutation(word("1234"))).has_value());
  CHECK_FALSE(phi_inverse(Permutation(word("2413"))).has_value());
  CHECK_THROWS_AS(phi_inverse(Permutation(word("213"))), std::invalid_argument);
}

TEST_CASE("enum dual pairs images with preimages") {
  DualSetStream s(2);
  std::vector<std::pair<Word, Word>> pairs;
  while (auto pi = s.next()) pairs.emplace_back(Word(s.preimage().begin(), s.preimage().end()), Word(pi->begin(), pi->end()));
  REQUIRE(pairs.size() == 3);
  CHECK(pairs[0] == std::pair{word("1122"), word("2143")});
  CHECK(pairs[1] == std::pair{word("1221"), word("2431")});
  CHECK(pairs[2] == std::pair{word("2211"), word("4321")});
}

TEST_CASE("phi round trips and the dual set ends in a descent") {
  for (unsigned n = 1; n <= 6; ++n) {
    std::set<Word> images;
    KStirlingStream s(n, 2);
    while (auto w = s.next()) {
      const KStirlingWord sigma(Word(w->begin(), w->end()), n, 2);
      const Permutation pi = phi(sigma);
      images.emplace(pi.values().begin(), pi.values().end());
      const auto back = phi_inverse(pi);
      REQUIRE(back.has_value());
      CHECK(*back == sigma);
      CHECK(pi[2 * n - 2] > pi[2 * n - 1]);
      CHECK(asc_word(sigma.letters()) == asc_word(pi.values()));
    }
    CHECK(images.size() == k_stirling_count(n, 2));
  }
  // phi o phi_inverse is the identity on the image, and the image is exactly
  // the set of permutations with a preimage.
  for (unsigned n = 1; n <= 4; ++n) {
    std::size_t in_image = 0;
    PermutationStream s(2 * n);
    while (auto v = s.next()) {
      const Permutation pi(Word(v->begin(), v->end()));
      if (auto sigma = phi_inverse(pi)) {
        ++in_image;
        CHECK(phi(*sigma) == pi);
      }
    }
    CHECK(in_image == k_stirling_count(n, 2));
  }
}
