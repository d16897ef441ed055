#include <doctest.h>

#include <algorithm>
#include <string>

#include "stirlab/objects.hpp"
#include "stirlab/statistics.hpp"

using namespace stirlab;

namespace {

Word w(const std::string& digits) {
  Word out;
  for (char c : digits) out.push_back(static_cast<Letter>(c - '0'));
  return out;
}

}  // namespace

TEST_CASE("asc_inv") {
  CHECK(asc_inv(w("00"), 1) == 0);
  CHECK(asc_inv(w("01"), 1) == 1);
  CHECK(asc_inv(w("020"), 2) == 1);
  CHECK(asc_inv(InversionSequence(w("020"), 2)) == 1);
  // 0/1 < 1/3 and 1/3 < 2/5
  CHECK(asc_inv(w("012"), 2) == 2);
}

TEST_CASE("ap") {
  CHECK(ap(w("112233321"), 3) == 1);
  CHECK(ap(w("333222111"), 3) == 0);
  CHECK(ap(w("44332211"), 2) == 0);
  CHECK(ap(w("1122"), 2) == 1);
  CHECK(ap(w("1221"), 2) == 1);
  CHECK(ap(w("2211"), 2) == 0);
  CHECK(ap(KStirlingWord(w("1221"), 2, 2)) == 1);
  CHECK_THROWS_AS(ap(w("12"), 1), std::invalid_argument);
}

TEST_CASE("ap0") {
  CHECK(ap0(w("112332"), 2) == 2);
  CHECK(ap0(w("1122"), 2) == 2);
  CHECK(ap0(w("1221"), 2) == 1);
  CHECK(ap0(w("2211"), 2) == 1);
  CHECK(ap0(w("111"), 3) == 1);
  CHECK_THROWS_AS(ap0(w("12"), 1), std::invalid_argument);
}

TEST_CASE("exc and cyc") {
  CHECK(exc(w("1234")) == 0);
  CHECK(exc(w("21")) == 1);
  CHECK(exc(w("231")) == 2);
  CHECK(cyc(w("12345")) == 5);
  CHECK(cyc(w("21")) == 1);
  CHECK(cyc(w("312")) == 1);
  CHECK(cyc(Permutation(w("2143"))) == 2);
}

TEST_CASE("asc_word and plateau") {
  CHECK(asc_word(w("1122")) == 1);
  CHECK(plateau(w("1122")) == 2);
  CHECK(asc_word(w("2211")) == 0);
  CHECK(asc_word(w("221331")) == 1);
  CHECK(asc_word(w("432651")) == 1);
  CHECK(descents(w("221331")) == 2);
}

TEST_CASE("peaks") {
  CHECK(ipk(w("21435")) == 1);
  CHECK(ipk(w("12345")) == 0);
  CHECK(ipk(w("2143")) == 1);
  CHECK(lpk(w("21435")) == 2);
  CHECK(lpk(w("12345")) == 0);
  CHECK(lpk(w("4321")) == 1);
  CHECK(lpk(w("1")) == 0);
}

TEST_CASE("runs") {
  CHECK(runs(w("214653")) == 3);
  CHECK(runs(w("12345")) == 1);
  CHECK(runs(w("54321")) == 1);
  CHECK(runs(w("2143")) == 3);
  CHECK_THROWS_AS(runs(w("1")), std::invalid_argument);
}

TEST_CASE("lpk dominates ipk by at most one") {
  for (unsigned n = 1; n <= 6; ++n) {
    PermutationStream s(n);
    while (auto p = s.next()) {
      const unsigned i = ipk(*p), l = lpk(*p);
      CHECK(l >= i);
      CHECK(l - i <= 1);
      if (n == 1 || (*p)[0] < (*p)[1]) CHECK(l == i);
    }
  }
}

TEST_CASE("ascents, plateaux and descents partition the gaps") {
  for (unsigned k = 2; k <= 3; ++k)
    for (unsigned n = 1; n <= 5; ++n) {
      KStirlingStream s(n, k);
      while (auto v = s.next()) {
        CHECK(asc_word(*v) + plateau(*v) + descents(*v) == n * k - 1);
        const unsigned a = ap(*v, k), a0 = ap0(*v, k);
        const bool opens_with_block = std::all_of(v->begin(), v->begin() + k, [&](Letter x) { return x == (*v)[0]; });
        CHECK(a0 == a + (opens_with_block ? 1u : 0u));
      }
    }
}

TEST_CASE("asc_inv agrees with a floating-point division oracle") {
  InversionSequenceStream s(6, 3);
  while (auto e = s.next()) {
    unsigned expected = 0;
    for (std::size_t i = 1; i < e->size(); ++i) {
      const double lhs = static_cast<double>((*e)[i - 1]) / ((i - 1) * 3 + 1);
      const double rhs = static_cast<double>((*e)[i]) / (i * 3 + 1);
      if (lhs < rhs) ++expected;
    }
    CHECK(asc_inv(*e, 3) == expected);
  }
}

TEST_CASE("consecutive length-3 factors of Stirling words") {
  CHECK(consecutive_patterns_in_stirling_set(w("221331")));
  CHECK_FALSE(consecutive_patterns_in_stirling_set(w("132")));
  CHECK_FALSE(consecutive_patterns_in_stirling_set(w("231")));
  CHECK_FALSE(consecutive_patterns_in_stirling_set(w("121")));
  for (unsigned n = 1; n <= 6; ++n) {
    KStirlingStream s(n, 2);
    while (auto v = s.next()) CHECK(consecutive_patterns_in_stirling_set(*v));
  }
}
