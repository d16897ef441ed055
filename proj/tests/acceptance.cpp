// Prints one PASS/FAIL line per acceptance criterion and exits nonzero if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "stirlab/identities.hpp"
#include "stirlab/objects.hpp"

using namespace stirlab;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
  void require(const VerificationReport& r) {
    if (r.passed || !ok) return;
    ok = false;
    detail = r.check + " [" + r.ranges + "]";
    if (r.counterexample)
      detail += " at " + r.counterexample->params + ": " + r.counterexample->lhs + " vs " + r.counterexample->rhs;
  }
};

bool run_criterion(int id, const char* title, double limit_seconds, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_seconds > 0) o.require(secs < limit_seconds, "exceeded the time limit");
  std::printf("%s criterion %d: %s (%.3f s%s)%s%s\n", o.ok ? "PASS" : "FAIL", id, title, secs,
              limit_seconds > 0 ? (", limit " + std::to_string(static_cast<int>(limit_seconds)) + " s").c_str() : "",
              o.ok ? "" : " :: ", o.detail.c_str());
  std::fflush(stdout);
  return o.ok;
}

IntPolynomial poly(std::initializer_list<int> c) {
  std::vector<BigInt> v(c.begin(), c.end());
  return IntPolynomial(std::move(v));
}

}  // namespace

int main() {
  const auto bounds = quick_bounds();
  bool all = true;

  all &= run_criterion(1, "C_1..C_5 match the printed rows", 1.0, [](Outcome& o) {
    const std::vector<IntPolynomial> printed{
        poly({0, 1}),
        poly({0, 1, 1, 1}),
        poly({0, 1, 3, 7, 3, 1}),
        poly({0, 1, 7, 29, 31, 29, 7, 1}),
        poly({0, 1, 15, 101, 195, 321, 195, 101, 15, 1}),
    };
    for (unsigned n = 1; n <= 5; ++n)
      o.require(C_from_def(n) == printed[n - 1], "C_" + std::to_string(n) + " = " + to_string(C_from_def(n)));
  });

  all &= run_criterion(2, "four routes agree for A_n^(k), sequential and parallel", 60.0, [&](Outcome& o) {
    o.require(check_four_routes(bounds, 1));
    for (const auto& b : bounds)
      for (unsigned n = 1; n <= b.n_max; ++n) {
        const std::string at = "n=" + std::to_string(n) + ",k=" + std::to_string(b.k);
        o.require(dist_A_exc_cyc(n, b.k, 1) == dist_A_exc_cyc(n, b.k, 4), "exc-cyc jobs differ at " + at);
        o.require(dist_A_invseq(n, b.k, 1) == dist_A_invseq(n, b.k, 4), "invseq jobs differ at " + at);
        if (b.k >= 2) o.require(dist_A_ap(n, b.k, 1) == dist_A_ap(n, b.k, 4), "ap jobs differ at " + at);
      }
  });

  all &= run_criterion(3, "ap0 over Q0_n(k) equals the reversal and the b-recurrence", 0, [&](Outcome& o) {
    o.require(check_theorem2(bounds, 0));
  });

  all &= run_criterion(4, "ipk and lpk over the dual set for n <= 7", 5.0, [](Outcome& o) {
    o.require(check_theorem3(7, 0));
    o.require(k_stirling_count(7, 2) == 135135, "|Q_7(2)| != 135135");
  });

  all &= run_criterion(5, "alternating runs over the dual set give C_n for n <= 7", 0, [](Outcome& o) {
    o.require(check_theorem4(7, 0));
  });

  all &= run_criterion(6, "EGF identities at order 10", 5.0, [](Outcome& o) {
    for (unsigned k = 1; k <= 4; ++k) o.require(check_egf_A(k, 10));
    o.require(check_egf_C(10));
  });

  all &= run_criterion(7, "row sums and enumeration counts", 0, [&](Outcome& o) {
    o.require(check_total_count(20, 5));
    o.require(dist_A_recurrence(20, 2).evaluate(BigInt(1)) == BigInt("319830986772877770815625"),
              "A_20^(2)(1) != 39!!");
    o.require(check_enum_counts(bounds));
  });

  all &= run_criterion(8, "bivariate recurrence and q = 1/k specialization", 0, [](Outcome& o) {
    o.require(check_recurrence_axq(7, 0));
    o.require(check_bivariate_specialization(7, 4, 0));
  });

  all &= run_criterion(9, "structural properties of the dual set", 0, [&](Outcome& o) {
    o.require(check_dual_set_structure(6));
    o.require(check_word_statistics(bounds));
    o.require(check_C_palindromic(8));
    o.require(check_second_order_eulerian(7, 0));
    o.require(dist_P_asc(4) == poly({1, 22, 58, 24}), "P_4 = " + to_string(dist_P_asc(4)));
  });

  std::printf("%s\n", all ? "acceptance: all criteria passed" : "acceptance: FAILED");
  return all ? 0 : 1;
}
