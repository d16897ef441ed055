#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stirlab/polynomial.hpp"

namespace stirlab {

// ---------------------------------------------------------------------------
// Polynomial families. Every brute-force route takes a `jobs` argument for the
// parallel fold (0 = hardware concurrency); results never depend on it.
// ---------------------------------------------------------------------------

/// A_n^(k)(x) from the coefficient recurrence
/// a_{n+1,j} = (1 + kj) a_{n,j} + k(n - j + 1) a_{n,j-1}, a_{1,0} = 1.
IntPolynomial dist_A_recurrence(unsigned n, unsigned k);
/// sum over S_n of x^exc k^(n - cyc).
IntPolynomial dist_A_exc_cyc(unsigned n, unsigned k, unsigned jobs = 0);
/// sum over I_{n,k} of x^asc.
IntPolynomial dist_A_invseq(unsigned n, unsigned k, unsigned jobs = 0);
/// sum over Q_n(k) of x^ap; k >= 2.
IntPolynomial dist_A_ap(unsigned n, unsigned k, unsigned jobs = 0);

/// x^n A_n^(k)(1/x) from b_{n+1,j} = kj b_{n,j} + (kn - kj + k + 1) b_{n,j-1}, b_{1,1} = 1.
IntPolynomial dist_B_recurrence(unsigned n, unsigned k);
/// sum over Q_n(k) of x^ap0; k >= 2.
IntPolynomial dist_B_ap0(unsigned n, unsigned k, unsigned jobs = 0);

/// sum over S_n of x^exc q^cyc.
BivariatePolynomial dist_A_bivariate(unsigned n, unsigned jobs = 0);
/// One step A_n(x;q) -> A_{n+1}(x;q) = (nx + q) A_n + x(1 - x) dA_n/dx.
BivariatePolynomial recurrence_axq_step(const BivariatePolynomial& a_n, unsigned n);
/// k^n A_n(x; 1/k), evaluated exactly over the rationals.
IntPolynomial specialize_q_inverse_k(const BivariatePolynomial& a_n, unsigned n, unsigned k);

/// Signless Stirling numbers of the first kind as prod_{i=0}^{n-1} (x + i).
IntPolynomial stirling_first_row(unsigned n);
/// Same row counted by cycles over S_n.
IntPolynomial stirling_first_row_by_cycles(unsigned n, unsigned jobs = 0);
/// prod_{i=1}^{n-1} (ik + 1).
BigInt rising_product(unsigned n, unsigned k);

/// Second-order Eulerian polynomial: ascents over the dual set Phi(Q_n(2)).
IntPolynomial dist_P_asc(unsigned n, unsigned jobs = 0);
/// Ascents over Q_n(2) directly.
IntPolynomial dist_P_asc_words(unsigned n, unsigned jobs = 0);

/// Interior peaks over Phi(Q_n(2)).
IntPolynomial dist_A2_ipk(unsigned n, unsigned jobs = 0);
/// Left peaks over Phi(Q_n(2)).
IntPolynomial dist_A2_lpk(unsigned n, unsigned jobs = 0);

/// C_n from (1 + x) C_n(x) = x A_n^(2)(x^2) + x^{2n} A_n^(2)(1/x^2), C_0 = 1.
IntPolynomial C_from_def(unsigned n);
/// Alternating runs over Phi(Q_n(2)).
IntPolynomial dist_C_run(unsigned n, unsigned jobs = 0);

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

struct Counterexample {
  std::string params;
  std::string lhs_label;
  std::string lhs;
  std::string rhs_label;
  std::string rhs;
};

struct VerificationReport {
  std::string check;
  std::string ranges;
  bool passed = true;
  std::uint64_t cases = 0;
  std::optional<Counterexample> counterexample;
  std::vector<std::string> notes;

  /// Records one comparison. The first mismatch is kept; callers iterate in
  /// increasing parameter order, so it is the smallest failing case.
  template <class T>
  bool expect_equal(const std::string& params, const std::string& lhs_label, const T& lhs,
                    const std::string& rhs_label, const T& rhs);
  bool expect(const std::string& params, const std::string& what, bool ok);
};

template <class T>
bool VerificationReport::expect_equal(const std::string& params, const std::string& lhs_label, const T& lhs,
                                      const std::string& rhs_label, const T& rhs) {
  ++cases;
  if (lhs == rhs) return true;
  if (passed) {
    passed = false;
    counterexample = Counterexample{params, lhs_label, to_string(lhs), rhs_label, to_string(rhs)};
  }
  return false;
}

/// One (k, n_max) slice of the brute-force matrix.
struct RouteBound {
  unsigned k;
  unsigned n_max;
};

/// n <= 7 for k = 2, n <= 6 for k = 3, n <= 5 for k = 4.
std::vector<RouteBound> quick_bounds();
/// One step larger in n for every k.
std::vector<RouteBound> full_bounds();

/// Recurrence, exc/cyc, inversion-sequence and ascent-plateau routes agree.
VerificationReport check_four_routes(const std::vector<RouteBound>& bounds, unsigned jobs = 0);
/// Ascent-plateaux over Q_n(k) give A_n^(k).
VerificationReport check_theorem1(const std::vector<RouteBound>& bounds, unsigned jobs = 0);
/// ap0 over Q_n(k) and the b-recurrence both give the reversal of A_n^(k).
VerificationReport check_theorem2(const std::vector<RouteBound>& bounds, unsigned jobs = 0);
/// ipk and lpk over the dual set give A_n^(2) and its reversal.
VerificationReport check_theorem3(unsigned n_max, unsigned jobs = 0);
/// Alternating runs over the dual set give C_n.
VerificationReport check_theorem4(unsigned n_max, unsigned jobs = 0);
/// (sum_{n<=N} A_n^(k) z^n/n!)^k (e^{kz(x-1)} - x) = 1 - x + O(z^{N+1}).
VerificationReport check_egf_A(unsigned k, unsigned order);
/// Same identity for caller-supplied terms A_0..A_N (N = terms.size() - 1).
VerificationReport check_egf_A(unsigned k, const std::vector<IntPolynomial>& terms);
/// G^2 (e^{2z(x^2-1)} - x^2) = (1 - x^2)(e^{z(x^2-1)} + x)^2 + O(z^{N+1}),
/// where G = (1 + x) sum_{n<=N} C_n z^n/n!.
VerificationReport check_egf_C(unsigned order);
/// Same identity for caller-supplied terms C_0..C_N.
VerificationReport check_egf_C(const std::vector<IntPolynomial>& terms);
/// The A_n(x;q) recurrence links consecutive brute-force distributions, and
/// iterating it from A_1 = q reproduces them.
VerificationReport check_recurrence_axq(unsigned n_max, unsigned jobs = 0);
/// k^n A_n(x; 1/k) equals A_n^(k) from the recurrence.
VerificationReport check_bivariate_specialization(unsigned n_max, unsigned k_max, unsigned jobs = 0);
/// A_n^(k)(1) = prod (ik + 1) via the recurrence.
VerificationReport check_total_count(unsigned n_max, unsigned k_max);
/// Stirling first-kind rows by product and by cycle counting.
VerificationReport check_stirling_first(unsigned n_max, unsigned jobs = 0);
/// Every stream yields the expected number of objects, all distinct and valid.
VerificationReport check_enum_counts(const std::vector<RouteBound>& bounds);
/// Inversion-sequence, ascent-plateau and exc/cyc sums agree for 2 <= k <= k_max.
VerificationReport verify_identity_13_14(unsigned n_max, unsigned k_max, unsigned jobs = 0);
/// Phi is injective with phi_inverse as inverse, preserves ascents; every
/// image ends in a descent, has run = ipk + lpk and lpk - ipk in {0, 1}; every
/// Stirling word has its consecutive length-3 factors in the 8-pattern set.
VerificationReport check_dual_set_structure(unsigned n_max);
/// asc + plateau + descents = nk - 1 and ap <= ap0 <= ap + 1 (with equality
/// on the right exactly when the word opens with a full block).
VerificationReport check_word_statistics(const std::vector<RouteBound>& bounds);
/// x^{2n} C_n(1/x) = C_n(x).
VerificationReport check_C_palindromic(unsigned n_max);
/// Ascents over Q_n(2) and over Phi(Q_n(2)) agree.
VerificationReport check_second_order_eulerian(unsigned n_max, unsigned jobs = 0);

}  // namespace stirlab
