#include "stirlab/identities.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "stirlab/fold.hpp"
#include "stirlab/objects.hpp"
#include "stirlab/series.hpp"
#include "stirlab/statistics.hpp"

namespace stirlab {

namespace {

std::string nk(unsigned n, unsigned k) { return "n=" + std::to_string(n) + ",k=" + std::to_string(k); }
std::string nonly(unsigned n) { return "n=" + std::to_string(n); }

void require_n(unsigned n) {
  if (n == 0) throw std::invalid_argument("n must be >= 1");
}
void require_k(unsigned k) {
  if (k == 0) throw std::invalid_argument("k must be >= 1");
}
void require_k2(unsigned k) {
  if (k < 2) throw std::invalid_argument("ascent-plateau routes require k >= 2");
}

std::vector<Word> permutation_shards(unsigned n, unsigned jobs) {
  const unsigned depth = choose_shard_depth(jobs, n, [n](unsigned d) {
    std::size_t c = 1;
    for (unsigned i = 0; i < d; ++i) c *= n - i;
    return c;
  });
  return PermutationStream::prefixes(n, depth);
}

std::vector<Word> invseq_shards(unsigned n, unsigned k, unsigned jobs) {
  const unsigned depth = choose_shard_depth(jobs, n, [k](unsigned d) {
    std::size_t c = 1;
    for (unsigned i = 0; i < d; ++i) c *= static_cast<std::size_t>(i) * k + 1;
    return c;
  });
  return InversionSequenceStream::prefixes(n, k, depth);
}

std::vector<Word> kstirling_shards(unsigned n, unsigned k, unsigned jobs) {
  const unsigned depth = choose_shard_depth(jobs, n - 1, [k](unsigned d) {
    std::size_t c = 1;
    for (unsigned i = 1; i <= d; ++i) c *= static_cast<std::size_t>(i) * k + 1;
    return c;
  });
  return KStirlingStream::prefixes(n, k, depth);
}

/// Joint (exc, cyc) counts over S_n.
Histogram2D exc_cyc_histogram(unsigned n, unsigned jobs) {
  return parallel_fold<Histogram2D>(
      permutation_shards(n, jobs), jobs, [n](std::span<const Letter> p) { return PermutationStream(n, p); },
      [](Histogram2D& h, std::span<const Letter> pi) { h.add(exc(pi), cyc(pi)); });
}

template <class Statistic>
IntPolynomial dual_set_distribution(unsigned n, unsigned jobs, Statistic stat) {
  require_n(n);
  return parallel_fold<Histogram>(
             kstirling_shards(n, 2, jobs), jobs, [n](std::span<const Letter> p) { return DualSetStream(n, p); },
             [&stat](Histogram& h, std::span<const Letter> pi) { h.add(stat(pi)); })
      .to_polynomial();
}

/// Packs short words into 128 bits so that distinctness of millions of
/// objects can be checked by sorting.
class DistinctWords {
 public:
  DistinctWords(std::size_t length, Letter max_letter) {
    unsigned bits = 1;
    while ((Letter{1} << bits) <= max_letter) ++bits;
    bits_ = bits;
    packed_ok_ = length * bits <= 128;
  }
  void add(std::span<const Letter> w) {
    if (packed_ok_) {
      unsigned __int128 code = 0;
      for (Letter v : w) code = (code << bits_) | v;
      packed_.push_back(code);
    } else {
      words_.emplace(w.begin(), w.end());
      ++added_;
    }
  }
  bool all_distinct() {
    if (!packed_ok_) return words_.size() == added_;
    std::sort(packed_.begin(), packed_.end());
    return std::adjacent_find(packed_.begin(), packed_.end()) == packed_.end();
  }

 private:
  unsigned bits_ = 1;
  bool packed_ok_ = true;
  std::vector<unsigned __int128> packed_;
  std::set<Word> words_;
  std::size_t added_ = 0;
};

}  // namespace

bool VerificationReport::expect(const std::string& params, const std::string& what, bool ok) {
  ++cases;
  if (ok) return true;
  if (passed) {
    passed = false;
    counterexample = Counterexample{params, what, "false", "expected", "true"};
  }
  return false;
}

// --- polynomial families ---------------------------------------------------

IntPolynomial dist_A_recurrence(unsigned n, unsigned k) {
  require_n(n);
  require_k(k);
  std::vector<BigInt> a{1};
  for (unsigned m = 1; m < n; ++m) {
    std::vector<BigInt> next(m + 1);
    for (unsigned j = 0; j <= m; ++j) {
      if (j < a.size()) next[j] += BigInt(1 + static_cast<std::uint64_t>(k) * j) * a[j];
      if (j >= 1) next[j] += BigInt(static_cast<std::uint64_t>(k) * (m - j + 1)) * a[j - 1];
    }
    a = std::move(next);
  }
  return IntPolynomial(std::move(a));
}

IntPolynomial dist_A_exc_cyc(unsigned n, unsigned k, unsigned jobs) {
  require_n(n);
  require_k(k);
  const auto joint = exc_cyc_histogram(n, jobs);
  std::vector<BigInt> out(joint.counts().size());
  for (std::size_t e = 0; e < joint.counts().size(); ++e)
    for (std::size_t c = 0; c < joint.counts()[e].size(); ++c) {
      if (joint.counts()[e][c] == 0) continue;
      out[e] += BigInt(joint.counts()[e][c]) * boost::multiprecision::pow(BigInt(k), static_cast<unsigned>(n - c));
    }
  return IntPolynomial(std::move(out));
}

IntPolynomial dist_A_invseq(unsigned n, unsigned k, unsigned jobs) {
  require_n(n);
  require_k(k);
  return parallel_fold<Histogram>(
             invseq_shards(n, k, jobs), jobs,
             [n, k](std::span<const Letter> p) { return InversionSequenceStream(n, k, p); },
             [k](Histogram& h, std::span<const Letter> e) { h.add(asc_inv(e, k)); })
      .to_polynomial();
}

IntPolynomial dist_A_ap(unsigned n, unsigned k, unsigned jobs) {
  require_n(n);
  require_k2(k);
  return parallel_fold<Histogram>(
             kstirling_shards(n, k, jobs), jobs,
             [n, k](std::span<const Letter> p) { return KStirlingStream(n, k, p); },
             [k](Histogram& h, std::span<const Letter> w) { h.add(ap(w, k)); })
      .to_polynomial();
}

IntPolynomial dist_B_recurrence(unsigned n, unsigned k) {
  require_n(n);
  require_k(k);
  std::vector<BigInt> b{0, 1};
  for (unsigned m = 1; m < n; ++m) {
    std::vector<BigInt> next(m + 2);
    for (unsigned j = 1; j <= m + 1; ++j) {
      if (j < b.size()) next[j] += BigInt(static_cast<std::uint64_t>(k) * j) * b[j];
      next[j] += BigInt(static_cast<std::uint64_t>(k) * (m - j + 1) + 1) * b[j - 1];
    }
    b = std::move(next);
  }
  return IntPolynomial(std::move(b));
}

IntPolynomial dist_B_ap0(unsigned n, unsigned k, unsigned jobs) {
  require_n(n);
  require_k2(k);
  return parallel_fold<Histogram>(
             kstirling_shards(n, k, jobs), jobs,
             [n, k](std::span<const Letter> p) { return KStirlingStream(n, k, p); },
             [k](Histogram& h, std::span<const Letter> w) { h.add(ap0(w, k)); })
      .to_polynomial();
}

BivariatePolynomial dist_A_bivariate(unsigned n, unsigned jobs) {
  require_n(n);
  return exc_cyc_histogram(n, jobs).to_polynomial();
}

BivariatePolynomial recurrence_axq_step(const BivariatePolynomial& a_n, unsigned n) {
  const BivariatePolynomial x = BivariatePolynomial::monomial(1, 1, 0);
  const BivariatePolynomial factor = BivariatePolynomial::monomial(n, 1, 0) + BivariatePolynomial::monomial(1, 0, 1);
  const BivariatePolynomial x_one_minus_x = x - BivariatePolynomial::monomial(1, 2, 0);
  return factor * a_n + x_one_minus_x * a_n.derivative_x();
}

IntPolynomial specialize_q_inverse_k(const BivariatePolynomial& a_n, unsigned n, unsigned k) {
  require_k(k);
  const RatPolynomial at = a_n.evaluate_q(Rational(BigInt(1), BigInt(k)));
  return to_integer(at * Rational(boost::multiprecision::pow(BigInt(k), n)));
}

IntPolynomial stirling_first_row(unsigned n) {
  IntPolynomial row = IntPolynomial::constant(1);
  for (unsigned i = 0; i < n; ++i) row *= IntPolynomial{BigInt(i), BigInt(1)};
  return row;
}

IntPolynomial stirling_first_row_by_cycles(unsigned n, unsigned jobs) {
  require_n(n);
  return parallel_fold<Histogram>(
             permutation_shards(n, jobs), jobs, [n](std::span<const Letter> p) { return PermutationStream(n, p); },
             [](Histogram& h, std::span<const Letter> pi) { h.add(cyc(pi)); })
      .to_polynomial();
}

BigInt rising_product(unsigned n, unsigned k) { return k_stirling_count(n, k); }

IntPolynomial dist_P_asc(unsigned n, unsigned jobs) {
  return dual_set_distribution(n, jobs, [](std::span<const Letter> pi) { return asc_word(pi); });
}

IntPolynomial dist_P_asc_words(unsigned n, unsigned jobs) {
  require_n(n);
  return parallel_fold<Histogram>(
             kstirling_shards(n, 2, jobs), jobs, [n](std::span<const Letter> p) { return KStirlingStream(n, 2, p); },
             [](Histogram& h, std::span<const Letter> w) { h.add(asc_word(w)); })
      .to_polynomial();
}

IntPolynomial dist_A2_ipk(unsigned n, unsigned jobs) {
  return dual_set_distribution(n, jobs, [](std::span<const Letter> pi) { return ipk(pi); });
}

IntPolynomial dist_A2_lpk(unsigned n, unsigned jobs) {
  return dual_set_distribution(n, jobs, [](std::span<const Letter> pi) { return lpk(pi); });
}

IntPolynomial C_from_def(unsigned n) {
  if (n == 0) return IntPolynomial::constant(1);
  const IntPolynomial a = dist_A_recurrence(n, 2);
  const IntPolynomial rhs = IntPolynomial::monomial(1, 1) * subst_xsq(a) + subst_xsq(reverse(a, n));
  return exact_div(rhs, IntPolynomial{1, 1});
}

IntPolynomial dist_C_run(unsigned n, unsigned jobs) {
  return dual_set_distribution(n, jobs, [](std::span<const Letter> pi) { return runs(pi); });
}

// --- verification ----------------------------------------------------------

std::vector<RouteBound> quick_bounds() { return {{1, 7}, {2, 7}, {3, 6}, {4, 5}}; }
std::vector<RouteBound> full_bounds() { return {{1, 8}, {2, 8}, {3, 7}, {4, 6}}; }

namespace {

VerificationReport make_report(std::string check, std::string ranges) {
  VerificationReport r;
  r.check = std::move(check);
  r.ranges = std::move(ranges);
  return r;
}

std::string describe(const std::vector<RouteBound>& bounds) {
  std::string s;
  for (const auto& b : bounds) {
    if (!s.empty()) s += "; ";
    s += "k=" + std::to_string(b.k) + ": n<=" + std::to_string(b.n_max);
  }
  return s;
}

}  // namespace

VerificationReport check_four_routes(const std::vector<RouteBound>& bounds, unsigned jobs) {
  auto r = make_report("four-routes", describe(bounds));
  for (const auto& b : bounds)
    for (unsigned n = 1; n <= b.n_max; ++n) {
      const auto rec = dist_A_recurrence(n, b.k);
      const auto p = nk(n, b.k);
      r.expect_equal(p, "recurrence", rec, "exc-cyc", dist_A_exc_cyc(n, b.k, jobs));
      r.expect_equal(p, "recurrence", rec, "invseq", dist_A_invseq(n, b.k, jobs));
      if (b.k >= 2) r.expect_equal(p, "recurrence", rec, "ap", dist_A_ap(n, b.k, jobs));
      r.expect_equal(p, "recurrence(1)", rec.evaluate(BigInt(1)), "prod(ik+1)", rising_product(n, b.k));
    }
  return r;
}

VerificationReport check_theorem1(const std::vector<RouteBound>& bounds, unsigned jobs) {
  auto r = make_report("thm1", describe(bounds));
  for (const auto& b : bounds) {
    if (b.k < 2) continue;
    for (unsigned n = 1; n <= b.n_max; ++n)
      r.expect_equal(nk(n, b.k), "ap", dist_A_ap(n, b.k, jobs), "recurrence", dist_A_recurrence(n, b.k));
  }
  return r;
}

VerificationReport check_theorem2(const std::vector<RouteBound>& bounds, unsigned jobs) {
  auto r = make_report("thm2", describe(bounds));
  for (const auto& b : bounds) {
    if (b.k < 2) continue;
    for (unsigned n = 1; n <= b.n_max; ++n) {
      const auto reversed = reverse(dist_A_recurrence(n, b.k), n);
      r.expect_equal(nk(n, b.k), "ap0", dist_B_ap0(n, b.k, jobs), "reverse(recurrence)", reversed);
      r.expect_equal(nk(n, b.k), "b-recurrence", dist_B_recurrence(n, b.k), "reverse(recurrence)", reversed);
    }
  }
  return r;
}

VerificationReport check_theorem3(unsigned n_max, unsigned jobs) {
  auto r = make_report("thm3", "n<=" + std::to_string(n_max));
  for (unsigned n = 1; n <= n_max; ++n) {
    const auto a = dist_A_recurrence(n, 2);
    r.expect_equal(nonly(n), "ipk", dist_A2_ipk(n, jobs), "A_n^(2)", a);
    r.expect_equal(nonly(n), "lpk", dist_A2_lpk(n, jobs), "reverse(A_n^(2))", reverse(a, n));
  }
  return r;
}

VerificationReport check_theorem4(unsigned n_max, unsigned jobs) {
  auto r = make_report("thm4", "n<=" + std::to_string(n_max));
  for (unsigned n = 1; n <= n_max; ++n)
    r.expect_equal(nonly(n), "run", dist_C_run(n, jobs), "C_from_def", C_from_def(n));
  return r;
}

VerificationReport check_egf_A(unsigned k, unsigned order) {
  std::vector<IntPolynomial> terms{IntPolynomial::constant(1)};
  for (unsigned n = 1; n <= order; ++n) terms.push_back(dist_A_recurrence(n, k));
  return check_egf_A(k, terms);
}

VerificationReport check_egf_A(unsigned k, const std::vector<IntPolynomial>& terms) {
  require_k(k);
  if (terms.empty()) throw std::invalid_argument("check_egf_A: need at least A_0");
  const std::size_t order = terms.size() - 1;
  auto r = make_report("egf-A", "k=" + std::to_string(k) + ", order=" + std::to_string(order));
  const ZSeries s = ZSeries::from_egf(terms, order);
  const RatPolynomial x{Rational(0), Rational(1)};
  const RatPolynomial exponent{Rational(-static_cast<long>(k)), Rational(k)};  // k(x - 1)
  const ZSeries lhs = series_pow(s, k) * (series_exp_linear(exponent, order) - ZSeries::constant(x, order));
  const ZSeries rhs = ZSeries::constant(RatPolynomial{Rational(1), Rational(-1)}, order);
  for (std::size_t m = 0; m <= order; ++m)
    r.expect_equal("k=" + std::to_string(k) + ",z^" + std::to_string(m), "lhs", lhs.coeff(m), "rhs", rhs.coeff(m));
  return r;
}

VerificationReport check_egf_C(unsigned order) {
  std::vector<IntPolynomial> terms;
  for (unsigned n = 0; n <= order; ++n) terms.push_back(C_from_def(n));
  return check_egf_C(terms);
}

VerificationReport check_egf_C(const std::vector<IntPolynomial>& terms) {
  if (terms.empty()) throw std::invalid_argument("check_egf_C: need at least C_0");
  const std::size_t order = terms.size() - 1;
  auto r = make_report("egf-C", "order=" + std::to_string(order));
  const RatPolynomial one_plus_x{Rational(1), Rational(1)};
  const RatPolynomial x{Rational(0), Rational(1)};
  const RatPolynomial x_sq{Rational(0), Rational(0), Rational(1)};
  const RatPolynomial x_sq_minus_one{Rational(-1), Rational(0), Rational(1)};
  const ZSeries g = ZSeries::from_egf(terms, order) * one_plus_x;
  const ZSeries lhs = g * g * (series_exp_linear(x_sq_minus_one * Rational(2), order) - ZSeries::constant(x_sq, order));
  const ZSeries e_plus_x = series_exp_linear(x_sq_minus_one, order) + ZSeries::constant(x, order);
  const ZSeries rhs = e_plus_x * e_plus_x * RatPolynomial{Rational(1), Rational(0), Rational(-1)};
  for (std::size_t m = 0; m <= order; ++m)
    r.expect_equal("z^" + std::to_string(m), "lhs", lhs.coeff(m), "rhs", rhs.coeff(m));
  return r;
}

VerificationReport check_recurrence_axq(unsigned n_max, unsigned jobs) {
  auto r = make_report("axq", "n<=" + std::to_string(n_max));
  std::vector<BivariatePolynomial> brute;
  for (unsigned n = 1; n <= n_max; ++n) brute.push_back(dist_A_bivariate(n, jobs));
  for (unsigned n = 1; n < n_max; ++n)
    r.expect_equal(nonly(n + 1), "step(brute A_n)", recurrence_axq_step(brute[n - 1], n), "brute", brute[n]);

  BivariatePolynomial seeded = BivariatePolynomial::monomial(1, 0, 1);
  for (unsigned n = 1; n <= n_max; ++n) {
    r.expect_equal(nonly(n), "recurrence from A_1=q", seeded, "brute", brute[n - 1]);
    seeded = recurrence_axq_step(seeded, n);
  }
  if (n_max >= 2) {
    const auto from_one = recurrence_axq_step(BivariatePolynomial::monomial(1, 0, 0), 1);
    r.notes.push_back("seed A_1(x;q) = q (the direct sum over S_1); seeding with A_1 = 1 would give A_2 = " +
                      to_string(from_one) + " instead of " + to_string(brute[1]) +
                      " (rows indexed by power of x, columns by power of q)");
  }
  return r;
}

VerificationReport check_bivariate_specialization(unsigned n_max, unsigned k_max, unsigned jobs) {
  auto r = make_report("axq-specialization", "n<=" + std::to_string(n_max) + ", k<=" + std::to_string(k_max));
  for (unsigned n = 1; n <= n_max; ++n) {
    const auto a = dist_A_bivariate(n, jobs);
    for (unsigned k = 1; k <= k_max; ++k)
      r.expect_equal(nk(n, k), "k^n A_n(x;1/k)", specialize_q_inverse_k(a, n, k), "recurrence", dist_A_recurrence(n, k));
  }
  return r;
}

VerificationReport check_total_count(unsigned n_max, unsigned k_max) {
  auto r = make_report("counts", "n<=" + std::to_string(n_max) + ", k<=" + std::to_string(k_max));
  for (unsigned n = 1; n <= n_max; ++n)
    for (unsigned k = 1; k <= k_max; ++k)
      r.expect_equal(nk(n, k), "A_n^(k)(1)", dist_A_recurrence(n, k).evaluate(BigInt(1)), "prod(ik+1)",
                     rising_product(n, k));
  if (n_max >= 1 && k_max >= 2)
    r.notes.push_back("A_" + std::to_string(n_max) + "^(2)(1) = " + rising_product(n_max, 2).str());
  return r;
}

VerificationReport check_stirling_first(unsigned n_max, unsigned jobs) {
  auto r = make_report("stirling1", "n<=" + std::to_string(n_max));
  for (unsigned n = 1; n <= n_max; ++n) {
    const auto row = stirling_first_row(n);
    r.expect_equal(nonly(n), "cycles", stirling_first_row_by_cycles(n, jobs), "product", row);
    r.expect_equal(nonly(n), "row sum", row.evaluate(BigInt(1)), "n!", permutation_count(n));
  }
  return r;
}

VerificationReport check_enum_counts(const std::vector<RouteBound>& bounds) {
  auto r = make_report("enum-counts", describe(bounds));
  unsigned perm_n_max = 0;
  for (const auto& b : bounds) {
    perm_n_max = std::max(perm_n_max, b.n_max);
    for (unsigned n = 1; n <= b.n_max; ++n) {
      const auto p = nk(n, b.k);

      std::uint64_t count = 0;
      bool valid = true;
      DistinctWords distinct(static_cast<std::size_t>(n) * b.k, n);
      KStirlingStream words(n, b.k);
      while (auto w = words.next()) {
        ++count;
        valid = valid && is_k_stirling(*w, n, b.k);
        distinct.add(*w);
      }
      r.expect_equal(p, "|Q_n(k)| streamed", BigInt(count), "prod(ik+1)", k_stirling_count(n, b.k));
      r.expect(p, "every Q_n(k) word valid", valid);
      r.expect(p, "Q_n(k) words distinct", distinct.all_distinct());

      count = 0;
      valid = true;
      Word prev;
      InversionSequenceStream seqs(n, b.k);
      while (auto e = seqs.next()) {
        ++count;
        valid = valid && is_inversion_sequence(*e, b.k) &&
                (prev.empty() || std::lexicographical_compare(prev.begin(), prev.end(), e->begin(), e->end()));
        prev.assign(e->begin(), e->end());
      }
      r.expect_equal(p, "|I_{n,k}| streamed", BigInt(count), "prod((i-1)k+1)", inversion_sequence_count(n, b.k));
      r.expect(p, "I_{n,k} valid and strictly increasing", valid);
    }
  }
  for (unsigned n = 1; n <= perm_n_max; ++n) {
    std::uint64_t count = 0;
    bool valid = true;
    Word prev;
    PermutationStream perms(n);
    while (auto pi = perms.next()) {
      ++count;
      valid = valid && is_permutation(*pi) &&
              (prev.empty() || std::lexicographical_compare(prev.begin(), prev.end(), pi->begin(), pi->end()));
      prev.assign(pi->begin(), pi->end());
    }
    r.expect_equal(nonly(n), "|S_n| streamed", BigInt(count), "n!", permutation_count(n));
    r.expect(nonly(n), "S_n valid and strictly increasing", valid);
  }
  return r;
}

VerificationReport verify_identity_13_14(unsigned n_max, unsigned k_max, unsigned jobs) {
  auto r = make_report("id13-14", "n<=" + std::to_string(n_max) + ", 2<=k<=" + std::to_string(k_max));
  for (unsigned n = 1; n <= n_max; ++n)
    for (unsigned k = 2; k <= k_max; ++k) {
      const auto by_ap = dist_A_ap(n, k, jobs);
      r.expect_equal(nk(n, k), "invseq asc", dist_A_invseq(n, k, jobs), "Stirling ap", by_ap);
      r.expect_equal(nk(n, k), "exc/cyc", dist_A_exc_cyc(n, k, jobs), "Stirling ap", by_ap);
    }
  return r;
}

VerificationReport check_dual_set_structure(unsigned n_max) {
  auto r = make_report("dual-structure", "n<=" + std::to_string(n_max));
  for (unsigned n = 1; n <= n_max; ++n) {
    const auto p = nonly(n);
    bool inverse_ok = true, asc_ok = true, descent_ok = true, runs_ok = true, partition_ok = true,
         pattern_ok = true, perm_ok = true;
    std::uint64_t s1 = 0, s2 = 0;
    DistinctWords distinct(2 * static_cast<std::size_t>(n), 2 * n);
    DualSetStream dual(n);
    while (auto img = dual.next()) {
      const auto pi = *img;
      const auto sigma = dual.preimage();
      perm_ok = perm_ok && is_permutation(pi);
      distinct.add(pi);
      const auto back = phi_inverse(Permutation(Word(pi.begin(), pi.end())));
      inverse_ok = inverse_ok && back && std::ranges::equal(back->letters(), sigma) &&
                   phi(*back) == Permutation(Word(pi.begin(), pi.end()));
      asc_ok = asc_ok && asc_word(sigma) == asc_word(pi);
      descent_ok = descent_ok && pi[pi.size() - 2] > pi[pi.size() - 1];
      const unsigned i = ipk(pi), l = lpk(pi);
      runs_ok = runs_ok && runs(pi) == i + l;
      if (l == i) ++s1;
      else if (l == i + 1) ++s2;
      else partition_ok = false;
      pattern_ok = pattern_ok && consecutive_patterns_in_stirling_set(sigma);
    }
    r.expect(p, "images are permutations of [2n]", perm_ok);
    r.expect(p, "phi injective", distinct.all_distinct());
    r.expect(p, "phi_inverse inverts phi", inverse_ok);
    r.expect(p, "phi preserves ascents", asc_ok);
    r.expect(p, "images end with a descent", descent_ok);
    r.expect(p, "run = ipk + lpk", runs_ok);
    r.expect(p, "lpk - ipk in {0,1}", partition_ok);
    r.expect(p, "consecutive length-3 patterns in the 8-pattern set", pattern_ok);
    r.notes.push_back(p + ": |S1|=" + std::to_string(s1) + ", |S2|=" + std::to_string(s2));
  }
  return r;
}

VerificationReport check_word_statistics(const std::vector<RouteBound>& bounds) {
  auto r = make_report("word-statistics", describe(bounds));
  for (const auto& b : bounds)
    for (unsigned n = 1; n <= b.n_max; ++n) {
      bool sum_ok = true, ap_ok = true;
      KStirlingStream words(n, b.k);
      while (auto w = words.next()) {
        sum_ok = sum_ok && asc_word(*w) + plateau(*w) + descents(*w) + 1 == n * b.k;
        if (b.k >= 2) {
          const unsigned a = ap(*w, b.k), a0 = ap0(*w, b.k);
          const bool opens_with_block =
              std::all_of(w->begin(), w->begin() + b.k, [first = (*w)[0]](Letter v) { return v == first; });
          ap_ok = ap_ok && a <= a0 && a0 <= a + 1 && ((a0 == a + 1) == opens_with_block);
        }
      }
      r.expect(nk(n, b.k), "asc + plateau + des = nk - 1", sum_ok);
      if (b.k >= 2) r.expect(nk(n, b.k), "ap <= ap0 <= ap + 1", ap_ok);
    }
  return r;
}

VerificationReport check_C_palindromic(unsigned n_max) {
  auto r = make_report("C-palindromic", "n<=" + std::to_string(n_max));
  for (unsigned n = 1; n <= n_max; ++n) {
    const auto c = C_from_def(n);
    r.expect_equal(nonly(n), "x^{2n} C_n(1/x)", reverse(c, 2 * n), "C_n", c);
  }
  return r;
}

VerificationReport check_second_order_eulerian(unsigned n_max, unsigned jobs) {
  auto r = make_report("second-order-eulerian", "n<=" + std::to_string(n_max));
  for (unsigned n = 1; n <= n_max; ++n) {
    const auto dual = dist_P_asc(n, jobs);
    r.expect_equal(nonly(n), "asc over Phi(Q_n)", dual, "asc over Q_n(2)", dist_P_asc_words(n, jobs));
    r.expect_equal(nonly(n), "P_n(1)", dual.evaluate(BigInt(1)), "|Q_n(2)|", k_stirling_count(n, 2));
    r.notes.push_back("P_" + std::to_string(n) + " = " + to_string(dual));
  }
  return r;
}

}  // namespace stirlab
