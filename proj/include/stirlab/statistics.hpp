#pragma once

#include <span>

#include "stirlab/objects.hpp"

namespace stirlab {

// All statistics take 0-based spans over 1-based letters. Index ranges in the
// comments are 1-based positions, as usual for permutation statistics.

/// Ascents of a k-inversion sequence: i in [1, n-1] with
/// e_i / ((i-1)k + 1) < e_{i+1} / (ik + 1), compared by cross-multiplication.
unsigned asc_inv(std::span<const Letter> e, unsigned k);
inline unsigned asc_inv(const InversionSequence& e) { return asc_inv(e.entries(), e.k()); }

/// Longest ascent-plateaux: i in {2, ..., nk-k+1} with
/// w_{i-1} < w_i = w_{i+1} = ... = w_{i+k-1}. Requires k >= 2.
unsigned ap(std::span<const Letter> w, unsigned k);
/// As ap, with a virtual w_0 = 0 and i ranging over {1, ..., nk-k+1}.
unsigned ap0(std::span<const Letter> w, unsigned k);
inline unsigned ap(const KStirlingWord& w) { return ap(w.letters(), w.k()); }
inline unsigned ap0(const KStirlingWord& w) { return ap0(w.letters(), w.k()); }

/// #{i : pi_i > i}.
unsigned exc(std::span<const Letter> pi);
/// Number of cycles of i -> pi_i.
unsigned cyc(std::span<const Letter> pi);

unsigned asc_word(std::span<const Letter> w);
unsigned plateau(std::span<const Letter> w);
unsigned descents(std::span<const Letter> w);

/// Interior peaks: i in {2, ..., n-1} with pi_{i-1} < pi_i > pi_{i+1}.
unsigned ipk(std::span<const Letter> pi);
/// Left peaks: i in [n-1] with pi_0 = 0.
unsigned lpk(std::span<const Letter> pi);
/// Alternating runs: 1 + direction changes. Throws std::invalid_argument for n < 2.
unsigned runs(std::span<const Letter> pi);

inline unsigned exc(const Permutation& p) { return exc(p.values()); }
inline unsigned cyc(const Permutation& p) { return cyc(p.values()); }
inline unsigned ipk(const Permutation& p) { return ipk(p.values()); }
inline unsigned lpk(const Permutation& p) { return lpk(p.values()); }
inline unsigned runs(const Permutation& p) { return runs(p.values()); }

/// True when every consecutive length-3 factor of w reduces to one of
/// 112, 211, 122, 221, 213, 312, 123, 321.
bool consecutive_patterns_in_stirling_set(std::span<const Letter> w);

}  // namespace stirlab
