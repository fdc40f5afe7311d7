#pragma once

// Desk-scale non-vanishing criteria and ratio-region verification.
//
// Two truncated approximants to L(chi, s) are studied on small discs inside
// the critical strip:
//
//   partial_sum  S_N(s) = sum_{n=1}^{N} chi(n) n^{-s}
//   g_n_sum      G_N(s) = q^{-s} sum_{a=1}^{q} chi(a) *
//                     ( sum_{n=0}^{N-1} (n + a/q)^{-s}
//                       + (N + a/q)^{1-s} / (s-1) )
//
// S_N converges for Re s > 0 only for nonprincipal characters; G_N attaches
// the leading Euler-Maclaurin tail to each residue class and converges to
// L(chi, s) on compact subsets of the strip for every character (for the
// modulus-1 character it approximates zeta, sharing its pole structure
// through the 1/(s-1) term).  Non-vanishing of these approximants on a disc
// is certified by the argument principle: a zero count of 0 from the
// winding engine.  Reports keep one entry per truncation length N, with
// entries whose contour total refused to settle near an integer marked
// indeterminate rather than guessed.
//
// The ratio |L(conj chi, s) / L(chi, 1-s)| equals 1 exactly on the critical
// line and provably differs from 1 in two lens-shaped regions flanking it:
//
//   left:   0 < sigma < 1/2  and  (1+sigma)^2 + t^2 < (2 pi)^2
//   right:  1/2 < sigma < 1  and  (2-sigma)^2 + t^2 < (2 pi)^2
//
// region_sweep samples both regions on a uniform grid, excluding a margin
// band around the critical line where nothing quantitative is claimed, and
// reports the minimum of | |R| - 1 | over the grid.  The Gamma-quotient
// inequality |Gamma((2-s)/2) / Gamma((s+1)/2)| <= |(1+s)/2|^{1/2-sigma},
// an ingredient of the left-region argument for odd characters, is checked
// pointwise by gamma_inequality_check.

#include <complex>
#include <cstdint>
#include <functional>
#include <vector>

#include "lcrit/characters.hpp"
#include "lcrit/lfunctions.hpp"
#include "lcrit/winding.hpp"

namespace lcrit {

// ---------------------------------------------------------------------------
// Truncated approximants
// ---------------------------------------------------------------------------

// S_N: the plain truncated series, exactly as displayed above.
Cplx partial_sum(const Character& chi, const Cplx& s, std::int64_t n_terms);

// G_N: the tail-smoothed residue-class sum.  Throws pole_error at s = 1
// exactly (the attached tail carries a 1/(s-1)).
Cplx g_n_sum(const Character& chi, const Cplx& s, std::int64_t n_terms);

// ---------------------------------------------------------------------------
// Disc non-vanishing via the argument principle
// ---------------------------------------------------------------------------

struct Disc {
    Cplx center;
    double radius = 0.0;
};

// True when the closed disc lies strictly inside one open half of the
// critical strip: either 0 < sigma < 1/2 or 1/2 < sigma < 1 throughout.
bool disc_in_half_strip(const Disc& disc);

// Zero count of f inside the disc by the winding of f along its boundary.
// Throws boundary_zero_error / resolution_error from the engine, and
// numeric_consistency_error if the contour total does not settle within the
// integer tolerance.
int disc_zero_count(const std::function<Cplx(const Cplx&)>& f,
                    const Disc& disc, const WindingOptions& opts = {});

enum class CriterionVariant {
    partial_sum,   // S_N
    smoothed_sum,  // G_N
};

struct DiscCountEntry {
    std::int64_t n = 0;          // truncation length
    int zero_count = 0;          // meaningful only when !indeterminate
    bool indeterminate = false;  // contour total failed integer rounding
    double boundary_min_modulus = 0.0;  // certificate scale for the count
};

struct DiscReport {
    Disc disc;
    std::int64_t n_lo = 0;
    std::int64_t n_hi = 0;
    CriterionVariant variant = CriterionVariant::partial_sum;
    std::vector<DiscCountEntry> entries;  // one per N, ascending
    // Fraction of all N in [n_lo, n_hi] with a determinate zero count of 0.
    double fraction_zero = 0.0;
};

// Runs the disc count for every N in [n_lo, n_hi].  Preconditions: the disc
// satisfies disc_in_half_strip, n_lo <= n_hi, n_lo >= 1, and chi must be
// nonprincipal for the partial_sum variant (the plain series does not
// converge in the strip for principal characters).  Per-N boundary-zero or
// resolution failures propagate; integer-rounding failures mark the entry
// indeterminate instead.
DiscReport criterion_report(const Character& chi, const Disc& disc,
                            std::int64_t n_lo, std::int64_t n_hi,
                            CriterionVariant variant);

// ---------------------------------------------------------------------------
// Ratio magnitude and region sweep
// ---------------------------------------------------------------------------

// |L(conj chi, s) / L(chi, 1-s)|.  Throws near_zero_error when the
// denominator modulus falls below 1e-12.  The two-context overload avoids
// re-deriving Gauss sums in hot sweeps.
double ratio_magnitude(const Character& chi, const Cplx& s);
double ratio_magnitude(const LContext& ctx, const LContext& ctx_conj,
                       const Cplx& s);

bool in_left_ratio_region(const Cplx& s);
bool in_right_ratio_region(const Cplx& s);

struct RegionPoint {
    Cplx s;
    bool in_left_region = false;
    bool in_right_region = false;
    double ratio_magnitude = 0.0;
};

struct RegionSweep {
    std::vector<RegionPoint> points;     // grid order: sigma ascending, then t
    double min_abs_dev = 0.0;            // min over points of | |R| - 1 |
    Cplx min_location;
    std::size_t left_count = 0;
    std::size_t right_count = 0;
    std::vector<Cplx> skipped_near_zero;  // points whose denominator vanished
};

// Uniform grid of spacing `resolution` over both regions (both signs of t),
// excluding the band |sigma - 1/2| < margin.  Preconditions: resolution >=
// 1e-3, 0 <= margin < 1/2.  Near-zero denominators are skipped and
// recorded, never silently dropped.  Throws numeric_consistency_error if
// the sweep minimum is not strictly positive.
RegionSweep region_sweep(const Character& chi, double resolution,
                         double margin = 0.05);

struct GammaInequality {
    double lhs = 0.0;
    double rhs = 0.0;
    bool holds = false;
};

// Evaluates both sides of the Gamma-quotient inequality at s.  Precondition:
// s lies in the left region (where the inequality is used).
GammaInequality gamma_inequality_check(const Cplx& s);

}  // namespace lcrit
