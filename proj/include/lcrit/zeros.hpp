#pragma once

// Critical-line zero location, cross-validation, classification, and
// interval statistics.
//
// The scan walks the critical line in fixed steps evaluating the real
// critical-line signal (the envelope-normalized completed value for
// self-conjugate characters, the paired two-character product otherwise),
// brackets each sign change, and bisects to a bracket width below 1e-9.
// Local dips that touch zero without changing sign (even-order candidates)
// cannot be certified by bisection; they are re-examined on a 64-fold finer
// local grid and, if still tangential, reported as flagged candidates for
// manual review instead of being recorded as zeros.
//
// Completeness is validated independently by the argument principle:
// rectangle_count winds the completed value itself (not the normalized
// signal) around [sigma_lo, sigma_hi] x [t_lo, t_hi].  The completed form
// is the right integrand because its Gamma factor cancels the trivial
// zeros: for an even character L(chi, 0) = 0 sits exactly on the usual
// t_lo = 0 boundary, while the completed value stays finite and nonzero
// there.  For a self-conjugate character the count uses the completed
// L-value (one zero per sign change); for a complex character it uses the
// paired product, whose zero set pools both L(chi) and L(conj chi), again
// one per sign change of the scanned signal.  Winding the paired product
// for a self-conjugate character would double-count (the product is then a
// square), which is why the integrand choice follows the character's
// reality.
//
// Recorded residuals are envelope-normalized magnitudes at the refined
// ordinate: |L(chi, 1/2+it)| itself for self-conjugate characters, and
// |L(chi, 1/2+it) * L(conj chi, 1/2+it)| for complex ones, so the column
// stays comparable across heights instead of decaying with the Gamma
// envelope.

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lcrit/characters.hpp"
#include "lcrit/lfunctions.hpp"

namespace lcrit {

enum class ZeroAttribution {
    chi,       // only L(chi) vanishes at the ordinate
    chi_bar,   // only L(conj chi) vanishes
    both_real, // self-conjugate character (or both factors vanish)
};

std::string attribution_token(ZeroAttribution attribution);

struct ZeroRecord {
    std::int64_t modulus = 0;
    std::string char_label;
    double t = 0.0;       // refined ordinate, strictly inside the bracket
    double t_lo = 0.0;    // bracket with opposite signal signs at the ends
    double t_hi = 0.0;
    double residual = 0.0;  // normalized magnitude at 1/2 + i t (see above)
    ZeroAttribution attribution = ZeroAttribution::both_real;
};

struct ScanResult {
    std::vector<ZeroRecord> records;         // ascending in t
    std::vector<double> flagged_candidates;  // tangential dips, not recorded
};

// All signal sign changes on (0, height], each bisected to bracket width
// < 1e-9.  Preconditions: the context's character is primitive, height > 0,
// and 0 < step <= 0.1 (default 0.02, far below desk-scale zero gaps).
ScanResult scan_zeros(const LContext& ctx, double height, double step = 0.02);

// Argument-principle zero count over the rectangle; empty ranges count 0.
// Throws boundary_zero_error / resolution_error from the winding engine and
// numeric_consistency_error if the contour total is not near an integer.
int rectangle_count(const LContext& ctx, double sigma_lo, double sigma_hi,
                    double t_lo, double t_hi);

// Cross-validates a scan against rectangle_count over
// [-0.1, 1.1] x [0, height].  Returns the common count; throws
// incomplete_atlas_error when the counts disagree or the scan left
// unresolved flagged candidates.
int verify_scan_completeness(const LContext& ctx, const ScanResult& scan,
                             double height);

enum class ZeroClass {
    trivial,     // s near e-2k (k >= 1), or s near 0 for nonprincipal even chi
    extraneous,  // an imprimitivity Euler factor 1 - chi_f(p) p^{-s} vanishes
    nontrivial,  // everything else
};

// Classifies a numerically verified zero of L(chi, .).  Precondition:
// |L(chi, s)| < tol (otherwise domain_error); s must lie in the library's
// validated evaluation domain.
ZeroClass classify_zero(const Character& chi, const Cplx& s,
                        double tol = 1e-6);

struct WindowStats {
    double eta = 0.0;
    double height = 0.0;
    std::vector<int> counts;  // one per window (j*eta, (j+1)*eta]
    // Fraction of windows whose count lies strictly inside
    // ( ((eta/2pi) log T) / phi(T),  phi(T) * (eta/2pi) log T ).
    double fraction_within_bounds = 0.0;
};

// Per-window zero counts up to `height` (records are assumed complete to
// that height; validate with rectangle_count first).  Exploratory output:
// reported, never asserted against a theorem constant.
WindowStats window_stats(const std::vector<ZeroRecord>& records, double eta,
                         const std::function<double(double)>& phi,
                         double height);

// CSV atlas: header q,char_label,t,t_lo,t_hi,residual,attribution and one
// row per zero, sorted by (q, char_label, t), 17-significant-digit numbers.
std::string zero_atlas_csv(std::vector<ZeroRecord> records);

}  // namespace lcrit
