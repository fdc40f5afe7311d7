#pragma once

// Argument-principle zero counting along closed contours.
//
// For f holomorphic inside and on a positively oriented closed contour with
// no zeros on the contour itself, the number of zeros enclosed (with
// multiplicity) equals the total change of arg f along the contour divided
// by 2*pi.  We track that change by sampling the contour, summing the
// principal-value phase increments between consecutive samples, and
// adaptively doubling the sampling density until every increment is below
// pi/2.  Once every step is that small, no full turn can hide between
// samples unless the function oscillates below the sampling scale, which the
// doubling cascade makes progressively implausible; the final total is then
// required to land within a small tolerance of an integer.
//
// Multiplying f by any nonvanishing positive real function leaves every
// phase increment unchanged, so callers are encouraged to pass a
// well-conditioned normalization (e.g. an exponential envelope stripped off)
// rather than a function whose modulus varies over hundreds of orders of
// magnitude.
//
// Failure modes are explicit:
//   * a sample modulus of exactly zero, or negligibly small relative to its
//     neighbors, means a zero (numerically) sits on the contour ->
//     boundary_zero_error;
//   * the doubling cascade hitting its cap without taming the phase steps ->
//     resolution_error;
//   * a final total that refuses to settle near an integer is reported via
//     the `indeterminate` flag for the caller to handle.

#include <complex>
#include <functional>

#include "lcrit/numio.hpp"

namespace lcrit {

struct WindingOptions {
    // Samples on the first pass; each refinement round doubles the count.
    int initial_samples = 256;
    // Maximum number of doubling rounds before giving up.
    int max_doublings = 12;
    // Refinement target: largest allowed |phase increment| between
    // consecutive samples (radians).
    double max_phase_step = 1.5707963267948966;  // pi/2
    // A sample modulus below ratio * (|prev| + |next|) counts as a zero on
    // the contour.
    double boundary_dip_ratio = 1e-10;
    // The accumulated turn count must land within this distance of an
    // integer; otherwise the result is flagged indeterminate.
    double integer_tolerance = 0.25;
};

struct WindingResult {
    double turns = 0.0;      // accumulated phase change / 2*pi
    int winding = 0;         // nearest integer to `turns`
    bool indeterminate = false;  // |turns - winding| > integer_tolerance
    double max_phase_step = 0.0; // largest increment on the final pass
    double min_modulus = 0.0;    // smallest |f| seen on the final pass
    int samples = 0;             // samples on the final pass
};

// Core engine.  `path` maps a parameter u in [0,1) to a point of the closed
// contour, traversed once, positively oriented.  Throws boundary_zero_error
// and resolution_error as described above; exceptions thrown by `f` itself
// propagate.
WindingResult contour_winding(const std::function<Cplx(double)>& path,
                              const std::function<Cplx(const Cplx&)>& f,
                              const WindingOptions& opts = {});

// Circle |s - center| = radius, counterclockwise.
WindingResult circle_winding(const std::function<Cplx(const Cplx&)>& f,
                             const Cplx& center, double radius,
                             const WindingOptions& opts = {});

// Axis-aligned rectangle [sigma_lo, sigma_hi] x [t_lo, t_hi],
// counterclockwise from the bottom-left corner, each edge receiving an
// equal share of the parameter interval.
WindingResult rectangle_winding(const std::function<Cplx(const Cplx&)>& f,
                                double sigma_lo, double sigma_hi,
                                double t_lo, double t_hi,
                                const WindingOptions& opts = {});

}  // namespace lcrit
