#pragma once

/**
 * @file special_functions.hpp
 * @brief Hurwitz zeta via Euler-Maclaurin, complex log-Gamma via a shifted
 *        Stirling series, and Gauss sums of primitive characters.
 *
 * Hurwitz zeta
 * ------------
 * For w in (0,1] and s != 1,
 *
 *   zeta(s,w) = sum_{n=0}^{N-1} (n+w)^{-s}
 *             + (N+w)^{1-s}/(s-1)
 *             + (N+w)^{-s}/2
 *             + sum_{j=1}^{K} B_{2j}/(2j)! * (s)_{2j-1} * (N+w)^{-s-2j+1}
 *             + remainder,
 *
 * with (s)_m the rising factorial and B_{2j} the Bernoulli numbers.  The
 * implementation actually computes the *entire* function
 * zeta(s,w) - 1/(s-1) (the simple pole at s = 1 has residue 1 regardless of
 * w), which lets character sums cancel their poles exactly and avoids
 * catastrophic cancellation near s = 1.
 *
 * Validated domain for the default parameters (N = max(12, ceil(1.3|Im s|)),
 * K = 12): -2 <= Re s <= 4, |Im s| <= 1000, absolute error <= 1e-10; the
 * first omitted correction term is smaller than 1e-13 throughout and the
 * bound is dominated by rounding in the main sum.  Arguments outside that
 * box are rejected.
 *
 * log-Gamma
 * ---------
 * log_gamma(z) uses the Stirling series at z+M (with M chosen so
 * |z+M| >= 12 and Re(z+M) >= 1) minus sum_{m<M} Log(z+m).  The result is
 * the principal branch for Re z > 0; for Re z <= 0 the imaginary part may
 * be off by a multiple of 2*pi (exp of the result is always faithful, with
 * relative error <= 1e-12 for |z| <= 1e4).
 *
 * Everything is pure and thread-safe.
 */

#include <cstdint>

#include "lcrit/characters.hpp"
#include "lcrit/numio.hpp"

namespace lcrit {

/// Bernoulli number B_{2j} for 0 <= j <= 30, from exact rationals.
double bernoulli_even(int j);

/// Euler-Maclaurin truncation parameters for hurwitz_zeta.
struct HurwitzParams {
    std::int64_t main_terms = 12;  ///< N: direct terms before the tail
    int correction_terms = 12;     ///< K: Bernoulli corrections, 1..30
    double target_abs_error = 1e-10;
};

/// Default parameters for evaluation at s: N = max(12, ceil(1.3*|Im s|)),
/// K = 12.
HurwitzParams hurwitz_auto_params(const Cplx& s);

/// zeta(s,w) - 1/(s-1): entire in s, defined at s = 1 (where it equals
/// -digamma(w)).  Enforces the validated domain and w in (0,1].
Cplx hurwitz_zeta_entire(const Cplx& s, double w, const HurwitzParams& params);

/// zeta(s,w).  Throws pole_error at s = 1.
Cplx hurwitz_zeta(const Cplx& s, double w, const HurwitzParams& params);

/// Convenience: hurwitz_zeta with hurwitz_auto_params(s).
Cplx hurwitz_zeta(const Cplx& s, double w);

/// log Gamma(z); see the header comment for the branch contract.  Throws
/// pole_error at non-positive integers.
Cplx log_gamma(const Cplx& z);

/// (N+w)^{-s}-style power with positive real base: x^{-s} for x > 0.
Cplx power_neg(double x, const Cplx& s);

/**
 * Gauss sum tau(chi) = sum_{a=1}^{q} chi(a) e^{2*pi*i*a/q} for primitive
 * chi.  Each term's root of unity is combined from the two exact rotations
 * before any rounding.  |tau| = sqrt(q) for primitive characters.
 * Throws domain_error when chi is not primitive.
 */
Cplx gauss_sum(const Character& chi);

}  // namespace lcrit
