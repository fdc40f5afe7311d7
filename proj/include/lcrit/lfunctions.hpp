#pragma once

/**
 * @file lfunctions.hpp
 * @brief Dirichlet L-functions, their completed (symmetrized) forms, root
 *        numbers, and the paired critical-line functions.
 *
 * Mathematical background
 * -----------------------
 * For a character chi mod q with conductor f and inducing primitive character
 * chi_f, the L-series factors as
 *
 *     L(chi,s) = L(chi_f,s) * prod_{p | q, p !| f} (1 - chi_f(p) p^{-s}).
 *
 * The primitive factor is evaluated through the Hurwitz decomposition
 *
 *     L(chi_f,s) = f^{-s} sum_{a=1}^{f} chi_f(a) zeta(s, a/f),
 *
 * using the pole-split Hurwitz evaluator: each zeta(s,a/f) is written as an
 * entire part plus 1/(s-1), and since sum_a chi_f(a) = 0 for nonprincipal
 * chi_f the pole terms cancel exactly and are never added.  Only the
 * principal case (f = 1, the zeta function itself) keeps the pole at s = 1.
 *
 * The completed function for primitive chi_f mod f > 1 with parity e is
 *
 *     Lambda(chi_f,s) = (f/pi)^{(s+e)/2} Gamma((s+e)/2) L(chi_f,s),
 *
 * satisfying Lambda(chi_f,s) = W(chi_f) Lambda(conj(chi_f),1-s) with the
 * root number W = tau(chi_f)/(i^e sqrt(f)) of unit modulus.  For f = 1 the
 * completed form is the classical entire normalization
 *
 *     xi(s) = (s(s-1)/2) pi^{-s/2} Gamma(s/2) zeta(s)
 *           = pi^{-s/2} Gamma(s/2+1) * [(s-1) zeta(s)],
 *
 *  where (s-1)zeta(s) = (s-1)*entire(s,1) + 1 is computed pole-free, so xi
 *  is evaluated without guards at both s = 0 and s = 1 and xi(0) = xi(1) = 1/2.
 *
 * Overflow-safe envelope/rest split
 * ---------------------------------
 * Gamma decays like exp(-pi|t|/4) on vertical lines, so completed values
 * underflow at large height.  Every completed quantity is therefore exposed
 * as LambdaParts {envelope, rest} with value = exp(envelope) * rest, where
 * the envelope collects the power and Gamma factors in log space and rest is
 * the L-series factor.  The "normalized" variants exp(i*Im envelope)*rest
 * drop only the positive real factor exp(Re envelope): they keep the exact
 * zero set and sign structure and stay O(1) at any height.
 *
 * Pairing construction: G(chi,s) = Lambda(chi,s) * Lambda(conj chi,s) shares
 * one envelope (it depends only on (f,e), which conjugation preserves), is
 * symmetric under s -> 1-s, and is real-valued on the critical line; its
 * restriction Psi(v) = G(1/2+iv) is an even real function of v.
 *
 * All evaluation inherits the Hurwitz validated domain
 * -2 <= Re s <= 4, |Im s| <= 1000 (domain_error outside).
 */

#include <complex>
#include <cstdint>
#include <vector>

#include "lcrit/characters.hpp"
#include "lcrit/numio.hpp"
#include "lcrit/special_functions.hpp"

namespace lcrit {

/// A completed value in overflow-safe form: value = exp(envelope) * rest.
struct LambdaParts {
    Cplx envelope{0.0, 0.0};
    Cplx rest{0.0, 0.0};

    Cplx value() const { return std::exp(envelope) * rest; }
    /// exp(i * Im envelope) * rest: same zeros and phase, magnitude rescaled
    /// by the positive factor exp(-Re envelope).  Never overflows.
    Cplx normalized() const;
};

/**
 * Evaluation context for one character: the character, its primitive
 * inducing character and conjugate, conductor, parity, root number, and the
 * extra Euler-factor primes (p | q, p !| f).
 *
 * Construction verifies |W| = 1 to 1e-10 (numeric_consistency_error
 * otherwise).  Immutable; safe for concurrent use.
 */
class LContext {
public:
    explicit LContext(Character chi);

    const Character& chi() const { return chi_; }
    /// The primitive character inducing chi (modulus = conductor).
    const Character& primitive() const { return chi_f_; }
    const Character& primitive_conjugate() const { return chibar_f_; }
    std::int64_t conductor() const { return conductor_; }
    /// Parity e in {0,1} with chi(-1) = (-1)^e.
    int parity() const { return parity_; }
    /// Root number W of the primitive character; |W| = 1.
    Cplx root_number() const { return root_number_; }
    /// Primes dividing the modulus but not the conductor, ascending.
    const std::vector<std::int64_t>& extra_primes() const {
        return extra_primes_;
    }
    /// true when the primitive character is real (chi_f = conj chi_f).
    bool self_conjugate() const { return self_conjugate_; }

private:
    Character chi_;
    Character chi_f_;
    Character chibar_f_;
    std::int64_t conductor_ = 1;
    int parity_ = 0;
    Cplx root_number_{1.0, 0.0};
    std::vector<std::int64_t> extra_primes_;
    bool self_conjugate_ = true;
};

/// W(chi) = tau(chi) / (i^e sqrt(q)) for primitive chi; |W| = 1.
/// Throws domain_error for imprimitive characters.
Cplx root_number(const Character& chi);

/**
 * L(chi,s): primitive factor via the Hurwitz decomposition times the extra
 * Euler factors.  Throws pole_error exactly at s = 1 for principal chi
 * (conductor 1); defined at s = 1 otherwise.
 */
Cplx l_value(const LContext& ctx, Cplx s);

/**
 * Completed form of the PRIMITIVE inducing character, as envelope/rest:
 * conductor f > 1 -> Lambda(chi_f,s); f = 1 -> xi(s).  Entire in the
 * validated strip except that even characters (parity 0, f > 1) hit the
 * Gamma pole at exactly s = 0 and s = -2 (the limit is finite but not
 * computed; pole_error).
 */
LambdaParts lambda_parts(const LContext& ctx, Cplx s);
Cplx lambda_value(const LContext& ctx, Cplx s);

/// G(chi,s) = Lambda(chi_f,s) * Lambda(conj chi_f,s) as envelope/rest.
LambdaParts g_parts(const LContext& ctx, Cplx s);
Cplx g_value(const LContext& ctx, Cplx s);

/**
 * Psi(v) = G(1/2+iv), real by the pairing symmetry.  Returns Re G and
 * checks the normalized imaginary part against the reality tolerance
 * (numeric_consistency_error on failure: precision loss).
 */
double psi_value(const LContext& ctx, double v);

/**
 * Real-valued scan signal on the critical line, normalized to O(1):
 * for self-conjugate characters the restriction of Lambda itself (whose
 * simple zeros are sign changes; the paired square would touch without
 * crossing), otherwise normalized Psi, whose zeros pool both conjugate
 * factors.  Sign changes of this signal are exactly the critical-line
 * zeros seen by the scanner.
 */
double critical_line_signal(const LContext& ctx, double v);

/// exp(i Im env) * rest for Lambda / G: unit-height versions for contour
/// phase tracking (winding of the normalized value equals winding of the
/// full value since exp(Re env) > 0).
Cplx normalized_lambda(const LContext& ctx, Cplx s);
Cplx normalized_g(const LContext& ctx, Cplx s);

/// One functional-equation check: lhs = Lambda(chi_f,s),
/// rhs = W * Lambda(conj chi_f, 1-s).
struct FunctionalEqResidual {
    Cplx s;
    Cplx lhs;
    Cplx rhs;
    double relative_residual = 0.0;  // |lhs-rhs| / max(|lhs|,|rhs|,1e-300)
};
FunctionalEqResidual functional_equation_residual(const LContext& ctx, Cplx s);

/// Classical completed zeta xi(s), pole-free at s = 0 and s = 1.
LambdaParts riemann_xi_parts(Cplx s);
Cplx riemann_xi(Cplx s);

/**
 * Per-residue-class power sums: entry a (0 <= a < q) approximates
 * sum over n >= 1, n = a (mod q) of n^{-s}, from `terms` explicit terms
 * plus an integral + half-term + curvature tail completion per class.
 * Requires Re s > 1 (absolute convergence).  Shared across all characters
 * of one modulus.
 */
std::vector<Cplx> residue_class_power_sums(std::int64_t q, Cplx s,
                                           std::int64_t terms);

/**
 * Direct-series evaluation sum_{n>=1} chi(n) n^{-s} via tail-completed
 * residue-class sums; Re s > 1 required.  An independent evaluation path
 * from l_value (no Hurwitz machinery), used for cross-validation.
 */
Cplx dirichlet_series_direct(const Character& chi, Cplx s,
                             std::int64_t terms);

/**
 * Relative residual between the direct series and the factorized
 * (primitive times Euler factors) evaluation, for IMPRIMITIVE characters
 * at Re s >= 2.  domain_error for primitive chi or Re s < 2.
 */
double factorization_check(const LContext& ctx, Cplx s,
                           std::int64_t terms = 1'000'000);

}  // namespace lcrit
