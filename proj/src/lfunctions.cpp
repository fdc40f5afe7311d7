#include "lcrit/lfunctions.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "lcrit/errors.hpp"
#include "kahan.hpp"

namespace lcrit {

namespace {

const double kLogPi = std::log(std::numbers::pi);

// L-series of a primitive character mod f > 1 by the Hurwitz decomposition.
// Each zeta(s,a/f) enters only through its entire part: the pole parts carry
// the coefficient sum_a chi(a) = 0, so they cancel exactly and are never
// formed.  Valid throughout the Hurwitz strip, including s = 1.
Cplx primitive_series(const Character& prim, const Cplx& s) {
    const std::int64_t f = prim.modulus();
    const HurwitzParams params = hurwitz_auto_params(s);
    KahanSum acc;
    for (std::int64_t a = 1; a <= f; ++a) {
        auto rot = prim.rotation_at(a);
        if (!rot) continue;
        acc.add(rot->value() * hurwitz_zeta_entire(
                                   s, static_cast<double>(a) / f, params));
    }
    return power_neg(static_cast<double>(f), s) * acc.s;
}

// (s-1) * zeta(s) = (s-1) * entire(s,1) + 1: pole-free, value 1 at s = 1.
Cplx zeta_times_s_minus_one(const Cplx& s) {
    return (s - 1.0) * hurwitz_zeta_entire(s, 1.0, hurwitz_auto_params(s)) +
           1.0;
}

// Log of the power-and-Gamma envelope for conductor f, parity e.
Cplx envelope_at(std::int64_t f, int e, const Cplx& s) {
    if (f == 1) return -(s / 2.0) * kLogPi + log_gamma(s / 2.0 + 1.0);
    const Cplx half = (s + static_cast<double>(e)) / 2.0;
    return half * (std::log(static_cast<double>(f)) - kLogPi) +
           log_gamma(half);
}

Cplx rest_at(const LContext& ctx, bool conjugate_factor, const Cplx& s) {
    if (ctx.conductor() == 1) return zeta_times_s_minus_one(s);
    return primitive_series(
        conjugate_factor ? ctx.primitive_conjugate() : ctx.primitive(), s);
}

// Reality tolerance for a normalized product value: relative part plus an
// absolute cushion scaled by the factor magnitudes, so the check stays
// meaningful at (and arbitrarily near) zeros, where the value itself
// vanishes but rounding noise does not.
void check_reality(const Cplx& value, double factor_scale,
                   const char* where) {
    const double tol =
        1e-8 * std::abs(value) + 1e-9 * factor_scale + 1e-300;
    if (std::abs(value.imag()) > tol)
        throw numeric_consistency_error(
            std::string(where) +
            ": imaginary part exceeds the reality tolerance (precision "
            "loss): value " +
            format_complex(value));
}

}  // namespace

Cplx LambdaParts::normalized() const {
    return std::polar(1.0, envelope.imag()) * rest;
}

Cplx root_number(const Character& chi) {
    const Cplx tau = gauss_sum(chi);  // rejects imprimitive characters
    const double root_q = std::sqrt(static_cast<double>(chi.modulus()));
    const Cplx denominator =
        chi.parity() == 0 ? Cplx{root_q, 0.0} : Cplx{0.0, root_q};
    return tau / denominator;
}

LContext::LContext(Character chi)
    : chi_(std::move(chi)),
      chi_f_(lcrit::conductor(chi_).primitive),
      chibar_f_(chi_f_.conjugate()),
      conductor_(chi_f_.modulus()),
      parity_(chi_.parity()),
      root_number_(lcrit::root_number(chi_f_)),
      self_conjugate_(chi_f_.is_real()) {
    for (std::int64_t p : prime_factors(chi_.modulus()))
        if (conductor_ % p != 0) extra_primes_.push_back(p);
    if (std::abs(std::abs(root_number_) - 1.0) > 1e-10)
        throw numeric_consistency_error(
            "LContext: root number modulus deviates from 1 beyond 1e-10 "
            "for character " +
            chi_.label());
}

Cplx l_value(const LContext& ctx, Cplx s) {
    Cplx base;
    if (ctx.conductor() == 1) {
        if (s == Cplx{1.0, 0.0})
            throw pole_error("l_value: pole at s = 1 (principal character)");
        base = hurwitz_zeta_entire(s, 1.0, hurwitz_auto_params(s)) +
               1.0 / (s - 1.0);
    } else {
        base = primitive_series(ctx.primitive(), s);
    }
    for (std::int64_t p : ctx.extra_primes())
        base *= 1.0 - ctx.primitive().eval(p) *
                          power_neg(static_cast<double>(p), s);
    return base;
}

LambdaParts lambda_parts(const LContext& ctx, Cplx s) {
    return {envelope_at(ctx.conductor(), ctx.parity(), s),
            rest_at(ctx, false, s)};
}

Cplx lambda_value(const LContext& ctx, Cplx s) {
    return lambda_parts(ctx, s).value();
}

LambdaParts g_parts(const LContext& ctx, Cplx s) {
    const Cplx env = envelope_at(ctx.conductor(), ctx.parity(), s);
    return {2.0 * env, rest_at(ctx, false, s) * rest_at(ctx, true, s)};
}

Cplx g_value(const LContext& ctx, Cplx s) { return g_parts(ctx, s).value(); }

double psi_value(const LContext& ctx, double v) {
    const Cplx s{0.5, v};
    const Cplx env = envelope_at(ctx.conductor(), ctx.parity(), s);
    const Cplx a = rest_at(ctx, false, s);
    const Cplx b = rest_at(ctx, true, s);
    const Cplx ghat = std::polar(1.0, 2.0 * env.imag()) * (a * b);
    check_reality(ghat, std::abs(a) + std::abs(b), "psi_value");
    return std::exp(2.0 * env.real()) * ghat.real();
}

double critical_line_signal(const LContext& ctx, double v) {
    const Cplx s{0.5, v};
    const Cplx env = envelope_at(ctx.conductor(), ctx.parity(), s);
    if (ctx.self_conjugate()) {
        const Cplx a = rest_at(ctx, false, s);
        const Cplx lhat = std::polar(1.0, env.imag()) * a;
        check_reality(lhat, 1.0 + std::abs(a), "critical_line_signal");
        return lhat.real();
    }
    const Cplx a = rest_at(ctx, false, s);
    const Cplx b = rest_at(ctx, true, s);
    const Cplx ghat = std::polar(1.0, 2.0 * env.imag()) * (a * b);
    check_reality(ghat, std::abs(a) + std::abs(b), "critical_line_signal");
    return ghat.real();
}

Cplx normalized_lambda(const LContext& ctx, Cplx s) {
    return lambda_parts(ctx, s).normalized();
}

Cplx normalized_g(const LContext& ctx, Cplx s) {
    return g_parts(ctx, s).normalized();
}

FunctionalEqResidual functional_equation_residual(const LContext& ctx,
                                                  Cplx s) {
    const Cplx lhs = lambda_value(ctx, s);
    Cplx rhs;
    if (ctx.conductor() == 1) {
        rhs = riemann_xi(1.0 - s);
    } else {
        const Cplx env =
            envelope_at(ctx.conductor(), ctx.parity(), 1.0 - s);
        rhs = ctx.root_number() *
              (std::exp(env) *
               primitive_series(ctx.primitive_conjugate(), 1.0 - s));
    }
    const double denominator =
        std::max({std::abs(lhs), std::abs(rhs), 1e-300});
    return {s, lhs, rhs, std::abs(lhs - rhs) / denominator};
}

LambdaParts riemann_xi_parts(Cplx s) {
    return {-(s / 2.0) * kLogPi + log_gamma(s / 2.0 + 1.0),
            zeta_times_s_minus_one(s)};
}

Cplx riemann_xi(Cplx s) { return riemann_xi_parts(s).value(); }

std::vector<Cplx> residue_class_power_sums(std::int64_t q, Cplx s,
                                           std::int64_t terms) {
    if (q < 1 || q > kMaxModulus)
        throw domain_error("residue_class_power_sums: modulus out of range");
    if (!(s.real() > 1.0))
        throw domain_error(
            "residue_class_power_sums: needs Re s > 1 (absolute "
            "convergence)");
    if (terms < q)
        throw domain_error(
            "residue_class_power_sums: need at least one term per class");

    std::vector<KahanSum> acc(static_cast<std::size_t>(q));
    for (std::int64_t n = 1; n <= terms; ++n)
        acc[static_cast<std::size_t>(n % q)].add(
            power_neg(static_cast<double>(n), s));

    // Per-class completion from the first index beyond `terms`: integral
    // term, half-term, and first curvature term of the continuation of
    // sum_{m >= m0} (m + a/q)^{-s}, scaled by q^{-s}.  The first omitted
    // term is O(|s|^3 (terms/q)^{-Re s - 3}).
    const Cplx qs = power_neg(static_cast<double>(q), s);
    for (std::int64_t a = 1; a <= q; ++a) {
        const std::int64_t m0 = (terms - a) / q + 1;
        const double z = static_cast<double>(m0) +
                         static_cast<double>(a) / static_cast<double>(q);
        const Cplx tail = qs * (power_neg(z, s - 1.0) / (s - 1.0) +
                                0.5 * power_neg(z, s) +
                                (s / 12.0) * power_neg(z, s + 1.0));
        acc[static_cast<std::size_t>(a % q)].add(tail);
    }

    std::vector<Cplx> out(static_cast<std::size_t>(q));
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = acc[i].s;
    return out;
}

Cplx dirichlet_series_direct(const Character& chi, Cplx s,
                             std::int64_t terms) {
    const std::int64_t q = chi.modulus();
    const std::vector<Cplx> classes = residue_class_power_sums(q, s, terms);
    KahanSum acc;
    for (std::int64_t a = 1; a <= q; ++a) {
        auto rot = chi.rotation_at(a);
        if (!rot) continue;
        acc.add(rot->value() * classes[static_cast<std::size_t>(a % q)]);
    }
    return acc.s;
}

double factorization_check(const LContext& ctx, Cplx s,
                           std::int64_t terms) {
    if (is_primitive(ctx.chi()))
        throw domain_error(
            "factorization_check: character must be imprimitive (a "
            "primitive character has no extra Euler factors to check)");
    if (!(s.real() >= 2.0))
        throw domain_error("factorization_check: requires Re s >= 2");
    const Cplx direct = dirichlet_series_direct(ctx.chi(), s, terms);
    const Cplx factored = l_value(ctx, s);
    const double denominator =
        std::max({std::abs(direct), std::abs(factored), 1e-300});
    return std::abs(direct - factored) / denominator;
}

}  // namespace lcrit
