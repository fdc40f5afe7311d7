#include "lcrit/criteria.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "kahan.hpp"
#include "lcrit/errors.hpp"
#include "lcrit/parallel.hpp"
#include "lcrit/special_functions.hpp"

namespace lcrit {

namespace {

constexpr double kTwoPiSquared =
    4.0 * std::numbers::pi * std::numbers::pi;  // (2 pi)^2

// chi(n) depends only on n mod q; precompute one period.
std::vector<Cplx> character_period(const Character& chi) {
    const std::int64_t q = chi.modulus();
    std::vector<Cplx> period(static_cast<std::size_t>(q));
    for (std::int64_t r = 0; r < q; ++r)
        period[static_cast<std::size_t>(r)] = chi.eval(r);
    return period;
}

}  // namespace

Cplx partial_sum(const Character& chi, const Cplx& s, std::int64_t n_terms) {
    if (n_terms < 1)
        throw domain_error("partial_sum: need at least one term");
    const std::int64_t q = chi.modulus();
    const std::vector<Cplx> period = character_period(chi);
    KahanSum acc;
    for (std::int64_t n = 1; n <= n_terms; ++n) {
        const Cplx coeff = period[static_cast<std::size_t>(n % q)];
        if (coeff == Cplx{0.0, 0.0}) continue;
        acc.add(coeff * power_neg(static_cast<double>(n), s));
    }
    return acc.s;
}

Cplx g_n_sum(const Character& chi, const Cplx& s, std::int64_t n_terms) {
    if (n_terms < 1)
        throw domain_error("g_n_sum: need at least one term");
    if (s == Cplx{1.0, 0.0})
        throw pole_error("g_n_sum: the attached tail has a pole at s = 1");
    const std::int64_t q = chi.modulus();
    const double qd = static_cast<double>(q);
    KahanSum outer;
    for (std::int64_t a = 1; a <= q; ++a) {
        const Cplx coeff = chi.eval(a);
        if (coeff == Cplx{0.0, 0.0}) continue;
        const double w = static_cast<double>(a) / qd;
        KahanSum inner;
        for (std::int64_t n = 0; n < n_terms; ++n)
            inner.add(power_neg(static_cast<double>(n) + w, s));
        const double z = static_cast<double>(n_terms) + w;
        const Cplx tail = power_neg(z, s - Cplx{1.0, 0.0}) / (s - 1.0);
        outer.add(coeff * (inner.s + tail));
    }
    return power_neg(qd, s) * outer.s;
}

bool disc_in_half_strip(const Disc& disc) {
    if (!(disc.radius > 0.0)) return false;
    const double lo = disc.center.real() - disc.radius;
    const double hi = disc.center.real() + disc.radius;
    const bool left = lo > 0.0 && hi < 0.5;
    const bool right = lo > 0.5 && hi < 1.0;
    return left || right;
}

int disc_zero_count(const std::function<Cplx(const Cplx&)>& f,
                    const Disc& disc, const WindingOptions& opts) {
    const WindingResult r = circle_winding(f, disc.center, disc.radius, opts);
    if (r.indeterminate)
        throw numeric_consistency_error(
            "disc_zero_count: contour total " + format_double(r.turns) +
            " turns did not settle near an integer");
    return r.winding;
}

DiscReport criterion_report(const Character& chi, const Disc& disc,
                            std::int64_t n_lo, std::int64_t n_hi,
                            CriterionVariant variant) {
    if (!disc_in_half_strip(disc))
        throw domain_error(
            "criterion_report: disc closure must lie strictly inside one "
            "open half of the critical strip");
    if (n_lo < 1 || n_lo > n_hi)
        throw domain_error("criterion_report: need 1 <= n_lo <= n_hi");
    if (variant == CriterionVariant::partial_sum && chi.is_principal())
        throw domain_error(
            "criterion_report: the plain partial sum does not converge in "
            "the strip for principal characters; use the smoothed variant");

    DiscReport report;
    report.disc = disc;
    report.n_lo = n_lo;
    report.n_hi = n_hi;
    report.variant = variant;
    report.entries.reserve(static_cast<std::size_t>(n_hi - n_lo + 1));

    std::size_t zero_entries = 0;
    for (std::int64_t n = n_lo; n <= n_hi; ++n) {
        auto f = [&chi, n, variant](const Cplx& s) {
            return variant == CriterionVariant::partial_sum
                       ? partial_sum(chi, s, n)
                       : g_n_sum(chi, s, n);
        };
        const WindingResult r = circle_winding(f, disc.center, disc.radius);
        DiscCountEntry entry;
        entry.n = n;
        entry.zero_count = r.winding;
        entry.indeterminate = r.indeterminate;
        entry.boundary_min_modulus = r.min_modulus;
        if (!entry.indeterminate && entry.zero_count == 0) ++zero_entries;
        report.entries.push_back(entry);
    }
    report.fraction_zero = static_cast<double>(zero_entries) /
                           static_cast<double>(report.entries.size());
    return report;
}

double ratio_magnitude(const LContext& ctx, const LContext& ctx_conj,
                       const Cplx& s) {
    const Cplx denom = l_value(ctx, Cplx{1.0, 0.0} - s);
    const double denom_mod = std::abs(denom);
    if (denom_mod < 1e-12)
        throw near_zero_error(
            "ratio_magnitude: |L(chi, 1-s)| = " + format_double(denom_mod) +
            " at s = " + format_complex(s) +
            " is below 1e-12; the ratio is not reportable");
    return std::abs(l_value(ctx_conj, s)) / denom_mod;
}

double ratio_magnitude(const Character& chi, const Cplx& s) {
    const LContext ctx(chi);
    const LContext ctx_conj(chi.conjugate());
    return ratio_magnitude(ctx, ctx_conj, s);
}

bool in_left_ratio_region(const Cplx& s) {
    const double sigma = s.real();
    const double t = s.imag();
    return sigma > 0.0 && sigma < 0.5 &&
           (1.0 + sigma) * (1.0 + sigma) + t * t < kTwoPiSquared;
}

bool in_right_ratio_region(const Cplx& s) {
    const double sigma = s.real();
    const double t = s.imag();
    return sigma > 0.5 && sigma < 1.0 &&
           (2.0 - sigma) * (2.0 - sigma) + t * t < kTwoPiSquared;
}

RegionSweep region_sweep(const Character& chi, double resolution,
                         double margin) {
    if (!(resolution >= 1e-3))
        throw domain_error("region_sweep: resolution must be >= 1e-3");
    if (!(margin >= 0.0) || !(margin < 0.5))
        throw domain_error("region_sweep: margin must lie in [0, 1/2)");

    // Enumerate the grid first (sigma ascending, then t ascending) so the
    // parallel evaluation below writes into fixed slots.
    std::vector<Cplx> grid;
    const std::int64_t t_span = static_cast<std::int64_t>(
                                    std::floor(2.0 * std::numbers::pi /
                                               resolution)) +
                                1;
    for (std::int64_t k = 1;; ++k) {
        const double sigma = static_cast<double>(k) * resolution;
        if (sigma >= 1.0) break;
        if (std::abs(sigma - 0.5) < margin - 1e-12) continue;
        for (std::int64_t m = -t_span; m <= t_span; ++m) {
            const Cplx s{sigma, static_cast<double>(m) * resolution};
            if (in_left_ratio_region(s) || in_right_ratio_region(s))
                grid.push_back(s);
        }
    }
    if (grid.empty())
        throw domain_error("region_sweep: grid contains no region points");

    const LContext ctx(chi);
    const LContext ctx_conj(chi.conjugate());

    // Workers record the two moduli; classification stays serial so a
    // near-zero denominator is logged, not thrown across threads.
    std::vector<double> numer(grid.size());
    std::vector<double> denom(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        numer[i] = std::abs(l_value(ctx_conj, grid[i]));
        denom[i] = std::abs(l_value(ctx, Cplx{1.0, 0.0} - grid[i]));
    });

    RegionSweep sweep;
    sweep.points.reserve(grid.size());
    sweep.min_abs_dev = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (denom[i] < 1e-12) {
            sweep.skipped_near_zero.push_back(grid[i]);
            continue;
        }
        RegionPoint point;
        point.s = grid[i];
        point.in_left_region = in_left_ratio_region(grid[i]);
        point.in_right_region = in_right_ratio_region(grid[i]);
        point.ratio_magnitude = numer[i] / denom[i];
        sweep.points.push_back(point);
        if (point.in_left_region) ++sweep.left_count;
        if (point.in_right_region) ++sweep.right_count;
        const double dev = std::abs(point.ratio_magnitude - 1.0);
        if (dev < sweep.min_abs_dev) {
            sweep.min_abs_dev = dev;
            sweep.min_location = point.s;
        }
    }
    if (sweep.points.empty())
        throw numeric_consistency_error(
            "region_sweep: every grid point was skipped as near-zero");
    if (!(sweep.min_abs_dev > 0.0))
        throw numeric_consistency_error(
            "region_sweep: | |R| - 1 | reached zero at " +
            format_complex(sweep.min_location) +
            ", contradicting the off-line ratio separation");
    return sweep;
}

GammaInequality gamma_inequality_check(const Cplx& s) {
    if (!in_left_ratio_region(s))
        throw domain_error(
            "gamma_inequality_check: " + format_complex(s) +
            " is outside the left ratio region");
    GammaInequality result;
    const Cplx log_quotient =
        log_gamma((Cplx{2.0, 0.0} - s) / 2.0) -
        log_gamma((s + Cplx{1.0, 0.0}) / 2.0);
    result.lhs = std::exp(log_quotient.real());
    result.rhs = std::pow(std::abs((Cplx{1.0, 0.0} + s) / 2.0),
                          0.5 - s.real());
    result.holds = result.lhs <= result.rhs * (1.0 + 1e-12);
    return result;
}

}  // namespace lcrit
