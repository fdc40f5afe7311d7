#include "lcrit/winding.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

#include "lcrit/errors.hpp"
#include "lcrit/parallel.hpp"

namespace lcrit {

namespace {

void validate_options(const WindingOptions& opts) {
    if (opts.initial_samples < 8)
        throw domain_error("contour_winding: need at least 8 initial samples");
    if (opts.max_doublings < 0 || opts.max_doublings > 24)
        throw domain_error("contour_winding: max_doublings out of [0, 24]");
    if (!(opts.max_phase_step > 0.0) ||
        !(opts.max_phase_step < std::numbers::pi))
        throw domain_error(
            "contour_winding: max_phase_step must lie in (0, pi)");
    if (!(opts.boundary_dip_ratio > 0.0) || !(opts.boundary_dip_ratio < 1e-2))
        throw domain_error(
            "contour_winding: boundary_dip_ratio must lie in (0, 1e-2)");
    if (!(opts.integer_tolerance > 0.0) || !(opts.integer_tolerance < 0.5))
        throw domain_error(
            "contour_winding: integer_tolerance must lie in (0, 0.5)");
}

// Exact zeros and relative dips both mean the contour runs through a zero.
void check_boundary(const std::vector<Cplx>& values,
                    const std::function<Cplx(double)>& path,
                    double dip_ratio) {
    const std::size_t n = values.size();
    for (std::size_t k = 0; k < n; ++k) {
        const double m = std::abs(values[k]);
        const double prev = std::abs(values[(k + n - 1) % n]);
        const double next = std::abs(values[(k + 1) % n]);
        if (m == 0.0 || m < dip_ratio * (prev + next)) {
            const Cplx where = path(static_cast<double>(k) /
                                    static_cast<double>(n));
            throw boundary_zero_error(
                "contour_winding: function modulus " + format_double(m) +
                " at contour point " + format_complex(where) +
                " indicates a zero on the contour");
        }
    }
}

}  // namespace

WindingResult contour_winding(const std::function<Cplx(double)>& path,
                              const std::function<Cplx(const Cplx&)>& f,
                              const WindingOptions& opts) {
    validate_options(opts);

    std::size_t n = static_cast<std::size_t>(opts.initial_samples);
    std::vector<Cplx> values(n);
    parallel_for(n, [&](std::size_t k) {
        values[k] = f(path(static_cast<double>(k) / static_cast<double>(n)));
    });

    for (int round = 0;; ++round) {
        check_boundary(values, path, opts.boundary_dip_ratio);

        double max_step = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            const double step =
                std::abs(std::arg(values[(k + 1) % n] / values[k]));
            if (step > max_step) max_step = step;
        }

        if (max_step < opts.max_phase_step) {
            double total = 0.0;
            double min_modulus = std::abs(values[0]);
            for (std::size_t k = 0; k < n; ++k) {
                total += std::arg(values[(k + 1) % n] / values[k]);
                min_modulus = std::min(min_modulus, std::abs(values[k]));
            }
            WindingResult result;
            result.turns = total / (2.0 * std::numbers::pi);
            result.winding = static_cast<int>(std::llround(result.turns));
            result.indeterminate =
                std::abs(result.turns - result.winding) >
                opts.integer_tolerance;
            result.max_phase_step = max_step;
            result.min_modulus = min_modulus;
            result.samples = static_cast<int>(n);
            return result;
        }

        if (round >= opts.max_doublings)
            throw resolution_error(
                "contour_winding: max phase step " + format_double(max_step) +
                " still exceeds " + format_double(opts.max_phase_step) +
                " after " + std::to_string(n) + " samples");

        // Double the density, keeping every existing evaluation: old sample k
        // becomes new sample 2k and the new midpoints fill the odd slots.
        std::vector<Cplx> refined(2 * n);
        parallel_for(n, [&](std::size_t k) {
            refined[2 * k] = values[k];
            refined[2 * k + 1] =
                f(path((2.0 * static_cast<double>(k) + 1.0) /
                       (2.0 * static_cast<double>(n))));
        });
        values = std::move(refined);
        n *= 2;
    }
}

WindingResult circle_winding(const std::function<Cplx(const Cplx&)>& f,
                             const Cplx& center, double radius,
                             const WindingOptions& opts) {
    if (!(radius > 0.0))
        throw domain_error("circle_winding: radius must be positive");
    auto path = [center, radius](double u) {
        return center + radius * std::polar(1.0, 2.0 * std::numbers::pi * u);
    };
    return contour_winding(path, f, opts);
}

WindingResult rectangle_winding(const std::function<Cplx(const Cplx&)>& f,
                                double sigma_lo, double sigma_hi,
                                double t_lo, double t_hi,
                                const WindingOptions& opts) {
    if (!(sigma_lo < sigma_hi) || !(t_lo < t_hi))
        throw domain_error("rectangle_winding: empty or inverted rectangle");
    auto path = [=](double u) -> Cplx {
        const double v = 4.0 * (u - std::floor(u));
        if (v < 1.0) return {sigma_lo + (sigma_hi - sigma_lo) * v, t_lo};
        if (v < 2.0) return {sigma_hi, t_lo + (t_hi - t_lo) * (v - 1.0)};
        if (v < 3.0)
            return {sigma_hi - (sigma_hi - sigma_lo) * (v - 2.0), t_hi};
        return {sigma_lo, t_hi - (t_hi - t_lo) * (v - 3.0)};
    };
    return contour_winding(path, f, opts);
}

}  // namespace lcrit
