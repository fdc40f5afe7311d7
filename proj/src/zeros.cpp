#include "lcrit/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <sstream>
#include <utility>

#include "lcrit/errors.hpp"
#include "lcrit/numio.hpp"
#include "lcrit/parallel.hpp"
#include "lcrit/winding.hpp"

namespace lcrit {
namespace {

constexpr double kBracketWidth = 1e-9;
// A recorded zero must sit this far (relatively) below the surrounding
// signal amplitude; violations mean the bisection converged onto noise.
constexpr double kResidualFraction = 1e-6;
// Strict local minima below this fraction of their neighbors trigger the
// fine re-examination pass for tangential (even-order) candidates.
constexpr double kDipFraction = 0.05;
// After 64-fold refinement, a sign-preserving dip below this fraction of
// the neighbor scale is flagged for manual review.
constexpr double kTangentialFraction = 1e-6;
// |L| threshold used when attributing a pooled zero to one conjugate factor.
constexpr double kAttributionTol = 1e-6;

int sign_of(double x) { return x > 0.0 ? 1 : (x < 0.0 ? -1 : 0); }

struct Bracket {
    double lo = 0.0;
    double hi = 0.0;
    double f_lo = 0.0;
    double f_hi = 0.0;
};

// Max |signal| over coarse samples within distance 1 of t: the local
// amplitude against which a recorded residual must be negligible.
double local_scale(const std::vector<double>& ts, const std::vector<double>& vals,
                   double t) {
    auto lo = std::lower_bound(ts.begin(), ts.end(), t - 1.0);
    auto hi = std::upper_bound(ts.begin(), ts.end(), t + 1.0);
    double scale = 0.0;
    for (auto it = lo; it != hi; ++it) {
        scale = std::max(scale, std::abs(vals[it - ts.begin()]));
    }
    return scale;
}

Bracket bisect(const LContext& ctx, Bracket b) {
    while (b.hi - b.lo >= kBracketWidth) {
        const double mid = 0.5 * (b.lo + b.hi);
        if (mid <= b.lo || mid >= b.hi) break;  // floating-point plateau
        double f_mid = critical_line_signal(ctx, mid);
        if (f_mid == 0.0) {
            // Landed exactly on the zero: nudge off it so the sign test
            // stays strict.
            const double nudged = b.lo + 0x1.00001p-1 * (b.hi - b.lo);
            f_mid = critical_line_signal(ctx, nudged);
            if (f_mid == 0.0) break;
            if (sign_of(f_mid) == sign_of(b.f_lo)) {
                b.lo = nudged;
                b.f_lo = f_mid;
            } else {
                b.hi = nudged;
                b.f_hi = f_mid;
            }
            continue;
        }
        if (sign_of(f_mid) == sign_of(b.f_lo)) {
            b.lo = mid;
            b.f_lo = f_mid;
        } else {
            b.hi = mid;
            b.f_hi = f_mid;
        }
    }
    return b;
}

}  // namespace

std::string attribution_token(ZeroAttribution attribution) {
    switch (attribution) {
        case ZeroAttribution::chi:
            return "chi";
        case ZeroAttribution::chi_bar:
            return "chi_bar";
        case ZeroAttribution::both_real:
            return "both_real";
    }
    throw domain_error("attribution_token: unknown attribution value");
}

ScanResult scan_zeros(const LContext& ctx, double height, double step) {
    if (!is_primitive(ctx.chi())) {
        throw domain_error("scan_zeros requires a primitive character; " +
                           ctx.chi().label() + " has conductor " +
                           std::to_string(ctx.conductor()));
    }
    if (!std::isfinite(height) || height <= 0.0) {
        throw domain_error("scan_zeros: height must be positive and finite");
    }
    if (!std::isfinite(step) || step <= 0.0 || step > 0.1) {
        throw domain_error(
            "scan_zeros: step must lie in (0, 0.1]; got " + format_double(step));
    }

    const auto n_steps =
        static_cast<std::int64_t>(std::ceil(height / step - 1e-12));
    std::vector<double> ts(static_cast<std::size_t>(n_steps) + 1);
    for (std::int64_t k = 0; k <= n_steps; ++k) {
        ts[static_cast<std::size_t>(k)] =
            std::min(static_cast<double>(k) * step, height);
    }
    std::vector<double> vals(ts.size());
    parallel_for(ts.size(), [&](std::size_t k) {
        vals[k] = critical_line_signal(ctx, ts[k]);
    });

    std::vector<Bracket> brackets;
    std::vector<double> flagged;

    for (std::size_t k = 0; k + 1 < ts.size(); ++k) {
        if (vals[k] != 0.0 && vals[k + 1] != 0.0 &&
            sign_of(vals[k]) != sign_of(vals[k + 1])) {
            brackets.push_back({ts[k], ts[k + 1], vals[k], vals[k + 1]});
        }
    }

    // Exact zeros at grid points (vanishingly rare): bracket across the
    // neighbors when they disagree in sign, otherwise flag.
    for (std::size_t k = 1; k + 1 < ts.size(); ++k) {
        if (vals[k] != 0.0) continue;
        if (vals[k - 1] != 0.0 && vals[k + 1] != 0.0 &&
            sign_of(vals[k - 1]) != sign_of(vals[k + 1])) {
            brackets.push_back({ts[k - 1], ts[k + 1], vals[k - 1], vals[k + 1]});
        } else {
            flagged.push_back(ts[k]);
        }
    }

    // Tangential-candidate pass: a strict sign-preserving local minimum well
    // below its neighbors either hides a close pair (recovered by 64x local
    // refinement) or an even-order touch (flagged, never recorded).
    for (std::size_t k = 1; k + 1 < ts.size(); ++k) {
        const double a = vals[k - 1], m = vals[k], c = vals[k + 1];
        if (m == 0.0 || a == 0.0 || c == 0.0) continue;
        if (sign_of(a) != sign_of(m) || sign_of(m) != sign_of(c)) continue;
        if (std::abs(m) >= std::abs(a) || std::abs(m) >= std::abs(c)) continue;
        const double neighbor_scale = std::max(std::abs(a), std::abs(c));
        if (std::abs(m) >= kDipFraction * neighbor_scale) continue;

        const int refine = 128;  // 64x finer than the scan step
        const double lo = ts[k - 1], span = ts[k + 1] - ts[k - 1];
        std::vector<double> ft(refine + 1), fv(refine + 1);
        for (int j = 0; j <= refine; ++j) {
            ft[j] = lo + span * j / refine;
        }
        parallel_for(ft.size(), [&](std::size_t j) {
            fv[j] = critical_line_signal(ctx, ft[j]);
        });
        bool found_pair = false;
        double min_abs = std::numeric_limits<double>::infinity();
        double min_at = ts[k];
        for (int j = 0; j < refine; ++j) {
            if (std::abs(fv[j]) < min_abs) {
                min_abs = std::abs(fv[j]);
                min_at = ft[j];
            }
            if (fv[j] != 0.0 && fv[j + 1] != 0.0 &&
                sign_of(fv[j]) != sign_of(fv[j + 1])) {
                brackets.push_back({ft[j], ft[j + 1], fv[j], fv[j + 1]});
                found_pair = true;
            }
        }
        if (!found_pair && min_abs < kTangentialFraction * neighbor_scale) {
            flagged.push_back(min_at);
        }
    }

    std::sort(brackets.begin(), brackets.end(),
              [](const Bracket& x, const Bracket& y) { return x.lo < y.lo; });
    std::sort(flagged.begin(), flagged.end());

    std::optional<LContext> ctx_conj;
    if (!ctx.self_conjugate()) {
        ctx_conj.emplace(ctx.chi().conjugate());
    }

    ScanResult result;
    result.flagged_candidates = std::move(flagged);
    for (const Bracket& coarse : brackets) {
        const Bracket fine = bisect(ctx, coarse);
        ZeroRecord rec;
        rec.modulus = ctx.chi().modulus();
        rec.char_label = ctx.chi().label();
        rec.t_lo = fine.lo;
        rec.t_hi = fine.hi;
        rec.t = 0.5 * (fine.lo + fine.hi);
        const Cplx s{0.5, rec.t};
        rec.residual = ctx.self_conjugate() ? std::abs(normalized_lambda(ctx, s))
                                            : std::abs(normalized_g(ctx, s));
        const double scale = local_scale(ts, vals, rec.t);
        if (!(rec.residual < kResidualFraction * scale)) {
            throw numeric_consistency_error(
                "scan_zeros: residual " + format_double(rec.residual) +
                " at t = " + format_double(rec.t) +
                " is not negligible against the local signal scale " +
                format_double(scale));
        }
        if (ctx.self_conjugate()) {
            rec.attribution = ZeroAttribution::both_real;
        } else {
            const double mag_chi = std::abs(l_value(ctx, s));
            const double mag_bar = std::abs(l_value(*ctx_conj, s));
            if (mag_chi < kAttributionTol && mag_bar < kAttributionTol) {
                rec.attribution = ZeroAttribution::both_real;
            } else if (mag_chi <= mag_bar) {
                rec.attribution = ZeroAttribution::chi;
            } else {
                rec.attribution = ZeroAttribution::chi_bar;
            }
        }
        result.records.push_back(std::move(rec));
    }
    return result;
}

int rectangle_count(const LContext& ctx, double sigma_lo, double sigma_hi,
                    double t_lo, double t_hi) {
    if (!std::isfinite(sigma_lo) || !std::isfinite(sigma_hi) ||
        !std::isfinite(t_lo) || !std::isfinite(t_hi)) {
        throw domain_error("rectangle_count: bounds must be finite");
    }
    if (sigma_lo >= sigma_hi || t_lo >= t_hi) {
        return 0;  // empty rectangle contains no zeros
    }
    // The completed value is the right integrand: its Gamma factor cancels
    // the trivial zeros (notably s = 0 on a t_lo = 0 boundary for even
    // characters).  Self-conjugate characters wind Lambda once per zero;
    // complex ones wind the paired product, one turn per pooled zero.
    std::function<Cplx(const Cplx&)> f;
    if (ctx.self_conjugate()) {
        f = [&ctx](const Cplx& s) { return lambda_value(ctx, s); };
    } else {
        f = [&ctx](const Cplx& s) { return g_value(ctx, s); };
    }
    const WindingResult w = rectangle_winding(f, sigma_lo, sigma_hi, t_lo, t_hi);
    if (w.indeterminate) {
        throw numeric_consistency_error(
            "rectangle_count: contour total " + format_double(w.turns) +
            " turns did not settle on an integer");
    }
    return w.winding;
}

int verify_scan_completeness(const LContext& ctx, const ScanResult& scan,
                             double height) {
    if (!scan.flagged_candidates.empty()) {
        std::ostringstream msg;
        msg << "zero atlas for " << ctx.chi().label() << " is not certifiable: "
            << scan.flagged_candidates.size()
            << " tangential candidate(s) unresolved, first at t = "
            << format_double(scan.flagged_candidates.front());
        throw incomplete_atlas_error(msg.str());
    }
    const int counted = rectangle_count(ctx, -0.1, 1.1, 0.0, height);
    const int scanned = static_cast<int>(scan.records.size());
    if (counted != scanned) {
        std::ostringstream msg;
        msg << "zero atlas for " << ctx.chi().label() << " up to height "
            << format_double(height) << " is incomplete: scan recorded "
            << scanned << " zero(s) but the argument principle counts "
            << counted;
        throw incomplete_atlas_error(msg.str());
    }
    return counted;
}

ZeroClass classify_zero(const Character& chi, const Cplx& s, double tol) {
    if (!std::isfinite(tol) || tol <= 0.0 || tol > 1e-2) {
        throw domain_error("classify_zero: tolerance must lie in (0, 1e-2]");
    }
    const LContext ctx(chi);
    Cplx value;
    try {
        value = l_value(ctx, s);
    } catch (const pole_error&) {
        throw domain_error(
            "classify_zero: s = " + format_complex(s) +
            " is the pole of the principal L-series, not a zero");
    }
    if (!(std::abs(value) < tol)) {
        throw domain_error("classify_zero: |L| = " +
                           format_double(std::abs(value)) + " at s = " +
                           format_complex(s) + " is not below the tolerance " +
                           format_double(tol));
    }

    const int parity = ctx.parity();
    for (int k = 1;; ++k) {
        const double trivial_at = parity - 2.0 * k;
        if (trivial_at < -2.0 - tol) break;  // outside the validated domain
        if (std::abs(s - Cplx(trivial_at, 0.0)) <= tol) {
            return ZeroClass::trivial;
        }
    }
    if (!chi.is_principal() && parity == 0 && std::abs(s) <= tol) {
        return ZeroClass::trivial;
    }
    for (const std::int64_t p : ctx.extra_primes()) {
        const Cplx factor =
            1.0 - ctx.primitive().eval(p) *
                      std::exp(-s * std::log(static_cast<double>(p)));
        if (std::abs(factor) < tol) {
            return ZeroClass::extraneous;
        }
    }
    return ZeroClass::nontrivial;
}

WindowStats window_stats(const std::vector<ZeroRecord>& records, double eta,
                         const std::function<double(double)>& phi,
                         double height) {
    if (!std::isfinite(eta) || eta <= 0.0) {
        throw domain_error("window_stats: eta must be positive and finite");
    }
    if (!std::isfinite(height) || height <= 0.0) {
        throw domain_error("window_stats: height must be positive and finite");
    }
    if (!phi) {
        throw domain_error("window_stats: a window-bound function is required");
    }

    WindowStats stats;
    stats.eta = eta;
    stats.height = height;
    const auto n_windows =
        static_cast<std::int64_t>(std::floor(height / eta + 1e-12));
    stats.counts.assign(static_cast<std::size_t>(std::max<std::int64_t>(
                            n_windows, 0)),
                        0);
    for (const ZeroRecord& rec : records) {
        if (!(rec.t > 0.0)) continue;
        // Window j covers (j*eta, (j+1)*eta].
        const auto j = static_cast<std::int64_t>(std::ceil(rec.t / eta)) - 1;
        if (j >= 0 && j < n_windows) {
            ++stats.counts[static_cast<std::size_t>(j)];
        }
    }

    const double phi_at_height = phi(height);
    if (!std::isfinite(phi_at_height) || phi_at_height <= 0.0) {
        throw numeric_consistency_error(
            "window_stats: the window-bound function must be positive and "
            "finite at T = " +
            format_double(height) + "; got " + format_double(phi_at_height));
    }
    const double density =
        eta / (2.0 * 3.14159265358979323846) * std::log(height);
    const double lower = density / phi_at_height;
    const double upper = phi_at_height * density;
    std::int64_t within = 0;
    for (const int c : stats.counts) {
        if (c > lower && c < upper) ++within;
    }
    stats.fraction_within_bounds =
        stats.counts.empty()
            ? 0.0
            : static_cast<double>(within) / static_cast<double>(stats.counts.size());
    return stats;
}

std::string zero_atlas_csv(std::vector<ZeroRecord> records) {
    std::sort(records.begin(), records.end(),
              [](const ZeroRecord& a, const ZeroRecord& b) {
                  if (a.modulus != b.modulus) return a.modulus < b.modulus;
                  if (a.char_label != b.char_label)
                      return a.char_label < b.char_label;
                  return a.t < b.t;
              });
    std::string out = "q,char_label,t,t_lo,t_hi,residual,attribution\n";
    for (const ZeroRecord& rec : records) {
        out += std::to_string(rec.modulus);
        out += ',';
        out += rec.char_label;
        out += ',';
        out += format_double(rec.t);
        out += ',';
        out += format_double(rec.t_lo);
        out += ',';
        out += format_double(rec.t_hi);
        out += ',';
        out += format_double(rec.residual);
        out += ',';
        out += attribution_token(rec.attribution);
        out += '\n';
    }
    return out;
}

}  // namespace lcrit
