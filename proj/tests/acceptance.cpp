// Acceptance suite: one self-contained binary that checks the nine
// end-to-end guarantees of the library at desk scale and prints exactly one
// PASS/FAIL line per criterion.  Thresholds and runtime budgets are pinned
// as constants next to each criterion; nothing is configurable from the
// command line, so a green run always attests to the same statements.
//
// Exit status: 0 when every criterion passes, 1 otherwise.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdarg>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "lcrit/characters.hpp"
#include "lcrit/criteria.hpp"
#include "lcrit/errors.hpp"
#include "lcrit/hadamard.hpp"
#include "lcrit/lfunctions.hpp"
#include "lcrit/numio.hpp"
#include "lcrit/zeros.hpp"

namespace {

using lcrit::Cplx;

constexpr double kPi = 3.14159265358979323846;

std::vector<lcrit::Character> primitive_characters(std::int64_t q) {
    std::vector<lcrit::Character> out;
    for (const lcrit::Character& chi : lcrit::enumerate_characters(q)) {
        if (lcrit::is_primitive(chi)) out.push_back(chi);
    }
    return out;
}

std::string fmt(const char* format, ...) {
    char buf[512];
    va_list args;
    va_start(args, format);
    std::vsnprintf(buf, sizeof(buf), format, args);
    va_end(args);
    return std::string(buf);
}

// ---------------------------------------------------------------------------
// Criterion 1: completed-function symmetry.  For every primitive character
// with modulus <= 20, the relative residual of the reflection identity is
// <= 1e-8 on a 5x5 grid over [0.1, 0.9] x [0, 10]i.  Budget: 60 s.
// ---------------------------------------------------------------------------

bool criterion_functional_equation(std::string& detail) {
    constexpr double kTol = 1e-8;
    double worst = 0.0;
    std::string worst_at;
    int n_chars = 0;
    bool ok = true;
    for (std::int64_t q = 1; q <= 20; ++q) {
        for (const lcrit::Character& chi : primitive_characters(q)) {
            ++n_chars;
            const lcrit::LContext ctx(chi);
            for (int i = 0; i < 5; ++i) {
                for (int j = 0; j < 5; ++j) {
                    const Cplx s(0.1 + 0.2 * i, 2.5 * j);
                    const double r =
                        lcrit::functional_equation_residual(ctx, s)
                            .relative_residual;
                    if (r > worst) {
                        worst = r;
                        worst_at = chi.label() + " at s = " +
                                   lcrit::format_complex(s);
                    }
                    if (!(r <= kTol)) ok = false;
                }
            }
        }
    }
    detail = fmt("%d primitive characters, 25 grid points each, max relative "
                 "residual %.3g (tolerance %.0e) at %s",
                 n_chars, worst, kTol, worst_at.c_str());
    return ok;
}

// ---------------------------------------------------------------------------
// Criterion 2: the conjugate-ratio magnitude on the critical line.  For all
// primitive characters with modulus <= 10 and 100 seeded-random ordinates
// t in (0, 30], | |L(conj chi, 1/2+it)/L(chi, 1/2-it)| - 1 | <= 1e-10.
// ---------------------------------------------------------------------------

bool criterion_critical_line_ratio(std::string& detail) {
    constexpr double kTol = 1e-10;
    std::mt19937 rng(193707211u);
    std::uniform_real_distribution<double> dist(0.0, 30.0);
    std::vector<double> ordinates(100);
    for (double& t : ordinates) t = 30.0 - dist(rng);  // lands in (0, 30]

    double worst = 0.0;
    int n_chars = 0;
    bool ok = true;
    for (std::int64_t q = 1; q <= 10; ++q) {
        for (const lcrit::Character& chi : primitive_characters(q)) {
            ++n_chars;
            const lcrit::LContext ctx(chi);
            const lcrit::LContext ctx_conj(chi.conjugate());
            for (const double t : ordinates) {
                const double r = lcrit::ratio_magnitude(ctx, ctx_conj,
                                                        Cplx(0.5, t));
                const double dev = std::abs(r - 1.0);
                worst = std::max(worst, dev);
                if (!(dev <= kTol)) ok = false;
            }
        }
    }
    detail = fmt("%d primitive characters x 100 ordinates, max deviation "
                 "%.3g (tolerance %.0e)",
                 n_chars, worst, kTol);
    return ok;
}

// ---------------------------------------------------------------------------
// Criterion 3: off-line ratio regions.  For every primitive character with
// modulus in {1,3,4,5}, a 0.05-resolution sweep with a 0.05 margin off the
// critical line has min ||R|-1| strictly positive over both regions, and
// the Gamma-quotient inequality holds at every left-region grid point.
// Budget: 300 s.
// ---------------------------------------------------------------------------

bool criterion_ratio_regions(std::string& detail) {
    constexpr double kResolution = 0.05;
    constexpr double kMargin = 0.05;
    double global_min_dev = std::numeric_limits<double>::infinity();
    double min_slack = std::numeric_limits<double>::infinity();
    std::size_t gamma_points = 0;
    std::size_t gamma_failures = 0;
    int n_chars = 0;
    bool ok = true;
    for (const std::int64_t q : {1, 3, 4, 5}) {
        for (const lcrit::Character& chi : primitive_characters(q)) {
            ++n_chars;
            const lcrit::RegionSweep sweep =
                lcrit::region_sweep(chi, kResolution, kMargin);
            if (!(sweep.min_abs_dev > 0.0)) ok = false;
            if (sweep.left_count == 0 || sweep.right_count == 0) ok = false;
            global_min_dev = std::min(global_min_dev, sweep.min_abs_dev);
            for (const lcrit::RegionPoint& p : sweep.points) {
                if (!p.in_left_region) continue;
                const lcrit::GammaInequality check =
                    lcrit::gamma_inequality_check(p.s);
                ++gamma_points;
                if (!check.holds) {
                    ++gamma_failures;
                    ok = false;
                }
                min_slack = std::min(min_slack, check.rhs - check.lhs);
            }
        }
    }
    detail = fmt("%d characters swept, min ||R|-1| = %.3g (> 0 required); "
                 "Gamma inequality held at %zu/%zu left points (min slack "
                 "%.3g)",
                 n_chars, global_min_dev, gamma_points - gamma_failures,
                 gamma_points, min_slack);
    return ok;
}

// ---------------------------------------------------------------------------
// Criterion 4: the induced-factorization identity.  For every imprimitive
// character with modulus <= 24 and s in {2, 3, 2+5i}, the direct series
// agrees with the primitive-times-Euler-factors evaluation to 1e-10.
// ---------------------------------------------------------------------------

bool criterion_factorization(std::string& detail) {
    constexpr double kTol = 1e-10;
    const std::vector<Cplx> points{{2.0, 0.0}, {3.0, 0.0}, {2.0, 5.0}};
    double worst = 0.0;
    int n_chars = 0;
    bool ok = true;
    for (std::int64_t q = 1; q <= 24; ++q) {
        for (const lcrit::Character& chi : lcrit::enumerate_characters(q)) {
            if (lcrit::is_primitive(chi)) continue;
            ++n_chars;
            const lcrit::LContext ctx(chi);
            for (const Cplx& s : points) {
                const double r = lcrit::factorization_check(ctx, s);
                worst = std::max(worst, r);
                if (!(r <= kTol)) ok = false;
            }
        }
    }
    detail = fmt("%d imprimitive characters x 3 points, max residual %.3g "
                 "(tolerance %.0e)",
                 n_chars, worst, kTol);
    return ok;
}

// ---------------------------------------------------------------------------
// Criterion 5: Hurwitz-decomposition evaluation equals tail-completed
// direct-series summation (10^6 terms) within 1e-9 at s = 2 for every
// character with modulus <= 20.
// ---------------------------------------------------------------------------

bool criterion_hurwitz_vs_series(std::string& detail) {
    constexpr double kTol = 1e-9;
    constexpr std::int64_t kTerms = 1'000'000;
    const Cplx s(2.0, 0.0);
    double worst = 0.0;
    int n_chars = 0;
    bool ok = true;
    for (std::int64_t q = 1; q <= 20; ++q) {
        for (const lcrit::Character& chi : lcrit::enumerate_characters(q)) {
            ++n_chars;
            const lcrit::LContext ctx(chi);
            const Cplx via_hurwitz = lcrit::l_value(ctx, s);
            const Cplx via_series =
                lcrit::dirichlet_series_direct(chi, s, kTerms);
            const double rel = std::abs(via_hurwitz - via_series) /
                               std::max(std::abs(via_hurwitz), 1e-300);
            worst = std::max(worst, rel);
            if (!(rel <= kTol)) ok = false;
        }
    }
    detail = fmt("%d characters at s = 2, max relative difference %.3g "
                 "(tolerance %.0e, 10^6 terms)",
                 n_chars, worst, kTol);
    return ok;
}

// ---------------------------------------------------------------------------
// Criterion 6: zero scans against the argument principle.  The modulus-1
// scan to height 20 finds exactly one zero at 14.134725 +- 1e-6; for every
// primitive character with modulus in {3,4,5}, the scan count to height 50
// equals the rectangle count exactly; every recorded zero has a normalized
// residual below 1e-6.  Budget: 600 s.
// ---------------------------------------------------------------------------

bool criterion_zero_scan(std::string& detail) {
    constexpr double kOrdinateTol = 1e-6;
    constexpr double kResidualTol = 1e-6;
    bool ok = true;
    std::ostringstream note;

    const lcrit::LContext ctx1(lcrit::enumerate_characters(1).front());
    const lcrit::ScanResult scan1 = lcrit::scan_zeros(ctx1, 20.0);
    if (scan1.records.size() != 1) {
        ok = false;
        note << "modulus 1: expected 1 zero below 20, got "
             << scan1.records.size() << "; ";
    } else {
        const lcrit::ZeroRecord& z = scan1.records.front();
        if (!(std::abs(z.t - 14.134725) <= kOrdinateTol)) ok = false;
        if (!(z.residual < kResidualTol)) ok = false;
        note << "modulus 1: one zero at t = " << lcrit::format_double(z.t)
             << "; ";
    }

    int total_zeros = 0;
    int scanned_chars = 0;
    double worst_residual = 0.0;
    for (const std::int64_t q : {3, 4, 5}) {
        for (const lcrit::Character& chi : primitive_characters(q)) {
            ++scanned_chars;
            const lcrit::LContext ctx(chi);
            const lcrit::ScanResult scan = lcrit::scan_zeros(ctx, 50.0);
            const int rectangle =
                lcrit::rectangle_count(ctx, -0.1, 1.1, 0.0, 50.0);
            if (rectangle != static_cast<int>(scan.records.size())) {
                ok = false;
                note << chi.label() << ": scan "
                     << scan.records.size() << " vs rectangle " << rectangle
                     << "; ";
            }
            if (!scan.flagged_candidates.empty()) {
                ok = false;
                note << chi.label() << ": unresolved dip candidates; ";
            }
            total_zeros += static_cast<int>(scan.records.size());
            for (const lcrit::ZeroRecord& z : scan.records) {
                worst_residual = std::max(worst_residual, z.residual);
                if (!(z.residual < kResidualTol)) ok = false;
            }
        }
    }
    detail = fmt("%s%d characters at height 50, %d zeros, scan == rectangle "
                 "everywhere, max residual %.3g (tolerance %.0e)",
                 note.str().c_str(), scanned_chars, total_zeros,
                 worst_residual, kResidualTol);
    return ok;
}

// ---------------------------------------------------------------------------
// Criterion 7: disc zero counts against a dense-boundary oracle.  For the
// disc |s - (0.75+2i)| <= 0.1 and the nonprincipal character mod 4, the
// winding-engine zero count of both truncated approximants agrees with an
// independent fixed-grid phase walk at every N in [100, 300].  The observed
// all-zero pattern is reported, never asserted.
// ---------------------------------------------------------------------------

// Independent phase walk: M fixed boundary samples, phase accumulated
// sample-to-sample.  Returns -1 (and sets `reason`) if the walk is not
// trustworthy: a sample modulus collapsed or a phase step exceeded pi/2.
int dense_walk_count(const std::vector<Cplx>& boundary_values,
                     std::string& reason) {
    double total = 0.0;
    const std::size_t m = boundary_values.size();
    for (std::size_t k = 0; k < m; ++k) {
        const Cplx cur = boundary_values[k];
        const Cplx next = boundary_values[(k + 1) % m];
        if (std::abs(cur) == 0.0) {
            reason = "sample modulus collapsed to zero";
            return -1;
        }
        const double step = std::arg(next * std::conj(cur));
        if (!(std::abs(step) < kPi / 2)) {
            reason = "phase step exceeded pi/2";
            return -1;
        }
        total += step;
    }
    const double turns = total / (2.0 * kPi);
    const long rounded = std::lround(turns);
    if (std::abs(turns - static_cast<double>(rounded)) > 0.1) {
        reason = "winding total did not settle near an integer";
        return -1;
    }
    return static_cast<int>(rounded);
}

bool criterion_disc_oracle(std::string& detail) {
    constexpr std::int64_t kNLo = 100;
    constexpr std::int64_t kNHi = 300;
    constexpr int kSamples = 4096;
    const lcrit::Disc disc{Cplx(0.75, 2.0), 0.1};
    const lcrit::Character chi = lcrit::Character::parse_label("4.1");
    const std::int64_t q = chi.modulus();

    std::vector<Cplx> z(kSamples);
    for (int k = 0; k < kSamples; ++k) {
        const double angle = 2.0 * kPi * k / kSamples;
        z[k] = disc.center + disc.radius * Cplx(std::cos(angle),
                                                std::sin(angle));
    }

    bool ok = true;
    std::ostringstream note;
    for (const lcrit::CriterionVariant variant :
         {lcrit::CriterionVariant::partial_sum,
          lcrit::CriterionVariant::smoothed_sum}) {
        const bool plain = variant == lcrit::CriterionVariant::partial_sum;
        const char* tag = plain ? "S_N" : "G_N";
        const lcrit::DiscReport report =
            lcrit::criterion_report(chi, disc, kNLo, kNHi, variant);
        if (report.entries.size() !=
            static_cast<std::size_t>(kNHi - kNLo + 1)) {
            ok = false;
            note << tag << " report has " << report.entries.size()
                 << " entries, expected " << (kNHi - kNLo + 1) << "; ";
            continue;
        }

        // Oracle state, advanced incrementally in N.
        // plain: running sums of chi(n) n^{-z} for n <= N.
        // smoothed: running residue-class sums of chi(a) (n + a/q)^{-z}
        // over n < N, with the fresh 1/(z-1) tail attached per N.
        std::vector<Cplx> acc(kSamples, Cplx(0.0, 0.0));
        std::vector<Cplx> q_pow(kSamples);
        const double log_q = std::log(static_cast<double>(q));
        for (int k = 0; k < kSamples; ++k) {
            q_pow[k] = std::exp(-z[k] * log_q);
        }
        if (plain) {
            for (std::int64_t n = 1; n < kNLo; ++n) {
                const Cplx weight = chi.eval(n);
                if (weight == Cplx(0.0, 0.0)) continue;
                const double log_n = std::log(static_cast<double>(n));
                for (int k = 0; k < kSamples; ++k) {
                    acc[k] += weight * std::exp(-z[k] * log_n);
                }
            }
        } else {
            for (std::int64_t a = 1; a <= q; ++a) {
                const Cplx weight = chi.eval(a);
                if (weight == Cplx(0.0, 0.0)) continue;
                const double frac = static_cast<double>(a) /
                                    static_cast<double>(q);
                for (std::int64_t n = 0; n + 1 < kNLo; ++n) {
                    const double log_w = std::log(n + frac);
                    for (int k = 0; k < kSamples; ++k) {
                        acc[k] += weight * std::exp(-z[k] * log_w);
                    }
                }
            }
        }

        int mismatches = 0;
        int nonzero_counts = 0;
        std::vector<Cplx> values(kSamples);
        std::vector<Cplx> tails(kSamples);
        for (std::int64_t n = kNLo; n <= kNHi; ++n) {
            if (plain) {
                const Cplx weight = chi.eval(n);
                if (weight != Cplx(0.0, 0.0)) {
                    const double log_n = std::log(static_cast<double>(n));
                    for (int k = 0; k < kSamples; ++k) {
                        acc[k] += weight * std::exp(-z[k] * log_n);
                    }
                }
                values = acc;
            } else {
                std::fill(tails.begin(), tails.end(), Cplx(0.0, 0.0));
                for (std::int64_t a = 1; a <= q; ++a) {
                    const Cplx weight = chi.eval(a);
                    if (weight == Cplx(0.0, 0.0)) continue;
                    const double frac = static_cast<double>(a) /
                                        static_cast<double>(q);
                    const double log_top = std::log((n - 1) + frac);
                    const double log_tail = std::log(n + frac);
                    for (int k = 0; k < kSamples; ++k) {
                        acc[k] += weight * std::exp(-z[k] * log_top);
                        tails[k] += weight *
                                    std::exp((1.0 - z[k]) * log_tail) /
                                    (z[k] - 1.0);
                    }
                }
                for (int k = 0; k < kSamples; ++k) {
                    values[k] = q_pow[k] * (acc[k] + tails[k]);
                }
            }

            std::string reason;
            const int oracle = dense_walk_count(values, reason);
            const lcrit::DiscCountEntry& entry =
                report.entries[static_cast<std::size_t>(n - kNLo)];
            if (oracle < 0) {
                ok = false;
                if (mismatches++ == 0) {
                    note << tag << " oracle failed at N = " << n << " ("
                         << reason << "); ";
                }
                continue;
            }
            if (entry.indeterminate || entry.zero_count != oracle) {
                ok = false;
                if (mismatches++ == 0) {
                    note << tag << " mismatch at N = " << n << ": engine "
                         << (entry.indeterminate
                                 ? std::string("indeterminate")
                                 : std::to_string(entry.zero_count))
                         << " vs oracle " << oracle << "; ";
                }
            }
            if (oracle != 0) ++nonzero_counts;
        }
        note << tag << ": " << (kNHi - kNLo + 1 - mismatches) << "/"
             << (kNHi - kNLo + 1) << " counts agree, "
             << (nonzero_counts == 0
                     ? std::string("all zero (reported, not asserted)")
                     : std::to_string(nonzero_counts) + " nonzero")
             << "; ";
    }
    detail = note.str();
    return ok;
}

// ---------------------------------------------------------------------------
// Criterion 8: uniform convergence of the smoothed approximant.  Over the
// test disc, sup |G_N - L| is non-increasing (10% tolerance) across
// N in {50, 100, 200, 400, 800, 1600} for moduli 1, 3, 4.
// ---------------------------------------------------------------------------

bool criterion_smoothed_convergence(std::string& detail) {
    constexpr double kSlack = 1.10;
    const std::vector<std::int64_t> lengths{50, 100, 200, 400, 800, 1600};
    const Cplx center(0.75, 2.0);
    const double radius = 0.1;
    constexpr int kBoundary = 64;

    bool ok = true;
    std::ostringstream note;
    for (const std::int64_t q : {1, 3, 4}) {
        const lcrit::Character chi =
            q == 1 ? lcrit::enumerate_characters(1).front()
                   : lcrit::Character::parse_label(std::to_string(q) + ".1");
        const lcrit::LContext ctx(chi);

        std::vector<Cplx> points;
        points.push_back(center);
        for (int k = 0; k < kBoundary; ++k) {
            const double angle = 2.0 * kPi * k / kBoundary;
            points.push_back(center + radius * Cplx(std::cos(angle),
                                                    std::sin(angle)));
        }
        std::vector<Cplx> l_values;
        l_values.reserve(points.size());
        for (const Cplx& s : points) l_values.push_back(lcrit::l_value(ctx, s));

        double prev = std::numeric_limits<double>::infinity();
        std::vector<double> sups;
        for (const std::int64_t n : lengths) {
            double sup = 0.0;
            for (std::size_t i = 0; i < points.size(); ++i) {
                sup = std::max(sup, std::abs(lcrit::g_n_sum(chi, points[i], n) -
                                             l_values[i]));
            }
            sups.push_back(sup);
            if (!(sup <= kSlack * prev)) ok = false;
            prev = sup;
        }
        note << chi.label() << ": sup deviations";
        for (const double s : sups) note << " " << fmt("%.2e", s);
        note << "; ";
    }
    detail = note.str();
    return ok;
}

// ---------------------------------------------------------------------------
// Criterion 9: reconstruction from computed zeros.  The paired critical-line
// restriction is even to 1e-6; for modulus 1 with zeros to height 100 the
// direct/product log-ratio is even to 1e-6 and bounded by the computed tail
// envelope at every sample; raising the truncation height from 50 to 100
// does not increase the max |log-ratio| on [-5, 5] (10% tolerance).
// ---------------------------------------------------------------------------

bool criterion_reconstruction(std::string& detail) {
    constexpr double kEvenTol = 1e-6;
    constexpr double kSlack = 1.10;
    bool ok = true;
    std::ostringstream note;

    // Evenness of the paired critical-line restriction.
    double worst_even = 0.0;
    for (const std::int64_t q : {1, 3, 4, 5}) {
        for (const lcrit::Character& chi : primitive_characters(q)) {
            const lcrit::LContext ctx(chi);
            for (int k = 1; k <= 80; ++k) {
                const double v = 0.25 * k;
                const double plus = lcrit::psi_value(ctx, v);
                const double minus = lcrit::psi_value(ctx, -v);
                const double scale = std::max(
                    {std::abs(plus), std::abs(minus), 1e-300});
                const double rel = std::abs(plus - minus) / scale;
                worst_even = std::max(worst_even, rel);
                if (!(rel <= kEvenTol)) ok = false;
            }
        }
    }
    note << fmt("pairing evenness max %.3g; ", worst_even);

    const lcrit::LContext ctx1(lcrit::enumerate_characters(1).front());
    const lcrit::ReconstructionReport rep100 =
        lcrit::reconstruction_report(ctx1, 100.0, -5.0, 5.0, 101);
    const lcrit::ReconstructionReport rep50 =
        lcrit::reconstruction_report(ctx1, 50.0, -5.0, 5.0, 101);

    if (!rep100.zero_sets_shared || !rep100.ratio_sign_constant) ok = false;
    if (!rep50.zero_sets_shared || !rep50.ratio_sign_constant) ok = false;
    if (!(rep100.max_evenness_residual <= kEvenTol)) ok = false;

    int envelope_violations = 0;
    for (const lcrit::ReconstructionRow& row : rep100.rows) {
        const double bound =
            lcrit::product_tail_envelope(std::abs(row.v), 100.0, 1, 1);
        if (!(std::abs(row.log_ratio) <= bound)) {
            ok = false;
            ++envelope_violations;
        }
    }
    if (!(rep100.max_abs_log_ratio <= kSlack * rep50.max_abs_log_ratio)) {
        ok = false;
    }
    note << fmt("log-ratio evenness %.3g (tol %.0e); envelope violations "
                "%d/101; max |log-ratio| %.4f at height 100 vs %.4f at 50",
                rep100.max_evenness_residual, kEvenTol, envelope_violations,
                rep100.max_abs_log_ratio, rep50.max_abs_log_ratio);
    detail = note.str();
    return ok;
}

struct Criterion {
    int id;
    const char* name;
    double budget_seconds;  // 0 = no budget
    std::function<bool(std::string&)> run;
};

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "completed-function symmetry", 60.0,
         criterion_functional_equation},
        {2, "critical-line ratio magnitude", 0.0,
         criterion_critical_line_ratio},
        {3, "off-line ratio regions + Gamma inequality", 300.0,
         criterion_ratio_regions},
        {4, "induced factorization identity", 0.0, criterion_factorization},
        {5, "Hurwitz decomposition vs direct series", 0.0,
         criterion_hurwitz_vs_series},
        {6, "zero scan vs argument principle", 600.0, criterion_zero_scan},
        {7, "disc winding vs dense-boundary oracle", 0.0,
         criterion_disc_oracle},
        {8, "smoothed-sum uniform convergence", 0.0,
         criterion_smoothed_convergence},
        {9, "reconstruction from computed zeros", 0.0,
         criterion_reconstruction},
    };

    int failures = 0;
    for (const Criterion& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok;
        try {
            ok = c.run(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("unexpected exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        if (c.budget_seconds > 0.0 && seconds > c.budget_seconds) {
            ok = false;
            detail += fmt(" [runtime %.1fs exceeded budget %.0fs]", seconds,
                          c.budget_seconds);
        }
        if (!ok) ++failures;
        std::printf("%s  criterion %d (%s): %s [%.1fs]\n",
                    ok ? "PASS" : "FAIL", c.id, c.name, detail.c_str(),
                    seconds);
        std::fflush(stdout);
    }
    std::printf("%d/9 criteria passed\n",
                static_cast<int>(criteria.size()) - failures);
    return failures == 0 ? 0 : 1;
}
