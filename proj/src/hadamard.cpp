#include "lcrit/hadamard.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>

#include "lcrit/errors.hpp"

namespace lcrit {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

bool is_even_form(ProductKind kind) {
    return kind == ProductKind::classical_even ||
           kind == ProductKind::paired_even_general;
}

Cplx base_point(ProductKind kind) {
    return kind == ProductKind::classical_centered ? Cplx{0.5, 0.0}
                                                   : Cplx{0.0, 0.0};
}

// One paired factor of the product at argument z for the zero ordinate t.
Cplx product_factor(ProductKind kind, const Cplx& z, double t) {
    switch (kind) {
        case ProductKind::classical_rho:
            // (1 - s/rho)(1 - s/(1-rho)) with rho = 1/2 + it.
            return 1.0 + z * (z - 1.0) / (0.25 + t * t);
        case ProductKind::classical_centered: {
            const Cplx w = z - 0.5;
            return 1.0 + w * w / (t * t);
        }
        case ProductKind::classical_even:
        case ProductKind::paired_even_general:
            return 1.0 - z * z / (t * t);
    }
    throw domain_error("product_factor: unknown product kind");
}

}  // namespace

std::vector<Cplx> ProductForm::zeros_used() const {
    std::vector<Cplx> zs;
    zs.reserve(ordinates.size());
    for (const double t : ordinates) {
        zs.push_back(is_even_form(kind) ? Cplx{t, 0.0} : Cplx{0.5, t});
    }
    return zs;
}

ProductForm build_product(ProductKind kind,
                          const std::vector<double>& ordinates,
                          const std::function<Cplx(const Cplx&)>& target,
                          double truncation_height) {
    if (!target) {
        throw domain_error("build_product: a target handle is required");
    }
    if (!std::isfinite(truncation_height) || truncation_height < 0.0) {
        throw domain_error(
            "build_product: truncation height must be finite and >= 0");
    }
    if (ordinates.empty() && truncation_height != 0.0) {
        throw domain_error(
            "build_product: empty zero list with nonzero truncation height " +
            format_double(truncation_height));
    }
    double prev = 0.0;
    for (const double t : ordinates) {
        if (!std::isfinite(t) || t <= prev) {
            throw domain_error(
                "build_product: ordinates must be positive and strictly "
                "increasing; offending value " +
                format_double(t));
        }
        if (t > truncation_height * (1.0 + 1e-12)) {
            throw domain_error("build_product: ordinate " + format_double(t) +
                               " exceeds the truncation height " +
                               format_double(truncation_height));
        }
        prev = t;
    }

    ProductForm form;
    form.kind = kind;
    form.ordinates = ordinates;
    form.truncation_height = truncation_height;
    form.constant = target(base_point(kind));
    if (!std::isfinite(form.constant.real()) ||
        !std::isfinite(form.constant.imag()) ||
        std::abs(form.constant) == 0.0) {
        throw domain_error(
            "build_product: target value " + format_complex(form.constant) +
            " at the base point cannot anchor the product constant");
    }
    return form;
}

Cplx evaluate_product(const ProductForm& form, const Cplx& z) {
    Cplx log_sum{0.0, 0.0};
    for (const double t : form.ordinates) {
        const Cplx factor = product_factor(form.kind, z, t);
        if (factor.real() == 0.0 && factor.imag() == 0.0) {
            return Cplx{0.0, 0.0};  // z coincides with a used zero
        }
        log_sum += std::log(factor);
    }
    return form.constant * std::exp(log_sum);
}

double product_tail_envelope(double v, double height, std::int64_t conductor,
                             int pooled_count) {
    if (conductor < 1) {
        throw domain_error("product_tail_envelope: conductor must be >= 1");
    }
    if (pooled_count != 1 && pooled_count != 2) {
        throw domain_error(
            "product_tail_envelope: pooled_count must be 1 or 2");
    }
    if (!std::isfinite(height) || height <= 0.0 ||
        static_cast<double>(conductor) * height <= kTwoPi) {
        throw domain_error(
            "product_tail_envelope: height must reach past the first "
            "zero-counting scale (conductor * height > 2pi)");
    }
    if (!std::isfinite(v) || std::abs(v) >= height) {
        throw domain_error("product_tail_envelope: |v| must be below the "
                           "truncation height");
    }
    const double av = std::abs(v);
    const double suppression = 1.0 - (av / height) * (av / height);
    const double density_integral =
        (std::log(static_cast<double>(conductor) * height / kTwoPi) + 1.0) /
        height;
    return 1.2 * (av * av / suppression) *
           (static_cast<double>(pooled_count) / kTwoPi) * density_integral;
}

ExponentialPairingCheck paired_exponential_check(
    const std::vector<double>& signed_zeros, const Cplx& v) {
    if (signed_zeros.empty()) {
        throw domain_error("paired_exponential_check: empty zero list");
    }
    Cplx log_plain{0.0, 0.0};
    Cplx exponent_sum{0.0, 0.0};
    bool hit_zero = false;
    for (const double phi : signed_zeros) {
        if (phi == 0.0 || !std::isfinite(phi)) {
            throw domain_error(
                "paired_exponential_check: zeros must be finite and nonzero");
        }
        const Cplx factor = 1.0 - v / phi;
        if (factor.real() == 0.0 && factor.imag() == 0.0) {
            hit_zero = true;
        } else {
            log_plain += std::log(factor);
        }
        exponent_sum += v / phi;
    }
    ExponentialPairingCheck check;
    check.without_exponentials =
        hit_zero ? Cplx{0.0, 0.0} : std::exp(log_plain);
    check.with_exponentials =
        hit_zero ? Cplx{0.0, 0.0} : std::exp(log_plain + exponent_sum);
    const double scale =
        std::max({std::abs(check.with_exponentials),
                  std::abs(check.without_exponentials), 1e-300});
    check.relative_difference =
        std::abs(check.with_exponentials - check.without_exponentials) / scale;
    return check;
}

ReconstructionReport reconstruction_report(const LContext& ctx, double height,
                                           double v_lo, double v_hi,
                                           int n_points) {
    const ScanResult scan = scan_zeros(ctx, height);
    return reconstruction_report_from_scan(ctx, scan, height, v_lo, v_hi,
                                           n_points);
}

ReconstructionReport reconstruction_report_from_scan(const LContext& ctx,
                                                     const ScanResult& scan,
                                                     double height,
                                                     double v_lo, double v_hi,
                                                     int n_points) {
    verify_scan_completeness(ctx, scan, height);
    if (!std::isfinite(v_lo) || !std::isfinite(v_hi) || v_lo >= v_hi) {
        throw domain_error("reconstruction_report: need v_lo < v_hi, finite");
    }
    if (n_points < 2) {
        throw domain_error("reconstruction_report: need at least 2 points");
    }

    std::vector<double> ordinates;
    ordinates.reserve(scan.records.size());
    for (const ZeroRecord& rec : scan.records) {
        ordinates.push_back(rec.t);
    }

    // The target is the completed form whose critical-line restriction the
    // scanner signed: Lambda itself for a self-conjugate character, the
    // paired two-character product otherwise.
    std::function<Cplx(const Cplx&)> target;
    if (ctx.self_conjugate()) {
        target = [&ctx](const Cplx& v) {
            return lambda_value(ctx, Cplx{0.5, 0.0} + Cplx{0.0, 1.0} * v);
        };
    } else {
        target = [&ctx](const Cplx& v) {
            return g_value(ctx, Cplx{0.5, 0.0} + Cplx{0.0, 1.0} * v);
        };
    }

    ReconstructionReport report;
    report.form = build_product(ProductKind::paired_even_general, ordinates,
                                target, height);

    report.rows.resize(static_cast<std::size_t>(n_points));
    for (int i = 0; i < n_points; ++i) {
        ReconstructionRow& row = report.rows[static_cast<std::size_t>(i)];
        row.v = v_lo + (v_hi - v_lo) * i / (n_points - 1);
        row.direct = target(Cplx{row.v, 0.0});
        row.product = evaluate_product(report.form, Cplx{row.v, 0.0});
        const double rd = row.direct.real();
        const double rp = row.product.real();
        if (rd == 0.0 || rp == 0.0) {
            throw numeric_consistency_error(
                "reconstruction_report: sample at v = " + format_double(row.v) +
                " coincides with a zero; shift the grid");
        }
        row.log_ratio = std::log(std::abs(rd / rp));
    }

    report.zero_sets_shared = true;
    report.ratio_sign_constant = true;
    report.max_abs_log_ratio = 0.0;
    for (std::size_t i = 0; i < report.rows.size(); ++i) {
        const ReconstructionRow& row = report.rows[i];
        if ((row.direct.real() < 0.0) != (row.product.real() < 0.0)) {
            report.ratio_sign_constant = false;
        }
        report.max_abs_log_ratio =
            std::max(report.max_abs_log_ratio, std::abs(row.log_ratio));
        if (i + 1 < report.rows.size()) {
            const ReconstructionRow& next = report.rows[i + 1];
            const bool direct_crosses =
                (row.direct.real() < 0.0) != (next.direct.real() < 0.0);
            const bool product_crosses =
                (row.product.real() < 0.0) != (next.product.real() < 0.0);
            if (direct_crosses != product_crosses) {
                report.zero_sets_shared = false;
            }
        }
    }

    report.max_evenness_residual = 0.0;
    for (std::size_t i = 0, j = report.rows.size() - 1; i < j; ++i, --j) {
        const double vi = report.rows[i].v;
        const double vj = report.rows[j].v;
        if (std::abs(vi + vj) <= 1e-12 * std::max(std::abs(vi), 1.0)) {
            report.max_evenness_residual = std::max(
                report.max_evenness_residual,
                std::abs(report.rows[i].log_ratio - report.rows[j].log_ratio));
        }
    }
    return report;
}

std::string reconstruction_csv(const ReconstructionReport& report) {
    std::string out = "v,direct_re,direct_im,product_re,product_im,log_ratio\n";
    for (const ReconstructionRow& row : report.rows) {
        out += format_double(row.v);
        out += ',';
        out += format_double(row.direct.real());
        out += ',';
        out += format_double(row.direct.imag());
        out += ',';
        out += format_double(row.product.real());
        out += ',';
        out += format_double(row.product.imag());
        out += ',';
        out += format_double(row.log_ratio);
        out += '\n';
    }
    return out;
}

}  // namespace lcrit
