#pragma once

// Truncated product reconstructions over computed critical-line zeros.
//
// Four product shapes are supported, all built from the positive zero
// ordinates t_n delivered by the zeros module (at desk scale every
// validated zero lies on the critical line, so a zero is rho_n = 1/2+i t_n
// in the s-plane or phi_n = t_n after the rotation v = i(1/2-s)):
//
//   classical_rho       c1 * prod (1 - s/rho_n)(1 - s/(1-rho_n))
//                         = c1 * prod (1 + s(s-1)/(1/4+t_n^2))
//   classical_centered  c2 * prod (1 + (s-1/2)^2/t_n^2)
//   classical_even      c2 * prod (1 - v^2/t_n^2)
//   paired_even_general same factor shape, target chosen by the character:
//                       the completed value on the line for a
//                       self-conjugate character (its zeros already come in
//                       +-t pairs), the paired two-character product
//                       otherwise (only the pooled zero set is symmetric).
//
// Constants are pinned by matching the target at the product's base point
// (where every factor equals 1): s = 0 for classical_rho, s = 1/2 (v = 0)
// for the other three.  With that pinning the two classical forms do NOT
// agree pointwise at finite truncation: their per-zero factors differ by
// the s-independent ratio (1/4+t^2)/t^2, so the truncated quotient
// centered/rho is the constant (c2/c1) * prod (1 + 1/(4 t_n^2)) — about
// 0.4% from 1 with zeros to height 100 — converging to 1 only as the
// truncation height grows.  The tests therefore pin the quotient's
// constancy in s and its predicted value, which is the finite-truncation
// content of the pairing claim, rather than an unattainable pointwise
// agreement.
//
// Truncation bias is reported, never corrected: no tail-completion
// heuristics are applied.  The separate tail envelope below gives a rigorous
// a-priori bound on |log(direct/product)| from the zero-counting density,
// against which reports are checked.

#include <complex>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lcrit/lfunctions.hpp"
#include "lcrit/numio.hpp"
#include "lcrit/zeros.hpp"

namespace lcrit {

enum class ProductKind {
    classical_rho,
    classical_centered,
    classical_even,
    paired_even_general,
};

struct ProductForm {
    ProductKind kind = ProductKind::classical_even;
    Cplx constant{0.0, 0.0};        // target value at the base point
    std::vector<double> ordinates;  // positive t_n, strictly increasing
    double truncation_height = 0.0;

    // The zeros in the representation the kind works in: rho_n = 1/2+i t_n
    // for the classical s-plane forms, phi_n = t_n for the even forms.
    std::vector<Cplx> zeros_used() const;
};

// Builds a product from validated ordinates (0 < t_1 < ... <= height) and a
// target handle, evaluated once at the base point to fix the constant.
// The handle takes s for the classical s-plane forms and v for the even
// forms.  Errors: empty ordinate list with nonzero height, unsorted or
// out-of-range ordinates, or a target vanishing at the base point.
ProductForm build_product(ProductKind kind,
                          const std::vector<double>& ordinates,
                          const std::function<Cplx(const Cplx&)>& target,
                          double truncation_height);

// constant * prod factor(z, t_n), accumulated in log space; returns exact 0
// when z coincides with a used zero.  The argument is s for the classical
// s-plane forms and v for the even forms.
Cplx evaluate_product(const ProductForm& form, const Cplx& z);

// Rigorous bound on |log(direct/truncated product)| at real v, |v| < height,
// from the zero-counting density: the missing factors beyond T contribute at
// most  [v^2/(1-(v/T)^2)] * (pooled/2pi) * (log(qT/2pi)+1)/T,  inflated by
// 1.2 for density fluctuation.  pooled_count is 1 when the product's zero
// set comes from one completed function (self-conjugate characters) and 2
// when it pools a conjugate pair.
double product_tail_envelope(double v, double height, std::int64_t conductor,
                             int pooled_count);

// The mechanism behind dropping the exponential convergence factors: over a
// signed zero list, prod (1 - v/phi) e^{v/phi} versus prod (1 - v/phi).
// When the list is symmetric under phi -> -phi the exponents cancel in
// pairs and the two products agree to rounding; an asymmetric list leaves a
// genuine exponential mismatch.  Reported, not corrected.
struct ExponentialPairingCheck {
    Cplx with_exponentials{0.0, 0.0};
    Cplx without_exponentials{0.0, 0.0};
    double relative_difference = 0.0;
};
ExponentialPairingCheck paired_exponential_check(
    const std::vector<double>& signed_zeros, const Cplx& v);

struct ReconstructionRow {
    double v = 0.0;
    Cplx direct{0.0, 0.0};   // completed value / paired product at 1/2+iv
    Cplx product{0.0, 0.0};  // truncated reconstruction at v
    double log_ratio = 0.0;  // log |direct/product|; 0 exactly at v = 0
};

struct ReconstructionReport {
    ProductForm form;
    std::vector<ReconstructionRow> rows;
    // Sign changes of the direct value and of the reconstruction occur in
    // exactly the same sample intervals (all range zeros are consumed).
    bool zero_sets_shared = false;
    // direct/product never changes sign across the range.
    bool ratio_sign_constant = false;
    // max |log_ratio(v) - log_ratio(-v)| over symmetric sample pairs.
    double max_evenness_residual = 0.0;
    double max_abs_log_ratio = 0.0;
};

// Scans zeros to `height`, validates completeness by the argument principle
// (incomplete_atlas_error on failure), builds the paired_even_general
// product, and tabulates direct vs reconstructed values on an n_points grid
// over [v_lo, v_hi].
ReconstructionReport reconstruction_report(const LContext& ctx, double height,
                                           double v_lo, double v_hi,
                                           int n_points);

// Same, reusing an existing scan (still completeness-validated first).
ReconstructionReport reconstruction_report_from_scan(const LContext& ctx,
                                                     const ScanResult& scan,
                                                     double height,
                                                     double v_lo, double v_hi,
                                                     int n_points);

// CSV: v,direct_re,direct_im,product_re,product_im,log_ratio.
std::string reconstruction_csv(const ReconstructionReport& report);

}  // namespace lcrit
