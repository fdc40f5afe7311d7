// lcrit: command-line front end for the Dirichlet character / L-function
// library.
//
// Subcommands
//   chars        enumerate the characters of a modulus (labels, conductors,
//                parities, primitivity, reality)
//   eval         evaluate L, the completed function, and the
//                functional-equation residual at one point
//   zeros        scan the critical line and emit a zero atlas, cross-checked
//                against an argument-principle rectangle count
//   criteria     count zeros of a truncated series inside a disc for a range
//                of truncation lengths
//   ratio-sweep  sweep |L(conj chi, s) / L(chi, 1-s)| over the two
//                off-center regions and report the minimum of ||R| - 1|
//   hadamard     rebuild the completed function from its computed zeros and
//                tabulate the direct/reconstructed log ratio
//   gamma-check  verify the Gamma-quotient inequality on a left-region grid
//
// Every run writes its artifacts into --out (default ".") plus a
// manifest.json recording the subcommand, every parameter in force
// (explicit or defaulted), the numeric defaults behind the run, the
// artifact list, and the wall time.  Re-running with the echoed parameters
// reproduces the CSV/JSON artifacts byte for byte; the wall time is the
// only field that varies.
//
// Exit codes: 0 success (all internal consistency assertions passed),
// 2 usage or domain errors (bad flags, malformed numbers, out-of-range
// parameters), 3 numeric-consistency failures (a cross-check that should
// hold mathematically did not).
//
// Complex numbers are written "a+bi" / "a-bi" (pure real "a", pure
// imaginary "bi"); no whitespace.  CSV output uses '.' as the decimal
// separator and 17 significant digits throughout.  The LCRIT_THREADS
// environment variable caps worker threads.

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "lcrit/characters.hpp"
#include "lcrit/criteria.hpp"
#include "lcrit/errors.hpp"
#include "lcrit/hadamard.hpp"
#include "lcrit/lfunctions.hpp"
#include "lcrit/numio.hpp"
#include "lcrit/parallel.hpp"
#include "lcrit/special_functions.hpp"
#include "lcrit/winding.hpp"
#include "lcrit/zeros.hpp"

namespace {

namespace fs = std::filesystem;
using lcrit::Cplx;
using nlohmann::json;

// ---------------------------------------------------------------------------
// Small parsing helpers (all failures -> domain_error -> exit 2)
// ---------------------------------------------------------------------------

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = text.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(text.substr(start));
            return parts;
        }
        parts.push_back(text.substr(start, pos - start));
        start = pos + 1;
    }
}

double parse_real_token(const std::string& token, const std::string& what) {
    double value = 0.0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw lcrit::domain_error("cannot parse " + what + " '" + token +
                                  "' as a real number");
    }
    return value;
}

int parse_int_token(const std::string& token, const std::string& what) {
    int value = 0;
    const char* begin = token.data();
    const char* end = begin + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc{} || ptr != end) {
        throw lcrit::domain_error("cannot parse " + what + " '" + token +
                                  "' as an integer");
    }
    return value;
}

Cplx parse_point(const std::string& text) {
    Cplx s;
    if (!lcrit::parse_complex(text, s)) {
        throw lcrit::domain_error(
            "cannot parse '" + text +
            "' as a complex number (expected a+bi / a-bi, no spaces)");
    }
    return s;
}

lcrit::Character resolve_character(std::int64_t q, const std::string& label) {
    lcrit::Character chi = lcrit::Character::parse_label(label);
    if (chi.modulus() != q) {
        throw lcrit::domain_error("character label '" + label +
                                  "' has modulus " +
                                  std::to_string(chi.modulus()) +
                                  " but --q is " + std::to_string(q));
    }
    return chi;
}

lcrit::Character principal_character(std::int64_t q) {
    for (const lcrit::Character& chi : lcrit::enumerate_characters(q)) {
        if (chi.is_principal()) return chi;
    }
    throw lcrit::domain_error("no principal character found for modulus " +
                              std::to_string(q));
}

// ---------------------------------------------------------------------------
// Artifact and manifest plumbing
// ---------------------------------------------------------------------------

struct ArtifactWriter {
    fs::path out_dir;
    std::vector<std::string> names;

    void write(const std::string& name, const std::string& content) {
        const fs::path path = out_dir / name;
        std::ofstream file(path, std::ios::binary | std::ios::trunc);
        if (!file) {
            throw std::runtime_error("cannot open " + path.string() +
                                     " for writing");
        }
        file << content;
        file.flush();
        if (!file) {
            throw std::runtime_error("failed while writing " + path.string());
        }
        names.push_back(name);
    }
};

json hurwitz_defaults() {
    const lcrit::HurwitzParams params;
    return json{
        {"hurwitz_main_terms", "max(12, ceil(1.3*|Im s|))"},
        {"hurwitz_correction_terms", params.correction_terms},
        {"hurwitz_target_abs_error", params.target_abs_error},
        {"threads", lcrit::thread_budget()},
    };
}

json winding_defaults() {
    const lcrit::WindingOptions opts;
    return json{
        {"winding_initial_samples", opts.initial_samples},
        {"winding_max_doublings", opts.max_doublings},
        {"winding_max_phase_step", opts.max_phase_step},
        {"winding_integer_tolerance", opts.integer_tolerance},
        {"winding_boundary_dip_ratio", opts.boundary_dip_ratio},
    };
}

json merged(json a, const json& b) {
    a.update(b);
    return a;
}

void write_manifest(const ArtifactWriter& writer, const std::string& subcommand,
                    const json& parameters, const json& numeric_defaults,
                    double wall_seconds) {
    json manifest;
    manifest["subcommand"] = subcommand;
    manifest["parameters"] = parameters;
    manifest["numeric_defaults"] = numeric_defaults;
    manifest["artifacts"] = writer.names;
    manifest["wall_time_seconds"] = wall_seconds;

    const fs::path path = writer.out_dir / "manifest.json";
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw std::runtime_error("cannot open " + path.string() +
                                 " for writing");
    }
    file << manifest.dump(2) << "\n";
}

// ---------------------------------------------------------------------------
// Subcommand bodies.  Each returns the numeric-defaults block for the
// manifest; artifacts are written through `writer`.
// ---------------------------------------------------------------------------

json run_chars(std::int64_t modulus, ArtifactWriter& writer) {
    const std::vector<lcrit::Character> chars =
        lcrit::enumerate_characters(modulus);

    std::string csv = "label,conductor,parity,primitive,real\n";
    for (const lcrit::Character& chi : chars) {
        csv += chi.label();
        csv += ',';
        csv += std::to_string(lcrit::conductor(chi).conductor);
        csv += ',';
        csv += chi.parity() == 1 ? "odd" : "even";
        csv += ',';
        csv += lcrit::is_primitive(chi) ? "true" : "false";
        csv += ',';
        csv += chi.is_real() ? "true" : "false";
        csv += '\n';
    }
    writer.write("characters.csv", csv);

    std::cout << "modulus " << modulus << ": " << chars.size()
              << " characters\n";
    for (const lcrit::Character& chi : chars) {
        std::cout << "  " << chi.label() << "  conductor "
                  << lcrit::conductor(chi).conductor << "  parity "
                  << (chi.parity() == 1 ? "odd" : "even")
                  << (lcrit::is_primitive(chi) ? "  primitive" : "")
                  << (chi.is_real() ? "  real" : "") << "\n";
    }
    return json::object();
}

json run_eval(const lcrit::Character& chi, const Cplx& s,
              ArtifactWriter& writer) {
    const lcrit::LContext ctx(chi);
    const Cplx l = lcrit::l_value(ctx, s);
    const Cplx lambda = lcrit::lambda_value(ctx, s);
    const lcrit::FunctionalEqResidual fe =
        lcrit::functional_equation_residual(ctx, s);

    std::string csv = "s_re,s_im,l_re,l_im,lambda_re,lambda_im,fe_residual\n";
    csv += lcrit::format_double(s.real()) + ",";
    csv += lcrit::format_double(s.imag()) + ",";
    csv += lcrit::format_double(l.real()) + ",";
    csv += lcrit::format_double(l.imag()) + ",";
    csv += lcrit::format_double(lambda.real()) + ",";
    csv += lcrit::format_double(lambda.imag()) + ",";
    csv += lcrit::format_double(fe.relative_residual) + "\n";
    writer.write("eval.csv", csv);

    std::cout << "character " << chi.label() << " (conductor "
              << ctx.conductor() << ") at s = " << lcrit::format_complex(s)
              << "\n";
    std::cout << "L(chi, s)    = " << lcrit::format_complex(l) << "\n";
    std::cout << "completed(s) = " << lcrit::format_complex(lambda) << "\n";
    std::cout << "functional-equation residual = "
              << lcrit::format_double(fe.relative_residual) << "\n";
    return hurwitz_defaults();
}

json run_zeros(const lcrit::Character& chi, double height, double step,
               ArtifactWriter& writer) {
    const lcrit::LContext ctx(chi);
    const lcrit::ScanResult scan = lcrit::scan_zeros(ctx, height, step);
    const int count = lcrit::verify_scan_completeness(ctx, scan, height);
    writer.write("zero_atlas.csv", lcrit::zero_atlas_csv(scan.records));

    std::cout << "character " << chi.label() << ": " << count
              << " critical-line zeros in (0, " << lcrit::format_double(height)
              << "]\n";
    std::cout << "argument-principle rectangle count matches: " << count
              << "\n";
    return merged(hurwitz_defaults(), winding_defaults());
}

json run_criteria(const lcrit::Character& chi, const std::string& variant_name,
                  const std::string& disc_text, std::int64_t n_lo,
                  std::int64_t n_hi, ArtifactWriter& writer) {
    const std::vector<std::string> parts = split(disc_text, ',');
    if (parts.size() != 3) {
        throw lcrit::domain_error(
            "--disc expects 'center_re,center_im,radius', got '" + disc_text +
            "'");
    }
    lcrit::Disc disc;
    disc.center = Cplx(parse_real_token(parts[0], "disc center_re"),
                       parse_real_token(parts[1], "disc center_im"));
    disc.radius = parse_real_token(parts[2], "disc radius");

    const lcrit::CriterionVariant variant =
        variant_name == "sn" ? lcrit::CriterionVariant::partial_sum
                             : lcrit::CriterionVariant::smoothed_sum;
    const lcrit::DiscReport report =
        lcrit::criterion_report(chi, disc, n_lo, n_hi, variant);

    json entries = json::array();
    std::size_t indeterminate = 0;
    for (const lcrit::DiscCountEntry& entry : report.entries) {
        entries.push_back(json{
            {"n", entry.n},
            {"zero_count", entry.zero_count},
            {"indeterminate", entry.indeterminate},
            {"boundary_min_modulus", entry.boundary_min_modulus},
        });
        if (entry.indeterminate) ++indeterminate;
    }
    json doc{
        {"modulus", chi.modulus()},
        {"char_label", chi.label()},
        {"variant", variant_name},
        {"disc",
         {{"center_re", disc.center.real()},
          {"center_im", disc.center.imag()},
          {"radius", disc.radius}}},
        {"n_lo", report.n_lo},
        {"n_hi", report.n_hi},
        {"fraction_zero", report.fraction_zero},
        {"entries", entries},
    };
    writer.write("criteria_report.json", doc.dump(2) + "\n");

    std::cout << "variant " << variant_name << ", N in [" << n_lo << ", "
              << n_hi << "]: fraction with zero-free disc = "
              << lcrit::format_double(report.fraction_zero) << "\n";
    if (indeterminate > 0) {
        std::cout << indeterminate
                  << " truncation lengths were indeterminate (winding did not "
                     "settle)\n";
    }
    return merged(hurwitz_defaults(), winding_defaults());
}

json run_ratio_sweep(const lcrit::Character& chi, double resolution,
                     double margin, ArtifactWriter& writer) {
    const lcrit::RegionSweep sweep =
        lcrit::region_sweep(chi, resolution, margin);

    std::string csv = "sigma,t,region,ratio_magnitude,abs_dev_from_1\n";
    for (const lcrit::RegionPoint& p : sweep.points) {
        csv += lcrit::format_double(p.s.real()) + ",";
        csv += lcrit::format_double(p.s.imag()) + ",";
        csv += p.in_left_region ? "left" : "right";
        csv += ",";
        csv += lcrit::format_double(p.ratio_magnitude) + ",";
        csv += lcrit::format_double(std::abs(p.ratio_magnitude - 1.0)) + "\n";
    }
    writer.write("region_sweep.csv", csv);

    std::cout << "character " << chi.label() << ": " << sweep.left_count
              << " left-region points, " << sweep.right_count
              << " right-region points, " << sweep.skipped_near_zero.size()
              << " skipped near a denominator zero\n";
    std::cout << "min ||R|-1| = " << lcrit::format_double(sweep.min_abs_dev)
              << " at s = " << lcrit::format_complex(sweep.min_location)
              << "\n";
    return hurwitz_defaults();
}

json run_hadamard(const lcrit::Character& chi, double height,
                  const std::string& vrange_text, ArtifactWriter& writer) {
    const std::vector<std::string> parts = split(vrange_text, ':');
    if (parts.size() != 3) {
        throw lcrit::domain_error("--vrange expects 'lo:hi:points', got '" +
                                  vrange_text + "'");
    }
    const double v_lo = parse_real_token(parts[0], "vrange lo");
    const double v_hi = parse_real_token(parts[1], "vrange hi");
    const int n_points = parse_int_token(parts[2], "vrange point count");

    const lcrit::LContext ctx(chi);
    const lcrit::ReconstructionReport report =
        lcrit::reconstruction_report(ctx, height, v_lo, v_hi, n_points);
    writer.write("reconstruction.csv", lcrit::reconstruction_csv(report));

    std::cout << "character " << chi.label() << ": product over "
              << report.form.ordinates.size()
              << " zero ordinates up to height "
              << lcrit::format_double(height) << "\n";
    std::cout << "max |log ratio| = "
              << lcrit::format_double(report.max_abs_log_ratio)
              << ", evenness residual = "
              << lcrit::format_double(report.max_evenness_residual) << "\n";
    const double v_max = std::max(std::abs(v_lo), std::abs(v_hi));
    if (v_max < height) {
        const int pooled = ctx.self_conjugate() ? 1 : 2;
        std::cout << "tail envelope at |v| = " << lcrit::format_double(v_max)
                  << ": "
                  << lcrit::format_double(lcrit::product_tail_envelope(
                         v_max, height, ctx.conductor(), pooled))
                  << "\n";
    }

    if (!report.zero_sets_shared) {
        throw lcrit::numeric_consistency_error(
            "direct value and reconstruction do not change sign in the same "
            "sample intervals (see reconstruction.csv)");
    }
    if (!report.ratio_sign_constant) {
        throw lcrit::numeric_consistency_error(
            "direct/reconstruction ratio changes sign across the range (see "
            "reconstruction.csv)");
    }
    std::cout << "zero sets shared across the range: yes; ratio sign "
                 "constant: yes\n";
    return merged(hurwitz_defaults(), winding_defaults());
}

json run_gamma_check(double resolution, ArtifactWriter& writer) {
    if (!(resolution >= 1e-3) || !std::isfinite(resolution)) {
        throw lcrit::domain_error("--resolution must be >= 0.001");
    }

    std::string csv = "sigma,t,lhs,rhs,holds\n";
    std::size_t checked = 0;
    std::size_t failures = 0;
    double min_slack = std::numeric_limits<double>::infinity();
    const int t_span =
        static_cast<int>(std::floor(2.0 * 3.14159265358979323846 /
                                    resolution)) +
        1;
    for (double sigma = resolution; sigma < 0.5; sigma += resolution) {
        for (int m = -t_span; m <= t_span; ++m) {
            const Cplx s(sigma, m * resolution);
            if (!lcrit::in_left_ratio_region(s)) continue;
            const lcrit::GammaInequality check =
                lcrit::gamma_inequality_check(s);
            ++checked;
            if (!check.holds) ++failures;
            min_slack = std::min(min_slack, check.rhs - check.lhs);
            csv += lcrit::format_double(s.real()) + ",";
            csv += lcrit::format_double(s.imag()) + ",";
            csv += lcrit::format_double(check.lhs) + ",";
            csv += lcrit::format_double(check.rhs) + ",";
            csv += check.holds ? "true" : "false";
            csv += "\n";
        }
    }
    writer.write("gamma_check.csv", csv);

    if (checked == 0) {
        throw lcrit::domain_error(
            "resolution too coarse: no grid points fall in the left region");
    }
    if (failures > 0) {
        throw lcrit::numeric_consistency_error(
            "Gamma-quotient inequality failed at " + std::to_string(failures) +
            " of " + std::to_string(checked) +
            " left-region grid points (see gamma_check.csv)");
    }
    std::cout << "checked " << checked
              << " left-region grid points at resolution "
              << lcrit::format_double(resolution)
              << ": inequality holds everywhere (min rhs-lhs = "
              << lcrit::format_double(min_slack) << ")\n";
    return json::object();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Desk-scale laboratory for Dirichlet characters, their L-functions, "
        "critical-line zeros, and zero-product reconstructions"};
    app.require_subcommand(1);
    app.footer(
        "Complex numbers are written a+bi / a-bi (pure real: a, pure "
        "imaginary: bi); no whitespace.\nCSV artifacts use '.' decimals with "
        "17 significant digits.  Every run writes manifest.json into --out;\n"
        "re-running with the echoed parameters reproduces the artifacts byte "
        "for byte.  LCRIT_THREADS caps\nworker threads.  Exit codes: 0 "
        "success, 2 usage/domain error, 3 numeric-consistency failure.");

    // chars ----------------------------------------------------------------
    CLI::App* cmd_chars =
        app.add_subcommand("chars", "Enumerate the characters of a modulus");
    std::int64_t chars_modulus = 0;
    std::string chars_out = ".";
    cmd_chars->add_option("--modulus", chars_modulus, "Modulus q >= 1")
        ->required();
    cmd_chars->add_option("--out", chars_out, "Output directory");

    // eval -----------------------------------------------------------------
    CLI::App* cmd_eval = app.add_subcommand(
        "eval",
        "Evaluate L, the completed function, and the functional-equation "
        "residual at one point");
    std::int64_t eval_q = 0;
    std::string eval_char;
    std::string eval_s;
    std::string eval_out = ".";
    cmd_eval->add_option("--q", eval_q, "Modulus q >= 1")->required();
    cmd_eval->add_option("--char", eval_char, "Character label, e.g. 4.1")
        ->required();
    cmd_eval
        ->add_option("--s", eval_s,
                     "Evaluation point, written a+bi / a-bi (e.g. 0.5+3i)")
        ->required();
    cmd_eval->add_option("--out", eval_out, "Output directory");

    // zeros ----------------------------------------------------------------
    CLI::App* cmd_zeros = app.add_subcommand(
        "zeros",
        "Scan critical-line zeros up to a height and write the zero atlas");
    std::int64_t zeros_q = 0;
    std::string zeros_char;
    double zeros_height = 0.0;
    double zeros_step = 0.02;
    std::string zeros_out = ".";
    cmd_zeros->add_option("--q", zeros_q, "Modulus q >= 1")->required();
    cmd_zeros
        ->add_option("--char", zeros_char,
                     "Character label (must be primitive)")
        ->required();
    cmd_zeros->add_option("--height", zeros_height, "Scan height T > 0")
        ->required();
    cmd_zeros->add_option("--step", zeros_step,
                          "Coarse scan step (0 < step <= 0.1)");
    cmd_zeros->add_option("--out", zeros_out, "Output directory");

    // criteria -------------------------------------------------------------
    CLI::App* cmd_criteria = app.add_subcommand(
        "criteria",
        "Count zeros of a truncated series inside a disc for a range of "
        "truncation lengths");
    std::string criteria_variant;
    std::int64_t criteria_q = 0;
    std::string criteria_char;
    std::string criteria_disc;
    std::int64_t criteria_nmin = 0;
    std::int64_t criteria_nmax = 0;
    std::string criteria_out = ".";
    cmd_criteria
        ->add_option("--variant", criteria_variant,
                     "Truncation variant: sn (plain partial sum) or gn "
                     "(smoothed sum)")
        ->required()
        ->check(CLI::IsMember({"sn", "gn"}));
    cmd_criteria->add_option("--q", criteria_q, "Modulus q >= 1")->required();
    cmd_criteria->add_option("--char", criteria_char, "Character label")
        ->required();
    cmd_criteria
        ->add_option("--disc", criteria_disc,
                     "Disc 'center_re,center_im,radius' strictly inside one "
                     "half of the critical strip")
        ->required();
    cmd_criteria->add_option("--nmin", criteria_nmin, "Smallest N >= 1")
        ->required();
    cmd_criteria->add_option("--nmax", criteria_nmax, "Largest N >= nmin")
        ->required();
    cmd_criteria->add_option("--out", criteria_out, "Output directory");

    // ratio-sweep ----------------------------------------------------------
    CLI::App* cmd_ratio = app.add_subcommand(
        "ratio-sweep",
        "Sweep |L(conj chi, s)/L(chi, 1-s)| over both off-center regions");
    std::int64_t ratio_q = 0;
    std::string ratio_char;
    double ratio_resolution = 0.05;
    double ratio_margin = 0.05;
    std::string ratio_out = ".";
    cmd_ratio->add_option("--q", ratio_q, "Modulus q >= 1")->required();
    cmd_ratio->add_option("--char", ratio_char,
                          "Character label (default: principal character)");
    cmd_ratio->add_option("--resolution", ratio_resolution,
                          "Grid spacing (>= 0.001)");
    cmd_ratio->add_option("--margin", ratio_margin,
                          "Excluded band |sigma - 1/2| < margin (0 <= margin "
                          "< 0.5)");
    cmd_ratio->add_option("--out", ratio_out, "Output directory");

    // hadamard -------------------------------------------------------------
    CLI::App* cmd_hadamard = app.add_subcommand(
        "hadamard",
        "Rebuild the completed function from its computed zeros and compare "
        "against direct evaluation");
    std::int64_t hadamard_q = 0;
    std::string hadamard_char;
    double hadamard_height = 0.0;
    std::string hadamard_vrange = "-5:5:101";
    std::string hadamard_out = ".";
    cmd_hadamard->add_option("--q", hadamard_q, "Modulus q >= 1")->required();
    cmd_hadamard
        ->add_option("--char", hadamard_char,
                     "Character label (must be primitive)")
        ->required();
    cmd_hadamard
        ->add_option("--height", hadamard_height,
                     "Zero-scan truncation height T > 0")
        ->required();
    cmd_hadamard->add_option(
        "--vrange", hadamard_vrange,
        "Sample range 'lo:hi:points' along the critical line");
    cmd_hadamard->add_option("--out", hadamard_out, "Output directory");

    // gamma-check ----------------------------------------------------------
    CLI::App* cmd_gamma = app.add_subcommand(
        "gamma-check",
        "Verify the Gamma-quotient inequality on a left-region grid");
    double gamma_resolution = 0.05;
    std::string gamma_out = ".";
    cmd_gamma->add_option("--resolution", gamma_resolution,
                          "Grid spacing (>= 0.001)");
    cmd_gamma->add_option("--out", gamma_out, "Output directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const auto start = std::chrono::steady_clock::now();
        std::string subcommand;
        json parameters;
        json defaults;
        ArtifactWriter writer;

        if (*cmd_chars) {
            subcommand = "chars";
            writer.out_dir = fs::path(chars_out);
            fs::create_directories(writer.out_dir);
            parameters = {{"modulus", chars_modulus}, {"out", chars_out}};
            defaults = run_chars(chars_modulus, writer);
        } else if (*cmd_eval) {
            subcommand = "eval";
            writer.out_dir = fs::path(eval_out);
            fs::create_directories(writer.out_dir);
            parameters = {{"q", eval_q},
                          {"char", eval_char},
                          {"s", eval_s},
                          {"out", eval_out}};
            defaults = run_eval(resolve_character(eval_q, eval_char),
                                parse_point(eval_s), writer);
        } else if (*cmd_zeros) {
            subcommand = "zeros";
            writer.out_dir = fs::path(zeros_out);
            fs::create_directories(writer.out_dir);
            parameters = {{"q", zeros_q},
                          {"char", zeros_char},
                          {"height", zeros_height},
                          {"step", zeros_step},
                          {"out", zeros_out}};
            defaults = run_zeros(resolve_character(zeros_q, zeros_char),
                                 zeros_height, zeros_step, writer);
        } else if (*cmd_criteria) {
            subcommand = "criteria";
            writer.out_dir = fs::path(criteria_out);
            fs::create_directories(writer.out_dir);
            parameters = {{"variant", criteria_variant},
                          {"q", criteria_q},
                          {"char", criteria_char},
                          {"disc", criteria_disc},
                          {"nmin", criteria_nmin},
                          {"nmax", criteria_nmax},
                          {"out", criteria_out}};
            defaults = run_criteria(
                resolve_character(criteria_q, criteria_char), criteria_variant,
                criteria_disc, criteria_nmin, criteria_nmax, writer);
        } else if (*cmd_ratio) {
            subcommand = "ratio-sweep";
            writer.out_dir = fs::path(ratio_out);
            fs::create_directories(writer.out_dir);
            const lcrit::Character chi =
                ratio_char.empty() ? principal_character(ratio_q)
                                   : resolve_character(ratio_q, ratio_char);
            parameters = {{"q", ratio_q},
                          {"char", chi.label()},
                          {"resolution", ratio_resolution},
                          {"margin", ratio_margin},
                          {"out", ratio_out}};
            defaults =
                run_ratio_sweep(chi, ratio_resolution, ratio_margin, writer);
        } else if (*cmd_hadamard) {
            subcommand = "hadamard";
            writer.out_dir = fs::path(hadamard_out);
            fs::create_directories(writer.out_dir);
            parameters = {{"q", hadamard_q},
                          {"char", hadamard_char},
                          {"height", hadamard_height},
                          {"vrange", hadamard_vrange},
                          {"out", hadamard_out}};
            defaults =
                run_hadamard(resolve_character(hadamard_q, hadamard_char),
                             hadamard_height, hadamard_vrange, writer);
        } else if (*cmd_gamma) {
            subcommand = "gamma-check";
            writer.out_dir = fs::path(gamma_out);
            fs::create_directories(writer.out_dir);
            parameters = {{"resolution", gamma_resolution},
                          {"out", gamma_out}};
            defaults = run_gamma_check(gamma_resolution, writer);
        }

        const double wall =
            std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                          start)
                .count();
        write_manifest(writer, subcommand, parameters, defaults, wall);
        std::cout << "wrote " << (writer.out_dir / "manifest.json").string()
                  << "\n";
        return 0;
    } catch (const lcrit::numeric_consistency_error& e) {
        std::cerr << "numeric-consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const lcrit::domain_error& e) {
        std::cerr << "invalid request: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
