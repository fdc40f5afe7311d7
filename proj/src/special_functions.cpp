#include "lcrit/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "lcrit/errors.hpp"
#include "kahan.hpp"

namespace lcrit {

namespace {

// B_{2j} for j = 0..30, computed from the exact rationals (recurrence
// sum_{k<=n} C(n+1,k) B_k = 0) and rounded once to double.
constexpr std::array<double, 31> kBernoulliEven = {
    1.00000000000000000000e+00,   // B_0 = 1
    1.66666666666666657415e-01,   // B_2 = 1/6
    -3.33333333333333328707e-02,  // B_4 = -1/30
    2.38095238095238082021e-02,   // B_6 = 1/42
    -3.33333333333333328707e-02,  // B_8 = -1/30
    7.57575757575757596785e-02,   // B_10 = 5/66
    -2.53113553113553102492e-01,  // B_12 = -691/2730
    1.16666666666666674068e+00,   // B_14 = 7/6
    -7.09215686274509771181e+00,  // B_16 = -3617/510
    5.49711779448621555844e+01,   // B_18 = 43867/798
    -5.29124242424242424931e+02,  // B_20 = -174611/330
    6.19212318840579700918e+03,   // B_22 = 854513/138
    -8.65802531135531171458e+04,  // B_24 = -236364091/2730
    1.42551716666666674428e+06,   // B_26 = 8553103/6
    -2.72982310678160935640e+07,  // B_28 = -23749461029/870
    6.01580873900642395020e+08,   // B_30 = 8615841276005/14322
    -1.51163157670921573639e+10,  // B_32 = -7709321041217/510
    4.29614643061166687012e+11,   // B_34 = 2577687858367/6
    -1.37116552050883320312e+13,  // B_36 = -26315271553053477373/1919190
    4.88332318973593187500e+14,   // B_38 = 2929993913841559/6
    -1.92965793419400680000e+16,  // B_40 = -261082718496449122051/13530
    8.41693047573682560000e+17,   // B_42 = 1520097643918070802691/1806
    -4.03380718540594544640e+19,  // B_44 = -27833269579301024235023/690
    2.11507486380819926221e+21,   // B_46 = 596451111593912163277961/282
    -1.20866265222965262025e+23,  // B_48
    7.50086674607696416604e+24,   // B_50
    -5.03877810148106884987e+26,  // B_52
    3.65287764848181222756e+28,   // B_54
    -2.84987693024508823612e+30,  // B_56
    2.38654274996836274480e+32,   // B_58
    -2.13999492572253348595e+34,  // B_60
};

// B_{2j}/(2j)! for j = 1..30 (Euler-Maclaurin correction coefficients).
const std::array<double, 31>& em_coefficients() {
    static const std::array<double, 31> coefs = [] {
        std::array<double, 31> c{};
        double fact = 1.0;  // (2j)!
        for (int j = 1; j <= 30; ++j) {
            fact *= (2.0 * j - 1.0) * (2.0 * j);
            c[static_cast<std::size_t>(j)] =
                kBernoulliEven[static_cast<std::size_t>(j)] / fact;
        }
        return c;
    }();
    return coefs;
}

// B_{2j}/(2j(2j-1)) for j = 1..15 (Stirling series coefficients).
const std::array<double, 16>& stirling_coefficients() {
    static const std::array<double, 16> coefs = [] {
        std::array<double, 16> c{};
        for (int j = 1; j <= 15; ++j)
            c[static_cast<std::size_t>(j)] =
                kBernoulliEven[static_cast<std::size_t>(j)] /
                (2.0 * j * (2.0 * j - 1.0));
        return c;
    }();
    return coefs;
}

// (e^u - 1)/u, stable for small |u|.
Cplx expm1_over(const Cplx& u) {
    if (std::abs(u) >= 0.5) return (std::exp(u) - 1.0) / u;
    Cplx sum{1.0, 0.0};
    Cplx term{1.0, 0.0};
    for (int k = 2; k <= 20; ++k) {
        term *= u / static_cast<double>(k);
        sum += term;
        if (std::abs(term) < 1e-18) break;
    }
    return sum;
}

}  // namespace

double bernoulli_even(int j) {
    if (j < 0 || j > 30)
        throw domain_error("bernoulli_even: index out of range [0,30]");
    return kBernoulliEven[static_cast<std::size_t>(j)];
}

Cplx power_neg(double x, const Cplx& s) {
    double l = std::log(x);
    return std::polar(std::exp(-s.real() * l), -s.imag() * l);
}

HurwitzParams hurwitz_auto_params(const Cplx& s) {
    HurwitzParams p;
    double t = std::abs(s.imag());
    p.main_terms = std::max<std::int64_t>(
        12, static_cast<std::int64_t>(std::ceil(1.3 * t)));
    p.correction_terms = 12;
    p.target_abs_error = 1e-10;
    return p;
}

Cplx hurwitz_zeta_entire(const Cplx& s, double w, const HurwitzParams& params) {
    if (!(w > 0.0) || w > 1.0)
        throw domain_error("hurwitz_zeta: w must lie in (0,1]");
    if (params.main_terms < 1)
        throw domain_error("hurwitz_zeta: need at least one main term");
    if (params.correction_terms < 1 || params.correction_terms > 30)
        throw domain_error("hurwitz_zeta: correction terms out of range [1,30]");
    if (!(params.target_abs_error > 0.0))
        throw domain_error("hurwitz_zeta: target error must be positive");
    if (s.real() < -2.0 || s.real() > 4.0 || std::abs(s.imag()) > 1000.0)
        throw domain_error(
            "hurwitz_zeta: s outside validated domain "
            "(-2 <= Re s <= 4, |Im s| <= 1000)");

    const std::int64_t N = params.main_terms;
    const int K = params.correction_terms;

    KahanSum main;
    for (std::int64_t n = 0; n < N; ++n)
        main.add(power_neg(static_cast<double>(n) + w, s));

    const double z = static_cast<double>(N) + w;
    const double logz = std::log(z);

    // [(N+w)^{1-s} - 1]/(s-1) = -log z * (e^u - 1)/u with u = (1-s) log z;
    // finite at s = 1, where it equals -log z.
    const Cplx u = (1.0 - s) * logz;
    const Cplx tail_pole = -logz * expm1_over(u);

    const Cplx zs = power_neg(z, s);  // (N+w)^{-s}
    Cplx result = main.s + tail_pole + 0.5 * zs;

    // Corrections: coef_j * (s)(s+1)...(s+2j-2) * (N+w)^{-s-2j+1}.
    const auto& coef = em_coefficients();
    Cplx rising = s;           // running product of (s+i)
    Cplx pw = zs / z;          // (N+w)^{-s-2j+1}, starting at j = 1
    for (int j = 1; j <= K; ++j) {
        result += coef[static_cast<std::size_t>(j)] * rising * pw;
        if (j < K) {
            rising *= (s + Cplx(2.0 * j - 1.0, 0.0)) * (s + Cplx(2.0 * j, 0.0));
            pw /= z * z;
        }
    }
    return result;
}

Cplx hurwitz_zeta(const Cplx& s, double w, const HurwitzParams& params) {
    if (s == Cplx{1.0, 0.0})
        throw pole_error("hurwitz_zeta: pole at s = 1");
    return hurwitz_zeta_entire(s, w, params) + 1.0 / (s - 1.0);
}

Cplx hurwitz_zeta(const Cplx& s, double w) {
    return hurwitz_zeta(s, w, hurwitz_auto_params(s));
}

Cplx log_gamma(const Cplx& z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 &&
        z.real() == std::floor(z.real()))
        throw pole_error("log_gamma: pole at non-positive integer");

    constexpr double kRadius = 12.0;
    int M = 0;
    while (std::abs(z + Cplx(static_cast<double>(M), 0.0)) < kRadius ||
           (z.real() + M) < 1.0)
        ++M;

    const Cplx zM = z + Cplx(static_cast<double>(M), 0.0);
    const Cplx logzM = std::log(zM);
    Cplx lg = (zM - 0.5) * logzM - zM +
              0.5 * std::log(2.0 * std::numbers::pi);

    const auto& coef = stirling_coefficients();
    const Cplx inv = 1.0 / zM;
    const Cplx inv2 = inv * inv;
    Cplx pw = inv;
    for (int j = 1; j <= 15; ++j) {
        lg += coef[static_cast<std::size_t>(j)] * pw;
        pw *= inv2;
    }

    for (int m = 0; m < M; ++m)
        lg -= std::log(z + Cplx(static_cast<double>(m), 0.0));
    return lg;
}

Cplx gauss_sum(const Character& chi) {
    if (!is_primitive(chi))
        throw domain_error("gauss_sum: character must be primitive");
    const std::int64_t q = chi.modulus();
    const std::int64_t M = chi.group().exponent();
    KahanSum sum;
    for (std::int64_t a = 1; a <= q; ++a) {
        auto rot = chi.rotation_at(a);
        if (!rot) continue;
        // chi(a) e^{2 pi i a / q}: combine the exact rotations first.
        Rotation combined{(rot->num * q + a * M) % (M * q), M * q};
        sum.add(combined.value());
    }
    return sum.s;
}

}  // namespace lcrit
