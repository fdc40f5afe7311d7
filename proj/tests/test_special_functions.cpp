#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "lcrit/characters.hpp"
#include "lcrit/errors.hpp"
#include "lcrit/special_functions.hpp"

using lcrit::Cplx;
using lcrit::HurwitzParams;
using lcrit::hurwitz_zeta;
using lcrit::log_gamma;

namespace {

constexpr double kPi = std::numbers::pi;

// Independent slow oracle: direct summation of `terms` terms of
// (n+w)^{-s} plus the two-term tail z^{1-s}/(s-1) + z^{-s}/2 at z = terms+w.
// Shares no code with the library's Euler-Maclaurin path.
Cplx direct_sum_oracle(Cplx s, double w, std::int64_t terms) {
    long double re = 0.0L, im = 0.0L;
    for (std::int64_t n = 0; n < terms; ++n) {
        double l = std::log(static_cast<double>(n) + w);
        double mag = std::exp(-s.real() * l);
        re += mag * std::cos(-s.imag() * l);
        im += mag * std::sin(-s.imag() * l);
    }
    double z = static_cast<double>(terms) + w;
    Cplx tail = std::pow(Cplx(z, 0.0), 1.0 - s) / (s - 1.0) +
                0.5 * std::pow(Cplx(z, 0.0), -s);
    return Cplx(static_cast<double>(re), static_cast<double>(im)) + tail;
}

}  // namespace

// ============================================================
// Hurwitz zeta
// ============================================================

TEST_CASE("zeta(2,1) = pi^2/6 and zeta(2,1/2) = pi^2/2") {
    CHECK(std::abs(hurwitz_zeta({2.0, 0.0}, 1.0) - Cplx{kPi * kPi / 6.0, 0.0}) <
          1e-12);
    CHECK(std::abs(hurwitz_zeta({2.0, 0.0}, 0.5) - Cplx{kPi * kPi / 2.0, 0.0}) <
          1e-12);
}

TEST_CASE("value at s = 0.5+14.1i, w = 0.3 matches the 1e7-term oracle") {
    // Frozen from direct_sum_oracle(s, 0.3, 10^7); the truncation error of
    // that construction is below 5e-11 here.
    const Cplx frozen{-1.102617258381656, -0.55260918382874991};
    Cplx v = hurwitz_zeta({0.5, 14.1}, 0.3);
    CHECK(std::abs(v - frozen) < 1e-9);

    // Live cross-check against a shorter run of the same oracle.
    Cplx live = direct_sum_oracle({0.5, 14.1}, 0.3, 1'000'000);
    CHECK(std::abs(v - live) < 5e-9);
    CHECK(std::abs(frozen - live) < 5e-9);
}

TEST_CASE("halving identity zeta(s,1/2) + zeta(s,1) = 2^s zeta(s,1)") {
    std::mt19937 rng(20260822u);
    std::uniform_real_distribution<double> sigma(-1.5, 3.5);
    std::uniform_real_distribution<double> tpart(-40.0, 40.0);
    for (int i = 0; i < 100; ++i) {
        Cplx s{sigma(rng), tpart(rng)};
        if (std::abs(s - Cplx{1.0, 0.0}) < 0.05) continue;
        Cplx lhs = hurwitz_zeta(s, 0.5) + hurwitz_zeta(s, 1.0);
        Cplx rhs = std::pow(Cplx{2.0, 0.0}, s) * hurwitz_zeta(s, 1.0);
        double scale = std::max({std::abs(lhs), std::abs(rhs), 1.0});
        CHECK(std::abs(lhs - rhs) < 1e-9 * scale);
    }
}

TEST_CASE("exact values at non-positive integers: zeta(0,w), zeta(-1,w)") {
    for (double w : {0.1, 0.3, 0.5, 0.77, 1.0}) {
        // zeta(0,w) = 1/2 - w
        CHECK(std::abs(hurwitz_zeta({0.0, 0.0}, w) - Cplx{0.5 - w, 0.0}) <
              1e-12);
        // zeta(-1,w) = -(w^2 - w + 1/6)/2
        double expect = -(w * w - w + 1.0 / 6.0) / 2.0;
        CHECK(std::abs(hurwitz_zeta({-1.0, 0.0}, w) - Cplx{expect, 0.0}) <
              1e-12);
    }
}

TEST_CASE("result is stable under N and K changes") {
    Cplx s{0.3, 21.7};
    Cplx base = hurwitz_zeta(s, 0.4);
    for (std::int64_t n : {30, 40, 60}) {
        for (int k : {8, 12, 16}) {
            HurwitzParams p{n, k, 1e-10};
            CHECK(std::abs(hurwitz_zeta(s, 0.4, p) - base) < 1e-10);
        }
    }
}

TEST_CASE("entire part is finite at s = 1 (equals -digamma(w))") {
    // -digamma(1) = euler_gamma; -digamma(1/2) = euler_gamma + 2 log 2
    Cplx at1 = lcrit::hurwitz_zeta_entire({1.0, 0.0}, 1.0,
                                          lcrit::hurwitz_auto_params({1.0, 0.0}));
    CHECK(std::abs(at1 - Cplx{std::numbers::egamma, 0.0}) < 1e-12);
    Cplx athalf = lcrit::hurwitz_zeta_entire(
        {1.0, 0.0}, 0.5, lcrit::hurwitz_auto_params({1.0, 0.0}));
    CHECK(std::abs(athalf -
                   Cplx{std::numbers::egamma + 2.0 * std::log(2.0), 0.0}) <
          1e-12);
}

TEST_CASE("domain violations are rejected") {
    CHECK_THROWS_AS(hurwitz_zeta({2.0, 0.0}, 0.0), lcrit::domain_error);
    CHECK_THROWS_AS(hurwitz_zeta({2.0, 0.0}, 1.5), lcrit::domain_error);
    CHECK_THROWS_AS(hurwitz_zeta({2.0, 0.0}, -0.2), lcrit::domain_error);
    CHECK_THROWS_AS(hurwitz_zeta({1.0, 0.0}, 0.5), lcrit::pole_error);
    CHECK_THROWS_AS(hurwitz_zeta({2.0, 1500.0}, 0.5), lcrit::domain_error);
    CHECK_THROWS_AS(hurwitz_zeta({5.5, 0.0}, 0.5), lcrit::domain_error);
    CHECK_THROWS_AS(hurwitz_zeta({-2.5, 0.0}, 0.5), lcrit::domain_error);
    HurwitzParams bad_k{12, 31, 1e-10};
    CHECK_THROWS_AS(hurwitz_zeta({2.0, 0.0}, 0.5, bad_k), lcrit::domain_error);
    HurwitzParams bad_n{0, 12, 1e-10};
    CHECK_THROWS_AS(hurwitz_zeta({2.0, 0.0}, 0.5, bad_n), lcrit::domain_error);
}

// ============================================================
// log-Gamma
// ============================================================

TEST_CASE("log_gamma(1/2) = log sqrt(pi)") {
    Cplx v = log_gamma({0.5, 0.0});
    CHECK(std::abs(v - Cplx{0.5 * std::log(kPi), 0.0}) < 1e-13);
}

TEST_CASE("matches std::lgamma on the positive real axis") {
    for (double x = 0.25; x <= 30.0; x += 0.25) {
        Cplx v = log_gamma({x, 0.0});
        CHECK(std::abs(v.imag()) < 1e-13);
        CHECK(std::abs(v.real() - std::lgamma(x)) <
              1e-12 * std::max(1.0, std::abs(std::lgamma(x))));
    }
}

TEST_CASE("recurrence: exp(log_gamma(s+1) - log_gamma(s)) = s") {
    auto check_at = [](Cplx s) {
        Cplx r = std::exp(log_gamma(s + 1.0) - log_gamma(s));
        CHECK(std::abs(r - s) < 1e-12 * std::max(1.0, std::abs(s)));
    };
    check_at({2.5, 3.0});
    std::mt19937 rng(777u);
    std::uniform_real_distribution<double> re(-3.0, 8.0);
    std::uniform_real_distribution<double> im(-50.0, 50.0);
    for (int i = 0; i < 200; ++i) {
        Cplx s{re(rng), im(rng)};
        if (std::abs(s.imag()) < 0.05) continue;  // stay away from poles
        check_at(s);
    }
}

TEST_CASE("reflection: |Gamma(1/2+it)|^2 = pi/cosh(pi t)") {
    for (double t : {0.5, 1.0, 5.0, 12.5}) {
        double lhs = std::exp(2.0 * log_gamma({0.5, t}).real());
        double rhs = kPi / std::cosh(kPi * t);
        CHECK(std::abs(lhs - rhs) < 1e-12 * rhs);
    }
}

TEST_CASE("conjugation symmetry through exp") {
    std::mt19937 rng(999u);
    std::uniform_real_distribution<double> re(-2.0, 6.0);
    std::uniform_real_distribution<double> im(0.1, 80.0);
    for (int i = 0; i < 100; ++i) {
        Cplx s{re(rng), im(rng)};
        Cplx a = std::exp(log_gamma(std::conj(s)));
        Cplx b = std::conj(std::exp(log_gamma(s)));
        CHECK(std::abs(a - b) < 1e-12 * std::abs(b));
    }
}

TEST_CASE("log_gamma rejects poles") {
    CHECK_THROWS_AS(log_gamma({0.0, 0.0}), lcrit::pole_error);
    CHECK_THROWS_AS(log_gamma({-3.0, 0.0}), lcrit::pole_error);
    CHECK_NOTHROW(log_gamma({-2.5, 0.0}));
    CHECK_NOTHROW(log_gamma({-3.0, 0.001}));
}

// ============================================================
// Gauss sums
// ============================================================

TEST_CASE("tau for the nonprincipal character mod 4 is 2i") {
    auto chi = lcrit::Character::parse_label("4.1");
    CHECK(std::abs(lcrit::gauss_sum(chi) - Cplx{0.0, 2.0}) < 1e-14);
}

TEST_CASE("tau for the nonprincipal character mod 3 is i sqrt(3)") {
    auto chars = lcrit::enumerate_characters(3);
    CHECK(std::abs(lcrit::gauss_sum(chars[1]) - Cplx{0.0, std::sqrt(3.0)}) <
          1e-14);
}

TEST_CASE("|tau| = sqrt(q) for every primitive character, q <= 50") {
    for (std::int64_t q = 1; q <= 50; ++q) {
        for (const auto& chi : lcrit::enumerate_characters(q)) {
            if (!lcrit::is_primitive(chi)) continue;
            CHECK(std::abs(std::abs(lcrit::gauss_sum(chi)) -
                           std::sqrt(static_cast<double>(q))) < 1e-12);
        }
    }
}

TEST_CASE("tau(conj chi) = chi(-1) conj(tau(chi)), q <= 50") {
    for (std::int64_t q = 1; q <= 50; ++q) {
        for (const auto& chi : lcrit::enumerate_characters(q)) {
            if (!lcrit::is_primitive(chi)) continue;
            Cplx lhs = lcrit::gauss_sum(chi.conjugate());
            Cplx sign = chi.parity() == 0 ? Cplx{1.0, 0.0} : Cplx{-1.0, 0.0};
            Cplx rhs = sign * std::conj(lcrit::gauss_sum(chi));
            CHECK(std::abs(lhs - rhs) < 1e-12 * std::sqrt(static_cast<double>(q)));
        }
    }
}

TEST_CASE("gauss_sum rejects imprimitive characters") {
    auto chars6 = lcrit::enumerate_characters(6);
    CHECK_THROWS_AS(lcrit::gauss_sum(chars6[1]), lcrit::domain_error);
    CHECK_THROWS_AS(lcrit::gauss_sum(lcrit::enumerate_characters(4).front()),
                    lcrit::domain_error);
}

// ============================================================
// Bernoulli table
// ============================================================

TEST_CASE("bernoulli numbers: spot values and bounds") {
    CHECK(lcrit::bernoulli_even(0) == 1.0);
    CHECK(std::abs(lcrit::bernoulli_even(1) - 1.0 / 6.0) < 1e-17);
    CHECK(std::abs(lcrit::bernoulli_even(2) + 1.0 / 30.0) < 1e-17);
    CHECK(std::abs(lcrit::bernoulli_even(6) + 691.0 / 2730.0) < 1e-15);
    CHECK_THROWS_AS(lcrit::bernoulli_even(31), lcrit::domain_error);
    CHECK_THROWS_AS(lcrit::bernoulli_even(-1), lcrit::domain_error);
}
