#include "lcrit/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "lcrit/errors.hpp"

namespace lcrit {

namespace {

struct PrimePower {
    std::int64_t p;
    int a;
    std::int64_t pa;  // p^a
};

std::vector<PrimePower> factorize(std::int64_t n) {
    std::vector<PrimePower> out;
    for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p) continue;
        PrimePower pp{p, 0, 1};
        while (n % p == 0) {
            n /= p;
            ++pp.a;
            pp.pa *= p;
        }
        out.push_back(pp);
    }
    if (n > 1) out.push_back({n, 1, n});
    return out;
}

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t m) {
    return (a * b) % m;  // m <= 1e6 so the product fits in int64
}

std::int64_t pow_mod(std::int64_t b, std::int64_t e, std::int64_t m) {
    std::int64_t r = 1 % m;
    b %= m;
    while (e > 0) {
        if (e & 1) r = mul_mod(r, b, m);
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    return r;
}

// Smallest primitive root mod the odd prime p.
std::int64_t primitive_root_mod_p(std::int64_t p) {
    std::vector<std::int64_t> rs;
    for (const auto& pp : factorize(p - 1)) rs.push_back(pp.p);
    for (std::int64_t g = 2; g < p; ++g) {
        bool ok = true;
        for (std::int64_t r : rs)
            if (pow_mod(g, (p - 1) / r, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
    throw domain_error("no primitive root found (not an odd prime?)");
}

// Primitive root mod p^a for odd p: a primitive root g mod p works for all
// powers unless g^(p-1) = 1 (mod p^2), in which case g+p does.
std::int64_t primitive_root_mod_pa(std::int64_t p, std::int64_t pa) {
    std::int64_t g = primitive_root_mod_p(p);
    if (pa == p) return g;
    if (pow_mod(g, p - 1, p * p) == 1) g += p;
    return g;
}

// x = r (mod m), x = 1 (mod q/m), 0 <= x < q.  Requires gcd(m, q/m) = 1.
std::int64_t crt_lift(std::int64_t r, std::int64_t m, std::int64_t q) {
    std::int64_t n = q / m;
    if (n == 1) return r % m;
    // x = 1 + n*t with t = (r-1) * n^{-1} (mod m)
    std::int64_t ninv = 1, e = 0, base = n % m;
    // modular inverse via Fermat/Euler replacement: extended gcd
    {
        std::int64_t a = base, b = m, u0 = 1, u1 = 0;
        while (b) {
            std::int64_t t = a / b;
            a -= t * b;
            std::swap(a, b);
            u0 -= t * u1;
            std::swap(u0, u1);
        }
        ninv = ((u0 % m) + m) % m;
        (void)e;
    }
    std::int64_t t = mul_mod(((r - 1) % m + m) % m, ninv, m);
    return (1 + n * t) % q;
}

}  // namespace

Cplx Rotation::value() const {
    std::int64_t n = ((num % den) + den) % den;
    if ((4 * n) % den == 0) {
        switch ((4 * n) / den) {
            case 0: return {1.0, 0.0};
            case 1: return {0.0, 1.0};
            case 2: return {-1.0, 0.0};
            default: return {0.0, -1.0};
        }
    }
    // Fold to [0, 1/2] and conjugate back: keeps the cos/sin argument small.
    bool conj = false;
    std::int64_t m = n;
    if (2 * m > den) {
        m = den - m;
        conj = true;
    }
    double theta = 2.0 * std::numbers::pi * (static_cast<double>(m) / static_cast<double>(den));
    Cplx z{std::cos(theta), std::sin(theta)};
    return conj ? std::conj(z) : z;
}

std::shared_ptr<const UnitGroup> UnitGroup::build(std::int64_t q) {
    if (q < 1 || q > kMaxModulus)
        throw domain_error("modulus out of range [1, 1000000]");
    auto g = std::shared_ptr<UnitGroup>(new UnitGroup());
    g->q_ = q;

    for (const auto& pp : factorize(q)) {
        if (pp.p == 2) {
            if (pp.a == 2) {
                g->comps_.push_back({crt_lift(3, 4, q), 2});
            } else if (pp.a >= 3) {
                g->comps_.push_back({crt_lift(pp.pa - 1, pp.pa, q), 2});
                g->comps_.push_back({crt_lift(5, pp.pa, q), pp.pa / 4});
            }
            // a = 1: (Z/2)^* is trivial, no component
        } else {
            std::int64_t root = primitive_root_mod_pa(pp.p, pp.pa);
            std::int64_t order = pp.pa / pp.p * (pp.p - 1);
            g->comps_.push_back({crt_lift(root, pp.pa, q), order});
        }
    }

    g->phi_ = 1;
    g->exponent_ = 1;
    for (const auto& c : g->comps_) {
        g->phi_ *= c.order;
        g->exponent_ = std::lcm(g->exponent_, c.order);
    }

    const std::size_t k = g->comps_.size();
    g->dlog_.assign(static_cast<std::size_t>(q) * std::max<std::size_t>(k, 1), -1);

    // Fill the table by walking all exponent tuples, carrying the partial
    // product so each step is one modular multiplication.
    std::vector<std::int32_t> exps(k, 0);
    auto fill = [&](auto&& self, std::size_t i, std::int64_t residue) -> void {
        if (i == k) {
            std::int32_t* row = g->dlog_.data() + static_cast<std::size_t>(residue) * std::max<std::size_t>(k, 1);
            for (std::size_t j = 0; j < k; ++j) row[j] = exps[j];
            if (k == 0) row[0] = 0;  // trivial group: mark residue as coprime
            return;
        }
        std::int64_t r = residue;
        for (std::int64_t e = 0; e < g->comps_[i].order; ++e) {
            exps[i] = static_cast<std::int32_t>(e);
            self(self, i + 1, r);
            r = mul_mod(r, g->comps_[i].generator, q);
        }
    };
    fill(fill, 0, 1 % q);
    return g;
}

bool UnitGroup::is_coprime(std::int64_t n) const {
    std::int64_t r = ((n % q_) + q_) % q_;
    return dlog_[static_cast<std::size_t>(r) * std::max<std::size_t>(comps_.size(), 1)] >= 0;
}

std::optional<std::vector<std::int64_t>> UnitGroup::discrete_log(std::int64_t n) const {
    std::int64_t r = ((n % q_) + q_) % q_;
    const std::size_t k = comps_.size();
    const std::int32_t* row = dlog_.data() + static_cast<std::size_t>(r) * std::max<std::size_t>(k, 1);
    if (row[0] < 0) return std::nullopt;
    std::vector<std::int64_t> out(k);
    for (std::size_t j = 0; j < k; ++j) out[j] = row[j];
    return out;
}

std::int64_t UnitGroup::reconstruct(const std::vector<std::int64_t>& exps) const {
    if (exps.size() != comps_.size())
        throw domain_error("exponent vector length mismatch");
    std::int64_t r = 1 % q_;
    for (std::size_t j = 0; j < comps_.size(); ++j) {
        std::int64_t e = ((exps[j] % comps_[j].order) + comps_[j].order) % comps_[j].order;
        r = mul_mod(r, pow_mod(comps_[j].generator, e, q_), q_);
    }
    return r;
}

Character::Character(std::shared_ptr<const UnitGroup> group,
                     std::vector<std::int64_t> exponents)
    : group_(std::move(group)), exps_(std::move(exponents)) {
    if (!group_) throw domain_error("null group");
    const auto& comps = group_->components();
    if (exps_.size() != comps.size())
        throw domain_error("exponent vector length mismatch");
    for (std::size_t j = 0; j < exps_.size(); ++j) {
        std::int64_t d = comps[j].order;
        exps_[j] = ((exps_[j] % d) + d) % d;
    }
    // chi(-1) is +-1; its rotation is 0 or M/2.  (-1 reduces to q-1, or to 0
    // when q = 1, and is always coprime to q.)
    auto rot = rotation_at(group_->modulus() - 1);
    if (!rot) throw domain_error("internal: -1 not coprime to modulus");
    parity_ = (rot->num == 0) ? 0 : 1;
    if (parity_ == 1 && 2 * rot->num != rot->den)
        throw domain_error("internal: chi(-1) not +-1");
}

bool Character::is_principal() const {
    return std::all_of(exps_.begin(), exps_.end(),
                       [](std::int64_t e) { return e == 0; });
}

bool Character::is_real() const {
    const auto& comps = group_->components();
    for (std::size_t j = 0; j < exps_.size(); ++j)
        if ((2 * exps_[j]) % comps[j].order != 0) return false;
    return true;
}

std::optional<Rotation> Character::rotation_at(std::int64_t n) const {
    auto x = group_->discrete_log(n);
    if (!x) return std::nullopt;
    const auto& comps = group_->components();
    const std::int64_t M = group_->exponent();
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < exps_.size(); ++j) {
        std::int64_t t = ((exps_[j] * (*x)[j]) % M) * (M / comps[j].order) % M;
        acc = (acc + t) % M;
    }
    return Rotation{acc, M};
}

Cplx Character::eval(std::int64_t n) const {
    auto rot = rotation_at(n);
    if (!rot) return {0.0, 0.0};
    return rot->value();
}

Character Character::conjugate() const {
    const auto& comps = group_->components();
    std::vector<std::int64_t> neg(exps_.size());
    for (std::size_t j = 0; j < exps_.size(); ++j)
        neg[j] = (comps[j].order - exps_[j]) % comps[j].order;
    return Character(group_, std::move(neg));
}

std::string Character::label() const {
    std::string out = std::to_string(group_->modulus());
    if (exps_.empty()) return out;
    out += '.';
    for (std::size_t j = 0; j < exps_.size(); ++j) {
        if (j) out += '-';
        out += std::to_string(exps_[j]);
    }
    return out;
}

Character Character::parse_label(const std::string& text) {
    auto bad = [&] { return domain_error("malformed character label: " + text); };
    std::size_t dot = text.find('.');
    std::string qpart = (dot == std::string::npos) ? text : text.substr(0, dot);
    if (qpart.empty() ||
        qpart.find_first_not_of("0123456789") != std::string::npos)
        throw bad();
    std::int64_t q = 0;
    try {
        q = std::stoll(qpart);
    } catch (...) {
        throw bad();
    }
    auto group = UnitGroup::build(q);
    std::vector<std::int64_t> exps;
    if (dot != std::string::npos) {
        std::string rest = text.substr(dot + 1);
        if (rest.empty()) throw bad();
        std::size_t pos = 0;
        while (pos <= rest.size()) {
            std::size_t dash = rest.find('-', pos);
            std::string tok = rest.substr(pos, dash == std::string::npos
                                                   ? std::string::npos
                                                   : dash - pos);
            if (tok.empty() ||
                tok.find_first_not_of("0123456789") != std::string::npos)
                throw bad();
            exps.push_back(std::stoll(tok));
            if (dash == std::string::npos) break;
            pos = dash + 1;
        }
    }
    if (exps.size() != group->components().size())
        throw domain_error("label " + text + " has " +
                           std::to_string(exps.size()) +
                           " exponents; modulus needs " +
                           std::to_string(group->components().size()));
    // Labels are canonical: exponents must already be reduced.
    for (std::size_t j = 0; j < exps.size(); ++j)
        if (exps[j] >= group->components()[j].order)
            throw domain_error("label " + text + ": exponent " +
                               std::to_string(exps[j]) +
                               " exceeds component order " +
                               std::to_string(group->components()[j].order));
    return Character(group, std::move(exps));
}

bool Character::operator==(const Character& other) const {
    return modulus() == other.modulus() && exps_ == other.exps_;
}

std::vector<Character> enumerate_characters(std::int64_t q) {
    auto group = UnitGroup::build(q);
    const auto& comps = group->components();
    const std::size_t k = comps.size();
    std::vector<Character> out;
    out.reserve(static_cast<std::size_t>(group->phi()));
    std::vector<std::int64_t> exps(k, 0);
    for (;;) {
        out.emplace_back(group, exps);
        // lexicographic odometer, last digit fastest
        std::size_t j = k;
        while (j > 0) {
            --j;
            if (++exps[j] < comps[j].order) break;
            exps[j] = 0;
            if (j == 0) return out;
        }
        if (k == 0) return out;
    }
}

InducedDecomposition conductor(const Character& chi) {
    const std::int64_t q = chi.modulus();
    std::vector<std::int64_t> divisors;
    for (std::int64_t d = 1; d * d <= q; ++d) {
        if (q % d) continue;
        divisors.push_back(d);
        if (d != q / d) divisors.push_back(q / d);
    }
    std::sort(divisors.begin(), divisors.end());

    std::int64_t f = q;
    for (std::int64_t d : divisors) {
        bool trivial_on_kernel = true;
        for (std::int64_t n = 1; n <= q; n += d) {
            if (!chi.group().is_coprime(n)) continue;
            auto rot = chi.rotation_at(n);
            if (rot->num != 0) {
                trivial_on_kernel = false;
                break;
            }
        }
        if (trivial_on_kernel) {
            f = d;
            break;
        }
    }

    auto fgroup = UnitGroup::build(f);
    const auto& fcomps = fgroup->components();
    const std::int64_t M = chi.group().exponent();
    std::vector<std::int64_t> fexps(fcomps.size(), 0);
    for (std::size_t j = 0; j < fcomps.size(); ++j) {
        // Lift the generator to a residue coprime to q; one exists among
        // g, g+f, ..., g+(q/f-1)f.
        std::int64_t n = fcomps[j].generator;
        while (!chi.group().is_coprime(n)) {
            n += f;
            if (n > q) throw domain_error("internal: no coprime lift found");
        }
        auto rot = chi.rotation_at(n);
        // chi_f(g_j) is a d_j-th root of unity: num*d_j must be divisible
        // by M, and the quotient is the exponent.
        std::int64_t d = fcomps[j].order;
        if ((rot->num * d) % M != 0)
            throw domain_error("internal: induced value is not a d-th root");
        fexps[j] = (rot->num * d / M) % d;
    }
    return InducedDecomposition{f, Character(fgroup, std::move(fexps))};
}

bool is_primitive(const Character& chi) {
    return conductor(chi).conductor == chi.modulus();
}

std::int64_t euler_phi(std::int64_t q) {
    if (q < 1) throw domain_error("euler_phi: modulus must be positive");
    std::int64_t r = 1;
    for (const auto& pp : factorize(q)) r *= pp.pa / pp.p * (pp.p - 1);
    return r;
}

std::vector<std::int64_t> prime_factors(std::int64_t q) {
    std::vector<std::int64_t> out;
    for (const auto& pp : factorize(q)) out.push_back(pp.p);
    return out;
}

}  // namespace lcrit
