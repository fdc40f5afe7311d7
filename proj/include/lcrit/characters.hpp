#pragma once

/**
 * @file characters.hpp
 * @brief Dirichlet characters mod q as exponent vectors on unit-group
 *        generators, with exact root-of-unity evaluation.
 *
 * Mathematical background
 * -----------------------
 * (Z/qZ)^* decomposes by CRT over the prime-power factors of q.  For an odd
 * prime power p^a the factor is cyclic of order phi(p^a) = p^(a-1)(p-1),
 * generated by a primitive root; for 2^a it is trivial (a<=1), cyclic of
 * order 2 (a=2), or C_2 x C_{2^(a-2)} generated by 2^a-1 and 5 (a>=3).
 *
 * Fixing one generator list g_1..g_k with orders d_1..d_k, every residue n
 * coprime to q has a unique exponent vector x with n = prod g_i^{x_i}, and
 * every character is determined by an exponent vector e (e_i mod d_i):
 *
 *     chi(n) = exp(2*pi*i * sum_i e_i*x_i/d_i).
 *
 * The rotation sum_i e_i*x_i/d_i is carried as an exact rational with
 * denominator M = lcm(d_i), so character values are exact roots of unity:
 * the only rounding is the final cos/sin, and the cardinal values 1, i, -1,
 * -i are produced exactly.  chi(n) = 0 when gcd(n,q) > 1.
 *
 * The conductor f of chi is the smallest divisor f | q such that chi(n) = 1
 * whenever n = 1 (mod f) and gcd(n,q) = 1; chi is induced by a unique
 * primitive character chi_f mod f, and chi is primitive when f = q.
 *
 * Everything here is immutable after construction and safe to share across
 * threads.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lcrit/numio.hpp"

namespace lcrit {

// Largest supported modulus.  Group construction stores a dense discrete-log
// table (q rows), so memory is O(q * #components).
inline constexpr std::int64_t kMaxModulus = 1'000'000;

/// Exact root of unity exp(2*pi*i * num/den), 0 <= num < den.
struct Rotation {
    std::int64_t num = 0;
    std::int64_t den = 1;

    /// Complex value; exact for the four cardinal directions.
    Cplx value() const;
};

/// One cyclic factor of (Z/qZ)^*: a generator (as a residue mod q) and its
/// multiplicative order.
struct GroupComponent {
    std::int64_t generator = 1;
    std::int64_t order = 1;
};

/**
 * Structure of (Z/qZ)^*: generator/order list plus the full discrete-log
 * table.  Construction is O(q) time and memory.
 */
class UnitGroup {
public:
    /// Builds the group for 1 <= q <= kMaxModulus; throws domain_error
    /// otherwise.
    static std::shared_ptr<const UnitGroup> build(std::int64_t q);

    std::int64_t modulus() const { return q_; }
    std::int64_t phi() const { return phi_; }
    const std::vector<GroupComponent>& components() const { return comps_; }
    /// lcm of the component orders (the group exponent); 1 for trivial groups.
    std::int64_t exponent() const { return exponent_; }

    bool is_coprime(std::int64_t n) const;

    /// Exponent vector of n (reduced mod q); nullopt when gcd(n,q) > 1.
    std::optional<std::vector<std::int64_t>> discrete_log(std::int64_t n) const;

    /// prod g_i^{e_i} mod q (exponents taken mod the component orders).
    std::int64_t reconstruct(const std::vector<std::int64_t>& exps) const;

private:
    UnitGroup() = default;

    std::int64_t q_ = 1;
    std::int64_t phi_ = 1;
    std::int64_t exponent_ = 1;
    std::vector<GroupComponent> comps_;
    // Dense table: row n holds the exponent vector of residue n, or -1 in
    // every slot when gcd(n,q) > 1.  Row stride is comps_.size() (0 allowed).
    std::vector<std::int32_t> dlog_;

    friend class Character;
};

/**
 * A Dirichlet character mod q, stored as its exponent vector against the
 * group's generator list.
 */
class Character {
public:
    /// Character with the given exponents (each reduced mod its order).
    Character(std::shared_ptr<const UnitGroup> group,
              std::vector<std::int64_t> exponents);

    std::int64_t modulus() const { return group_->modulus(); }
    const std::vector<std::int64_t>& exponents() const { return exps_; }
    const UnitGroup& group() const { return *group_; }
    std::shared_ptr<const UnitGroup> group_ptr() const { return group_; }

    bool is_principal() const;
    /// true when chi(n) is real (+-1 or 0) for every n.
    bool is_real() const;
    /// Parity e in {0,1} with chi(-1) = (-1)^e; computed exactly.
    int parity() const { return parity_; }

    /// Exact rotation of chi(n); nullopt when gcd(n,q) > 1 (value 0).
    std::optional<Rotation> rotation_at(std::int64_t n) const;

    /// chi(n) as a complex double (0 when gcd(n,q) > 1).
    Cplx eval(std::int64_t n) const;

    Character conjugate() const;

    /// Canonical label "q.e1-e2-...-ek"; bare "q" when the group is trivial
    /// (q = 1, 2).
    std::string label() const;

    /// Inverse of label(); throws domain_error on malformed input or
    /// out-of-range exponents.
    static Character parse_label(const std::string& text);

    /// Equality as functions == equality of (modulus, exponent vector).
    bool operator==(const Character& other) const;

private:
    std::shared_ptr<const UnitGroup> group_;
    std::vector<std::int64_t> exps_;
    int parity_ = 0;
};

/// All phi(q) characters mod q in lexicographic exponent order; the
/// principal character (all exponents zero) comes first.  The order is the
/// stable identifier order used by the CLI.
std::vector<Character> enumerate_characters(std::int64_t q);

/// Conductor plus the inducing primitive character.
struct InducedDecomposition {
    std::int64_t conductor = 1;
    Character primitive;
};

/**
 * Smallest f | q such that chi is trivial on residues n = 1 (mod f) coprime
 * to q, together with the primitive character mod f that induces chi.
 * chi_f matches chi on every residue coprime to q.
 */
InducedDecomposition conductor(const Character& chi);

/// conductor(chi).conductor == chi.modulus().
bool is_primitive(const Character& chi);

/// Euler phi via the factorization of q.
std::int64_t euler_phi(std::int64_t q);

/// Distinct prime factors of q, ascending.
std::vector<std::int64_t> prime_factors(std::int64_t q);

}  // namespace lcrit
