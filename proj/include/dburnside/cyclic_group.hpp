#pragma once

/**
 * @file cyclic_group.hpp
 * @brief The base group C_{p^n}: its subgroup chain, the Moebius function of
 *        that chain, and the unit groups (Z/p^t)^x acting as automorphisms of
 *        cyclic subquotients.
 *
 * Conventions used throughout the library:
 *  - G = <g> is cyclic of order p^n. The subgroup of order p^m is
 *    <g^(p^(n-m))> and is identified with its exponent m; subgroups form a
 *    chain, so an exponent determines the subgroup uniquely.
 *  - The subquotient C_{p^i}/C_{p^j} is generated by the image of g^(p^(n-i)).
 *    Every isomorphism between subquotients of equal order p^t is "raise the
 *    canonical generator to the u-th power" for a unit u mod p^t.
 */

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dburnside {

/// Exact integer coefficients; ring arithmetic must never overflow.
/// Expression templates are disabled so values behave like plain integers.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;

/// Deterministic primality test by trial division.
inline bool is_prime(std::int64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::int64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0) return false;
    return true;
}

/// p^e as int64, guarded so the result stays below 2^62.
inline std::int64_t pow_i64(std::int64_t p, int e) {
    std::int64_t r = 1;
    for (int c = 0; c < e; ++c) {
        if (r > (std::int64_t{1} << 62) / p)
            throw std::overflow_error("pow_i64: p^e exceeds 2^62");
        r *= p;
    }
    return r;
}

/// Index m names the unique subgroup of order p^m in the chain.
using SubgroupIndex = int;

struct CyclicPGroup {
    std::int64_t p;
    int n;

    CyclicPGroup(std::int64_t p_, int n_) : p(p_), n(n_) {
        if (!is_prime(p))
            throw std::invalid_argument("CyclicPGroup: p must be prime");
        if (n < 0)
            throw std::invalid_argument("CyclicPGroup: n must be >= 0");
        (void)pow_i64(p, n);  // |G| must be representable
    }

    std::int64_t order() const { return pow_i64(p, n); }

    bool operator==(const CyclicPGroup&) const = default;
};

/// All subgroup indices in ascending order: [0, 1, ..., n].
inline std::vector<SubgroupIndex> subgroup_exponents(const CyclicPGroup& g) {
    std::vector<SubgroupIndex> out;
    out.reserve(static_cast<std::size_t>(g.n) + 1);
    for (int m = 0; m <= g.n; ++m) out.push_back(m);
    return out;
}

/// Moebius function of the chain poset 0 < 1 < ... < n.
inline int mobius_chain(SubgroupIndex a, SubgroupIndex b) {
    if (a > b) throw std::invalid_argument("mobius_chain: requires a <= b");
    if (b == a) return 1;
    if (b == a + 1) return -1;
    return 0;
}

/// A unit of Z/p^t, i.e. an automorphism of a subquotient of order p^t.
/// t = 0 encodes the trivial unit of the trivial quotient (value fixed to 1).
struct UnitModPK {
    int modulus_exponent = 0;
    std::int64_t value = 1;

    bool operator==(const UnitModPK&) const = default;
};

/// Canonicalize a residue into a valid unit mod p^t.
inline UnitModPK make_unit(const CyclicPGroup& g, int t, std::int64_t value) {
    if (t < 0 || t > g.n)
        throw std::invalid_argument("make_unit: modulus exponent out of range");
    if (t == 0) return UnitModPK{0, 1};
    const std::int64_t m = pow_i64(g.p, t);
    value %= m;
    if (value < 0) value += m;
    if (value % g.p == 0)
        throw std::invalid_argument("make_unit: value not coprime to p");
    return UnitModPK{t, value};
}

/// All units mod p^t in ascending order; length p^t - p^(t-1) for t >= 1.
inline std::vector<UnitModPK> units_mod(const CyclicPGroup& g, int t) {
    if (t < 0 || t > g.n)
        throw std::invalid_argument("units_mod: t out of range");
    if (t == 0) return {UnitModPK{0, 1}};
    const std::int64_t m = pow_i64(g.p, t);
    std::vector<UnitModPK> out;
    out.reserve(static_cast<std::size_t>(m - m / g.p));
    for (std::int64_t u = 1; u < m; ++u)
        if (u % g.p != 0) out.push_back(UnitModPK{t, u});
    return out;
}

inline UnitModPK unit_mul(const CyclicPGroup& g, UnitModPK a, UnitModPK b) {
    if (a.modulus_exponent != b.modulus_exponent)
        throw std::invalid_argument("unit_mul: mismatched moduli");
    if (a.modulus_exponent == 0) return a;
    const std::int64_t m = pow_i64(g.p, a.modulus_exponent);
    const auto prod = static_cast<__int128>(a.value) * b.value % m;
    return UnitModPK{a.modulus_exponent, static_cast<std::int64_t>(prod)};
}

/// Inverse via the extended Euclidean algorithm.
inline UnitModPK unit_inv(const CyclicPGroup& g, UnitModPK a) {
    if (a.modulus_exponent == 0) return a;
    const std::int64_t m = pow_i64(g.p, a.modulus_exponent);
    std::int64_t r0 = m, r1 = a.value;
    __int128 s0 = 0, s1 = 1;
    while (r1 != 0) {
        const std::int64_t q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        s0 -= static_cast<__int128>(q) * s1;
        std::swap(s0, s1);
    }
    // gcd is 1 for a valid unit
    auto inv = static_cast<std::int64_t>(s0 % m);
    if (inv < 0) inv += m;
    return UnitModPK{a.modulus_exponent, inv};
}

/// Reduction (Z/p^t)^x -> (Z/p^s)^x for s <= t; a surjective homomorphism.
inline UnitModPK reduce_unit(const CyclicPGroup& g, UnitModPK a, int s) {
    if (s < 0 || s > a.modulus_exponent)
        throw std::invalid_argument("reduce_unit: target exponent out of range");
    return make_unit(g, s, a.value);
}

}  // namespace dburnside
