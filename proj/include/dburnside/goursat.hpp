#pragma once

/**
 * @file goursat.hpp
 * @brief Goursat quintuples (i,j;k,l)_u encoding the subgroups of G x G for
 *        cyclic G, the star composition computed through the Butterfly
 *        (Zassenhaus) lemma, the gamma cocycle, and opposites.
 *
 * A subgroup L <= G x G is determined by its two sections (P1,K1), (P2,K2)
 * and the isomorphism phi: P2/K2 -> P1/K1. With subgroups named by chain
 * exponents, L becomes (i,j;k,l)_u where i-j = k-l = t and u is the residue
 * mod p^t with phi = "raise the canonical generator to the u-th power".
 */

#include <algorithm>
#include <cassert>
#include <string>
#include <tuple>

#include "cyclic_group.hpp"

namespace dburnside {

/// A section (A,B) of G with B <= A, both named by chain exponents.
struct Section {
    SubgroupIndex top = 0;
    SubgroupIndex bottom = 0;

    bool operator==(const Section&) const = default;
};

struct Quintuple {
    int i = 0;  ///< left projection exponent P1
    int j = 0;  ///< left kernel exponent K1
    int k = 0;  ///< right projection exponent P2
    int l = 0;  ///< right kernel exponent K2
    std::int64_t u = 1;  ///< Goursat isomorphism P2/K2 -> P1/K1 as a residue

    int subquotient_exponent() const { return i - j; }
    Section left_section() const { return {i, j}; }
    Section right_section() const { return {k, l}; }
    UnitModPK unit() const { return {i - j, u}; }
    bool is_bifree() const { return j == 0 && l == 0; }

    bool operator==(const Quintuple&) const = default;
};

/// Canonical basis order: lexicographic on (i-j, i, k, u).
inline bool operator<(const Quintuple& a, const Quintuple& b) {
    return std::tuple(a.i - a.j, a.i, a.k, a.u) <
           std::tuple(b.i - b.j, b.i, b.k, b.u);
}

/// Validate and canonicalize external data into a quintuple over G.
inline Quintuple make_quintuple(const CyclicPGroup& g, int i, int j, int k,
                                int l, std::int64_t u) {
    if (j < 0 || i > g.n || k > g.n || l < 0 || j > i || l > k)
        throw std::invalid_argument("make_quintuple: sections out of range");
    if (i - j != k - l)
        throw std::invalid_argument(
            "make_quintuple: subquotients must have equal order");
    return Quintuple{i, j, k, l, make_unit(g, i - j, u).value};
}

inline std::string to_string(const Quintuple& q) {
    return "(" + std::to_string(q.i) + "," + std::to_string(q.j) + ";" +
           std::to_string(q.k) + "," + std::to_string(q.l) + ")_" +
           std::to_string(q.u);
}

/// One quintuple per subgroup of G x G, in canonical order.
/// Count: sum over t of (n-t+1)^2 * |(Z/p^t)^x|.
inline std::vector<Quintuple> enumerate_basis(const CyclicPGroup& g) {
    std::vector<Quintuple> out;
    for (int t = 0; t <= g.n; ++t) {
        const auto units = units_mod(g, t);
        for (int i = t; i <= g.n; ++i)
            for (int k = t; k <= g.n; ++k)
                for (const auto& u : units)
                    out.push_back(Quintuple{i, i - t, k, k - t, u.value});
    }
    return out;
}

/// (i,j;k,l)_u -> (k,l;i,j)_{u^-1}; reverses the biset actions.
inline Quintuple opposite(const CyclicPGroup& g, const Quintuple& q) {
    return Quintuple{q.k, q.l, q.i, q.j, unit_inv(g, q.unit()).value};
}

/// Composition of subgroups L <= G x G and M <= G x G.
///
/// The middle sections are resolved by the Butterfly lemma; on a chain,
/// intersections and products collapse to min and max. Under the fixed
/// generator convention the canonical Butterfly isomorphism is the unit 1,
/// and the transported Goursat isomorphisms compose by modular
/// multiplication of the residues.
inline Quintuple star(const CyclicPGroup& g, const Quintuple& a,
                      const Quintuple& b) {
    const int p2 = std::max(std::min(a.k, b.i), a.l);
    const int k2 = std::max(std::min(a.k, b.j), a.l);
    const int p3 = std::max(std::min(b.i, a.k), b.j);
    const int k3 = std::max(std::min(b.i, a.l), b.j);

    const int i1 = a.j + (p2 - a.l);
    const int j1 = a.j + (k2 - a.l);
    const int k4 = b.l + (p3 - b.j);
    const int l4 = b.l + (k3 - b.j);

    const int t = i1 - j1;
    assert(t == k4 - l4 && t == p2 - k2 && t == p3 - k3);

    std::int64_t w = 1;
    if (t > 0) {
        const std::int64_t m = pow_i64(g.p, t);
        w = static_cast<std::int64_t>(
            static_cast<__int128>(a.u % m) * (b.u % m) % m);
    }
    return Quintuple{i1, j1, k4, l4, w};
}

/// gamma(L,M) = |G| / |P2(L) P1(M)| = p^(n - max(k(L), i(M))).
inline std::int64_t gamma(const CyclicPGroup& g, const Quintuple& a,
                          const Quintuple& b) {
    return pow_i64(g.p, g.n - std::max(a.k, b.i));
}

}  // namespace dburnside
