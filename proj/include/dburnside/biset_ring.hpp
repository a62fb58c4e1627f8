#pragma once

/**
 * @file biset_ring.hpp
 * @brief The double Burnside ring B(G,G) of a cyclic p-group, realized as the
 *        twisted category algebra Z_gamma S_{GxG}: sparse exact arithmetic,
 *        the duality anti-involution, the idempotents j_N and f_N, the ideal
 *        quotient map rho with its section eta, inflation of ring elements and
 *        units along G -> G/N, and the diagonal embedding of B(G).
 *
 * Multiplication extends L *' M = gamma(L,M) (L * M) bilinearly; gamma is the
 * 2-cocycle p^(n - max(k(L), i(M))), and associativity of the product is
 * exactly the cocycle relation.
 */

#include <map>
#include <optional>

#include "goursat.hpp"

namespace dburnside {

/// Sparse integer combination of Goursat quintuples: an element of B(G,G).
/// No zero coefficients are stored; the map order is the canonical basis
/// order, so iteration (and serialization) is deterministic.
struct RingElement {
    CyclicPGroup group;
    std::map<Quintuple, Int> coeffs;

    explicit RingElement(const CyclicPGroup& g) : group(g) {}
    RingElement(const CyclicPGroup& g, const Quintuple& q, Int c = 1)
        : group(g) {
        if (c != 0) coeffs.emplace(q, std::move(c));
    }

    bool is_zero() const { return coeffs.empty(); }

    Int coeff(const Quintuple& q) const {
        auto it = coeffs.find(q);
        return it == coeffs.end() ? Int(0) : it->second;
    }

    bool operator==(const RingElement&) const = default;
};

inline void require_same_group(const RingElement& a, const RingElement& b,
                               const char* op) {
    if (!(a.group == b.group))
        throw std::invalid_argument(std::string(op) + ": group mismatch");
}

inline void add_term(RingElement& a, const Quintuple& q, const Int& c) {
    if (c == 0) return;
    auto [it, inserted] = a.coeffs.try_emplace(q, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) a.coeffs.erase(it);
    }
}

inline RingElement operator+(const RingElement& a, const RingElement& b) {
    require_same_group(a, b, "add");
    RingElement out = a;
    for (const auto& [q, c] : b.coeffs) add_term(out, q, c);
    return out;
}

inline RingElement operator-(const RingElement& a) {
    RingElement out(a.group);
    for (const auto& [q, c] : a.coeffs) out.coeffs.emplace(q, -c);
    return out;
}

inline RingElement operator-(const RingElement& a, const RingElement& b) {
    return a + (-b);
}

inline RingElement operator*(const Int& s, const RingElement& a) {
    RingElement out(a.group);
    if (s == 0) return out;
    for (const auto& [q, c] : a.coeffs) out.coeffs.emplace(q, s * c);
    return out;
}

/// Bilinear extension of L *' M = gamma(L,M) (L * M).
inline RingElement operator*(const RingElement& a, const RingElement& b) {
    require_same_group(a, b, "mul");
    RingElement out(a.group);
    for (const auto& [L, ca] : a.coeffs)
        for (const auto& [M, cb] : b.coeffs)
            add_term(out, star(a.group, L, M),
                     ca * cb * gamma(a.group, L, M));
    return out;
}

/// The duality anti-involution: opposite on every basis quintuple.
inline RingElement dual(const RingElement& a) {
    RingElement out(a.group);
    for (const auto& [q, c] : a.coeffs)
        out.coeffs.emplace(opposite(a.group, q), c);
    return out;
}

/// Id_G = [G] = the full diagonal (n,0;n,0)_1.
inline RingElement identity(const CyclicPGroup& g) {
    return RingElement(g, Quintuple{g.n, 0, g.n, 0, 1});
}

inline void require_subgroup_index(const CyclicPGroup& g, SubgroupIndex m,
                                   const char* op) {
    if (m < 0 || m > g.n)
        throw std::invalid_argument(std::string(op) +
                                    ": subgroup index out of range");
}

/// j_N = Inf o Def through G/N, the basis idempotent (n,N;n,N)_1.
inline RingElement j_idem(const CyclicPGroup& g, SubgroupIndex m) {
    require_subgroup_index(g, m, "j_idem");
    return RingElement(g, Quintuple{g.n, m, g.n, m, 1});
}

/// f_N: the Moebius inversion of {j_N} over the chain. Closed form on a
/// chain: f_N = j_N - j_{N+1} for N < n, f_n = j_n.
inline RingElement f_idem(const CyclicPGroup& g, SubgroupIndex m) {
    require_subgroup_index(g, m, "f_idem");
    RingElement out = j_idem(g, m);
    if (m < g.n) out = out - j_idem(g, m + 1);
    return out;
}

/// f_N by the general Moebius sum over M >= N; kept as a cross-check of the
/// closed form. The summand must be j_M (indexed by the summation variable):
/// with the constant summand j_N the family would not resolve the identity.
inline RingElement f_idem_mobius_sum(const CyclicPGroup& g, SubgroupIndex m) {
    require_subgroup_index(g, m, "f_idem_mobius_sum");
    RingElement out(g);
    for (int big = m; big <= g.n; ++big)
        out = out + (Int(mobius_chain(m, big)) * j_idem(g, big));
    return out;
}

/// Transport a quintuple of G/N = C_{p^(n-N)} to G: shift all four section
/// exponents by N, keep the residue. The image is exactly the set of
/// quintuples with both kernels >= N.
inline Quintuple lift_basis(const CyclicPGroup& g, SubgroupIndex m,
                            const Quintuple& q) {
    require_subgroup_index(g, m, "lift_basis");
    const CyclicPGroup quotient(g.p, g.n - m);
    (void)make_quintuple(quotient, q.i, q.j, q.k, q.l, q.u);  // validate
    return Quintuple{q.i + m, q.j + m, q.k + m, q.l + m, q.u};
}

/// The injective rng morphism B(G/N,G/N) -> B(G,G), a |-> Inf a Def.
/// Additive and multiplicative but not unital: Id_{G/N} |-> j_N.
inline RingElement rng_embed(const CyclicPGroup& g, SubgroupIndex m,
                             const RingElement& a) {
    require_subgroup_index(g, m, "rng_embed");
    if (a.group.p != g.p || a.group.n != g.n - m)
        throw std::invalid_argument("rng_embed: group mismatch");
    RingElement out(g);
    for (const auto& [q, c] : a.coeffs)
        out.coeffs.emplace(lift_basis(g, m, q), c);
    return out;
}

namespace detail {
inline bool two_sided_inverse(const RingElement& u, const RingElement& v) {
    const RingElement id = identity(u.group);
    return u * v == id && v * u == id;
}
}  // namespace detail

/// Unit-group inflation B(G/N,G/N)^x -> B(G,G)^x:
///   u |-> Id_G + Inf (u - Id_{G/N}) Def.
/// The caller either supplies a verified two-sided inverse or u must be
/// orthogonal (inverse = dual); both certify that u is a unit.
inline RingElement dbinf_unit(const CyclicPGroup& g, SubgroupIndex m,
                              const RingElement& u,
                              const std::optional<RingElement>& u_inverse = {}) {
    const RingElement& inv = u_inverse ? *u_inverse : dual(u);
    if (!detail::two_sided_inverse(u, inv))
        throw std::invalid_argument("dbinf_unit: u is not a verified unit");
    return identity(g) + rng_embed(g, m, u - identity(u.group));
}

/// A sign times an outer automorphism: an element of <-Id, Out(G)>.
struct SignedOuterAut {
    int sign = 1;          ///< +1 or -1
    UnitModPK aut;         ///< residue mod p^n

    bool operator==(const SignedOuterAut&) const = default;
};

/// Element of the group algebra Z[Out(G)]; Out(G) = (Z/p^n)^x for cyclic G.
struct OuterAlgebraElement {
    CyclicPGroup group;
    std::map<std::int64_t, Int> coeffs;

    explicit OuterAlgebraElement(const CyclicPGroup& g) : group(g) {}

    bool operator==(const OuterAlgebraElement&) const = default;
};

inline OuterAlgebraElement operator+(const OuterAlgebraElement& a,
                                     const OuterAlgebraElement& b) {
    if (!(a.group == b.group))
        throw std::invalid_argument("outer add: group mismatch");
    OuterAlgebraElement out = a;
    for (const auto& [u, c] : b.coeffs) {
        auto [it, inserted] = out.coeffs.try_emplace(u, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) out.coeffs.erase(it);
        }
    }
    return out;
}

inline OuterAlgebraElement operator*(const OuterAlgebraElement& a,
                                     const OuterAlgebraElement& b) {
    if (!(a.group == b.group))
        throw std::invalid_argument("outer mul: group mismatch");
    OuterAlgebraElement out(a.group);
    for (const auto& [u, cu] : a.coeffs)
        for (const auto& [v, cv] : b.coeffs) {
            const auto w =
                unit_mul(a.group, UnitModPK{a.group.n, u}, UnitModPK{a.group.n, v});
            auto [it, inserted] = out.coeffs.try_emplace(w.value, cu * cv);
            if (!inserted) {
                it->second += cu * cv;
                if (it->second == 0) out.coeffs.erase(it);
            }
        }
    return out;
}

/// rho: B(G,G) -> Z[Out(G)]. Keeps the coefficients of the full-diagonal
/// quintuples (n,0;n,0)_u and kills the ideal I_G spanned by everything else.
inline OuterAlgebraElement rho(const RingElement& a) {
    OuterAlgebraElement out(a.group);
    for (const auto& [q, c] : a.coeffs)
        if (q.i == a.group.n && q.j == 0 && q.k == a.group.n && q.l == 0)
            out.coeffs.emplace(q.u, c);
    return out;
}

/// eta: section of rho. eps * phi |-> eps (n,0;n,0)_phi, an orthogonal unit.
inline RingElement eta(const CyclicPGroup& g, const SignedOuterAut& s) {
    if (s.sign != 1 && s.sign != -1)
        throw std::invalid_argument("eta: sign must be +1 or -1");
    const auto u = make_unit(g, g.n, s.aut.value);
    return RingElement(g, Quintuple{g.n, 0, g.n, 0, u.value}, Int(s.sign));
}

inline RingElement eta(const CyclicPGroup& g, int sign, std::int64_t aut) {
    return eta(g, SignedOuterAut{sign, UnitModPK{g.n, aut}});
}

/// When rho(a) = eps * phi for a single outer automorphism, recover it.
/// Every orthogonal unit has this form.
inline std::optional<SignedOuterAut> rho_times(const RingElement& a) {
    const auto r = rho(a);
    if (r.coeffs.size() != 1) return std::nullopt;
    const auto& [u, c] = *r.coeffs.begin();
    if (c != 1 && c != -1) return std::nullopt;
    return SignedOuterAut{c == 1 ? 1 : -1, UnitModPK{a.group.n, u}};
}

/// Diagonal embedding of the Burnside ring: [G/C_{p^m}] |-> (m,0;m,0)_1,
/// extended additively to a coefficient vector indexed by subgroup exponents.
inline RingElement iota(const CyclicPGroup& g, const std::vector<Int>& b) {
    if (b.size() != static_cast<std::size_t>(g.n) + 1)
        throw std::invalid_argument("iota: expected n+1 coefficients");
    RingElement out(g);
    for (int m = 0; m <= g.n; ++m)
        add_term(out, Quintuple{m, 0, m, 0, 1}, b[static_cast<std::size_t>(m)]);
    return out;
}

/// Product in B(G) on the transitive basis: [G/A][G/B] = |G/AB| [G/(A^B)],
/// which on the chain reads p^(n-max(a,b)) [G/min(a,b)].
inline std::vector<Int> burnside_mul(const CyclicPGroup& g,
                                     const std::vector<Int>& a,
                                     const std::vector<Int>& b) {
    const auto sz = static_cast<std::size_t>(g.n) + 1;
    if (a.size() != sz || b.size() != sz)
        throw std::invalid_argument("burnside_mul: expected n+1 coefficients");
    std::vector<Int> out(sz, Int(0));
    for (int x = 0; x <= g.n; ++x)
        for (int y = 0; y <= g.n; ++y)
            out[static_cast<std::size_t>(std::min(x, y))] +=
                a[static_cast<std::size_t>(x)] * b[static_cast<std::size_t>(y)] *
                Int(pow_i64(g.p, g.n - std::max(x, y)));
    return out;
}

/// Ghost vector of marks: entry s counts fixed points of C_{p^s}, i.e.
/// mark_s([G/C_{p^h}]) = p^(n-h) if s <= h, else 0. Pointwise multiplicative.
inline std::vector<Int> burnside_marks(const CyclicPGroup& g,
                                       const std::vector<Int>& a) {
    const auto sz = static_cast<std::size_t>(g.n) + 1;
    if (a.size() != sz)
        throw std::invalid_argument("burnside_marks: expected n+1 coefficients");
    std::vector<Int> out(sz, Int(0));
    for (int s = 0; s <= g.n; ++s)
        for (int h = s; h <= g.n; ++h)
            out[static_cast<std::size_t>(s)] +=
                a[static_cast<std::size_t>(h)] * Int(pow_i64(g.p, g.n - h));
    return out;
}

/// Conjugation by Iso(f): a |-> eta(f) a eta(f^-1). Central for cyclic G, so
/// this is the identity map; implemented generically and verified in tests.
inline RingElement dbiso(const CyclicPGroup& g, const UnitModPK& f,
                         const RingElement& a) {
    const auto fu = make_unit(g, g.n, f.value);
    const auto finv = unit_inv(g, fu);
    return eta(g, 1, fu.value) * a * eta(g, 1, finv.value);
}

/// Generators Id - 2 j_N of the inflated-sign subgroup, one per subgroup.
/// Each is an orthogonal involution; together they generate an elementary
/// abelian 2-group of order 2^(n+1).
inline std::vector<RingElement> h_db_generators(const CyclicPGroup& g) {
    std::vector<RingElement> out;
    out.reserve(static_cast<std::size_t>(g.n) + 1);
    for (int m = 0; m <= g.n; ++m)
        out.push_back(identity(g) - (Int(2) * j_idem(g, m)));
    return out;
}

/// Membership in the ideal I_G = ker(rho): subquotient strictly smaller
/// than G. Note this includes quintuples with full projections but
/// nontrivial kernels, e.g. (n,N;n,N) for N >= 1.
inline bool in_ideal(const CyclicPGroup& g, const Quintuple& q) {
    return q.subquotient_exponent() < g.n;
}

/// Basis of I_G in canonical order.
inline std::vector<Quintuple> ideal_basis(const CyclicPGroup& g) {
    std::vector<Quintuple> out;
    for (const auto& q : enumerate_basis(g))
        if (in_ideal(g, q)) out.push_back(q);
    return out;
}

}  // namespace dburnside
