#pragma once

/**
 * @file verify.hpp
 * @brief Self-contained property suites run by the `verify` command: the
 *        cocycle relation, the duality anti-involution, the idempotent
 *        calculus, unit inflation, the inflated-sign subgroup, and centrality
 *        of the outer-automorphism units.
 */

#include <random>

#include "solver.hpp"

namespace dburnside {

struct SuiteResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerificationReport {
    CyclicPGroup group;
    std::vector<SuiteResult> suites;
    std::vector<std::string> notes;

    bool all_passed() const {
        for (const auto& s : suites)
            if (!s.passed) return false;
        return true;
    }
};

namespace detail {

inline RingElement random_element(const CyclicPGroup& g,
                                  const std::vector<Quintuple>& basis,
                                  std::mt19937& rng) {
    std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    std::uniform_int_distribution<int> count(1, 4);
    RingElement out(g);
    const int terms = count(rng);
    for (int c = 0; c < terms; ++c)
        add_term(out, basis[pick(rng)], coeff(rng));
    return out;
}

}  // namespace detail

/// gamma(L,M) gamma(L*M,Q) = gamma(M,Q) gamma(L,M*Q) over all basis triples;
/// this is associativity of the twisted product.
inline SuiteResult verify_cocycle(const CyclicPGroup& g) {
    const auto basis = enumerate_basis(g);
    for (const auto& L : basis)
        for (const auto& M : basis) {
            const auto LM = star(g, L, M);
            for (const auto& Q : basis) {
                const auto MQ = star(g, M, Q);
                if (gamma(g, L, M) * gamma(g, LM, Q) !=
                    gamma(g, M, Q) * gamma(g, L, MQ))
                    return {"cocycle", false,
                            "violated at " + to_string(L) + ", " + to_string(M) +
                                ", " + to_string(Q)};
                if (!(star(g, star(g, L, M), Q) == star(g, L, star(g, M, Q))))
                    return {"cocycle", false, "star not associative"};
            }
        }
    return {"cocycle", true,
            std::to_string(basis.size() * basis.size() * basis.size()) +
                " basis triples"};
}

/// dual is an anti-involution: dual(dual(a)) = a, dual(ab) = dual(b) dual(a).
inline SuiteResult verify_anti_involution(const CyclicPGroup& g) {
    const auto basis = enumerate_basis(g);
    for (const auto& q : basis)
        if (!(opposite(g, opposite(g, q)) == q))
            return {"anti-involution", false,
                    "opposite not involutive at " + to_string(q)};
    std::mt19937 rng(20240001);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto a = detail::random_element(g, basis, rng);
        const auto b = detail::random_element(g, basis, rng);
        if (!(dual(dual(a)) == a))
            return {"anti-involution", false, "dual(dual(a)) != a"};
        if (!(dual(a * b) == dual(b) * dual(a)))
            return {"anti-involution", false, "dual(ab) != dual(b) dual(a)"};
    }
    return {"anti-involution", true, "basis involution + 1000 random pairs"};
}

/// {f_N} are orthogonal idempotents resolving the identity; j_N is the tail
/// sum of the family; the closed chain formula agrees with the Moebius sum.
inline SuiteResult verify_idempotents(const CyclicPGroup& g) {
    const RingElement id = identity(g);
    RingElement sum(g);
    for (int a = 0; a <= g.n; ++a) {
        const auto fa = f_idem(g, a);
        if (!(fa == f_idem_mobius_sum(g, a)))
            return {"idempotents", false, "closed form differs from Moebius sum"};
        sum = sum + fa;
        for (int b = 0; b <= g.n; ++b) {
            const auto prod = fa * f_idem(g, b);
            if (a == b && !(prod == fa))
                return {"idempotents", false, "f_N not idempotent"};
            if (a != b && !prod.is_zero())
                return {"idempotents", false, "f_N f_M != 0"};
        }
        RingElement tail(g);
        for (int b = a; b <= g.n; ++b) tail = tail + f_idem(g, b);
        if (!(tail == j_idem(g, a)))
            return {"idempotents", false, "j_N != sum of f_M for M >= N"};
        if (!(j_idem(g, a) * j_idem(g, a) == j_idem(g, a)))
            return {"idempotents", false, "j_N not idempotent"};
    }
    if (!(sum == id))
        return {"idempotents", false, "sum of f_N != Id"};
    return {"idempotents", true,
            std::to_string(g.n + 1) + " idempotents resolve the identity"};
}

/// dbinf sends -Id to Id - 2 j_N, is multiplicative on orthogonal units, and
/// composes along towers of quotients.
inline SuiteResult verify_dbinf(const CyclicPGroup& g) {
    for (int m = 0; m <= g.n; ++m) {
        const CyclicPGroup quotient(g.p, g.n - m);
        const auto minus_id = Int(-1) * identity(quotient);
        if (!(dbinf_unit(g, m, minus_id) == identity(g) - Int(2) * j_idem(g, m)))
            return {"dbinf", false, "dbinf(-Id) != Id - 2 j_N at N=" +
                                        std::to_string(m)};
        if (!(dbinf_unit(g, m, identity(quotient)) == identity(g)))
            return {"dbinf", false, "dbinf(Id) != Id"};
    }
    // tower law through an intermediate quotient
    for (int m1 = 0; m1 <= g.n; ++m1)
        for (int m2 = 0; m2 + m1 <= g.n; ++m2) {
            const CyclicPGroup mid(g.p, g.n - m1);
            const CyclicPGroup low(g.p, g.n - m1 - m2);
            const auto u = Int(-1) * identity(low);
            if (!(dbinf_unit(g, m1, dbinf_unit(mid, m2, u)) ==
                  dbinf_unit(g, m1 + m2, u)))
                return {"dbinf", false, "tower law fails"};
        }
    // rng morphism: multiplicative, additive, unit-free; injective on basis
    if (g.n >= 1) {
        const CyclicPGroup quotient(g.p, g.n - 1);
        const auto basis = enumerate_basis(quotient);
        std::mt19937 rng(20240002);
        for (int trial = 0; trial < 200; ++trial) {
            const auto a = detail::random_element(quotient, basis, rng);
            const auto b = detail::random_element(quotient, basis, rng);
            if (!(rng_embed(g, 1, a) * rng_embed(g, 1, b) ==
                  rng_embed(g, 1, a * b)))
                return {"dbinf", false, "rng embedding not multiplicative"};
            if (!(rng_embed(g, 1, a) + rng_embed(g, 1, b) ==
                  rng_embed(g, 1, a + b)))
                return {"dbinf", false, "rng embedding not additive"};
        }
        std::set<Quintuple> images;
        for (const auto& q : basis)
            if (!images.insert(lift_basis(g, 1, q)).second)
                return {"dbinf", false, "lift not injective on basis"};
        if (!(rng_embed(g, 1, identity(quotient)) == j_idem(g, 1)))
            return {"dbinf", false, "embedded identity is not j_1"};
    }
    return {"dbinf", true, "inflation maps verified"};
}

/// Closure of {Id - 2 j_N} is elementary abelian of order 2^(n+1) and meets
/// the bifree span exactly in {Id, -Id}.
inline SuiteResult verify_h_db(const CyclicPGroup& g) {
    const auto closure_set = closure(h_db_generators(g));
    const auto expected =
        static_cast<std::size_t>(1) << static_cast<unsigned>(g.n + 1);
    if (closure_set.size() != expected)
        return {"h_db", false,
                "order " + std::to_string(closure_set.size()) + ", expected " +
                    std::to_string(expected)};
    const RingElement id = identity(g);
    std::size_t bifree = 0;
    for (const auto& u : closure_set) {
        if (!(u * u == id))
            return {"h_db", false, "element does not square to Id"};
        if (!is_orthogonal_unit(u))
            return {"h_db", false, "element is not an orthogonal unit"};
        bool all_bifree = true;
        for (const auto& [q, c] : u.coeffs)
            if (!q.is_bifree()) all_bifree = false;
        if (all_bifree) {
            ++bifree;
            if (!(u == id) && !(u == Int(-1) * id))
                return {"h_db", false, "unexpected bifree element"};
        }
    }
    if (bifree != 2)
        return {"h_db", false, "bifree intersection is not {Id, -Id}"};
    return {"h_db", true,
            "order " + std::to_string(expected) + ", bifree meet = {Id, -Id}"};
}

/// Every eta-image commutes with every basis element.
inline SuiteResult verify_centrality(const CyclicPGroup& g) {
    const auto basis = enumerate_basis(g);
    for (int sign : {1, -1})
        for (const auto& u : units_mod(g, g.n)) {
            const auto e = eta(g, sign, u.value);
            for (const auto& q : basis) {
                const RingElement x(g, q);
                if (!(e * x == x * e))
                    return {"centrality", false,
                            "eta(" + std::to_string(sign) + "," +
                                std::to_string(u.value) + ") does not commute with " +
                                to_string(q)};
            }
        }
    return {"centrality", true, "im(eta) central against the full basis"};
}

/// Resolution notes for the two derivations the solver settles by
/// computation; both claims are re-verified before being reported.
inline SuiteResult verify_resolutions(std::vector<std::string>& notes) {
    // f_N summand: with the constant summand j_N the "Moebius sum" would be
    // (1 - 1) j_N = 0 for N < n and could not resolve the identity.
    const CyclicPGroup c9(3, 2);
    for (int m = 0; m <= c9.n; ++m) {
        RingElement wrong(c9);
        for (int big = m; big <= c9.n; ++big)
            wrong = wrong + (Int(mobius_chain(m, big)) * j_idem(c9, m));
        const bool equals_closed = wrong == f_idem(c9, m);
        if (m < c9.n && equals_closed)
            return {"resolutions", false,
                    "constant-summand variant unexpectedly matches"};
    }
    notes.push_back(
        "resolution: f_N = sum_{N<=M} mu(N,M) j_M with the summand indexed by "
        "the summation variable M; the constant-summand variant j_N collapses "
        "to 0 for N < n and cannot resolve the identity");

    // p = 3 rank-one quadruple: the solver derives a_z in {1,3} for the
    // branch a_w = 1, a_x = a_y = -1; enumeration accepts +3 and rejects -3.
    const CyclicPGroup c3(3, 1);
    auto alpha = [&](std::int64_t aw, std::int64_t ax, std::int64_t ay,
                     std::int64_t az) {
        RingElement a(c3);
        add_term(a, Quintuple{0, 0, 0, 0, 1}, aw);
        add_term(a, Quintuple{0, 0, 1, 1, 1}, ax);
        add_term(a, Quintuple{1, 1, 0, 0, 1}, ay);
        add_term(a, Quintuple{1, 1, 1, 1, 1}, az);
        return a;
    };
    if (!is_kernel_solution(alpha(1, -1, -1, 3)) ||
        is_kernel_solution(alpha(1, -1, -1, -3)))
        return {"resolutions", false, "p=3 quadruple resolution failed"};
    SearchConfig cfg;
    cfg.mode = SearchMode::oracle;
    const auto oracle = kernel_oracle(c3, cfg);
    if (oracle.solutions.size() != 4)
        return {"resolutions", false, "p=3 oracle count != 4"};
    notes.push_back(
        "resolution: the p = 3 kernel quadruple on (w,x,y,z) with a_w = 1 is "
        "(1,-1,-1,3); the sign variant (1,-1,-1,-3) fails the z-diagonal "
        "equation and is rejected by the box oracle");
    return {"resolutions", true, "both documented resolutions re-verified"};
}

/// Run all suites for one group.
inline VerificationReport run_verification(const CyclicPGroup& g) {
    VerificationReport report{g, {}, {}};
    report.suites.push_back(verify_cocycle(g));
    report.suites.push_back(verify_anti_involution(g));
    report.suites.push_back(verify_idempotents(g));
    report.suites.push_back(verify_dbinf(g));
    report.suites.push_back(verify_h_db(g));
    report.suites.push_back(verify_centrality(g));
    report.suites.push_back(verify_resolutions(report.notes));
    if (g.p == 2 && g.n > 1)
        report.notes.push_back(
            "unit classification for p = 2, n > 1 is exploratory "
            "(UNVERIFIED); `units` reports bounded search results only");
    return report;
}

}  // namespace dburnside
