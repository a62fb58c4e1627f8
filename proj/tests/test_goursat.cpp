#include <gtest/gtest.h>

#include <dburnside/goursat.hpp>

#include "support/explicit_bisets.hpp"

using namespace dburnside;

namespace {

Quintuple q5(const CyclicPGroup& g, int i, int j, int k, int l,
             std::int64_t u = 1) {
    return make_quintuple(g, i, j, k, l, u);
}

}  // namespace

TEST(Basis, Counts) {
    for (std::int64_t p : {2, 3, 5})
        EXPECT_EQ(enumerate_basis(CyclicPGroup(p, 1)).size(),
                  static_cast<std::size_t>(p + 3));
    EXPECT_EQ(enumerate_basis(CyclicPGroup(3, 2)).size(), 23u);
    EXPECT_EQ(enumerate_basis(CyclicPGroup(2, 0)).size(), 1u);
    EXPECT_EQ(enumerate_basis(CyclicPGroup(2, 0)).front(),
              (Quintuple{0, 0, 0, 0, 1}));
}

TEST(Basis, CanonicalOrderIsSortedAndUnique) {
    const CyclicPGroup g(3, 2);
    const auto basis = enumerate_basis(g);
    for (std::size_t c = 1; c < basis.size(); ++c) {
        EXPECT_TRUE(basis[c - 1] < basis[c]);
        EXPECT_FALSE(basis[c] < basis[c - 1]);
    }
}

// The library basis must list exactly the subgroups of G x G: compare with
// the explicit element-set enumeration, Goursat-encoded.
TEST(Basis, MatchesExplicitSubgroupEnumeration) {
    for (const auto& [p, n] : std::vector<std::pair<std::int64_t, int>>{
             {2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}, {2, 3}}) {
        const CyclicPGroup g(p, n);
        const auto subs = explicit_bisets::all_subgroups(static_cast<int>(g.order()));
        std::set<Quintuple> encoded;
        for (const auto& L : subs) encoded.insert(explicit_bisets::encode(L, g));
        const auto basis = enumerate_basis(g);
        EXPECT_EQ(encoded.size(), subs.size());
        EXPECT_EQ(std::set<Quintuple>(basis.begin(), basis.end()), encoded);
    }
}

// star, gamma, and opposite agree with the explicit relation model on every
// pair of subgroups; this pins the Butterfly conventions.
TEST(StarGamma, MatchExplicitModelOnAllPairs) {
    for (const auto& [p, n] : std::vector<std::pair<std::int64_t, int>>{
             {2, 1}, {3, 1}, {5, 1}, {2, 2}, {3, 2}, {2, 3}}) {
        const CyclicPGroup g(p, n);
        const int m = static_cast<int>(g.order());
        const auto basis = enumerate_basis(g);
        std::map<Quintuple, explicit_bisets::Subgroup> sets;
        for (const auto& q : basis) {
            sets[q] = explicit_bisets::decode(q, g);
            EXPECT_EQ(explicit_bisets::encode(sets[q], g), q);
            EXPECT_EQ(explicit_bisets::encode(
                          explicit_bisets::opposite(sets[q]), g),
                      opposite(g, q));
        }
        for (const auto& L : basis)
            for (const auto& M : basis) {
                const auto expected = explicit_bisets::encode(
                    explicit_bisets::star(sets[L], sets[M]), g);
                EXPECT_EQ(star(g, L, M), expected)
                    << to_string(L) << " * " << to_string(M);
                EXPECT_EQ(gamma(g, L, M),
                          explicit_bisets::gamma(sets[L], sets[M], m));
            }
    }
}

TEST(Opposite, Examples) {
    const CyclicPGroup c3(3, 1);
    EXPECT_EQ(opposite(c3, q5(c3, 1, 1, 0, 0)), q5(c3, 0, 0, 1, 1));  // y -> x
    EXPECT_EQ(opposite(c3, q5(c3, 1, 0, 1, 0)), q5(c3, 1, 0, 1, 0));
    const CyclicPGroup c9(3, 2);
    EXPECT_EQ(opposite(c9, q5(c9, 2, 0, 2, 0, 2)), q5(c9, 2, 0, 2, 0, 5));
}

TEST(Opposite, InvolutionAndAntiHomomorphism) {
    const CyclicPGroup g(3, 2);
    const auto basis = enumerate_basis(g);
    for (const auto& q : basis) EXPECT_EQ(opposite(g, opposite(g, q)), q);
    for (const auto& L : basis)
        for (const auto& M : basis)
            EXPECT_EQ(opposite(g, star(g, L, M)),
                      star(g, opposite(g, M), opposite(g, L)));
}

TEST(Star, SubgroupCompositionExamples) {
    const CyclicPGroup c3(3, 1);
    const auto x = q5(c3, 0, 0, 1, 1), z = q5(c3, 1, 1, 1, 1);
    EXPECT_EQ(star(c3, x, z), x);  // x*z = x at the subgroup level
}

TEST(Star, DiagonalAutomorphismActsOnTheResidue) {
    const CyclicPGroup g(3, 2);
    for (const auto& phi : units_mod(g, g.n)) {
        const Quintuple delta{g.n, 0, g.n, 0, phi.value};
        for (const auto& L : enumerate_basis(g)) {
            const auto prod = star(g, delta, L);
            EXPECT_EQ(prod.i, L.i);
            EXPECT_EQ(prod.j, L.j);
            EXPECT_EQ(prod.k, L.k);
            EXPECT_EQ(prod.l, L.l);
            const int t = L.subquotient_exponent();
            const auto expected =
                unit_mul(g, reduce_unit(g, UnitModPK{g.n, phi.value}, t),
                         UnitModPK{t, L.u});
            EXPECT_EQ(prod.u, expected.value);
        }
    }
}

TEST(Star, AssociativeOverFullBasis) {
    const CyclicPGroup g(3, 2);
    const auto basis = enumerate_basis(g);
    for (const auto& a : basis)
        for (const auto& b : basis) {
            const auto ab = star(g, a, b);
            for (const auto& c : basis)
                EXPECT_EQ(star(g, ab, c), star(g, a, star(g, b, c)));
        }
}

TEST(Star, IdentityIsNeutral) {
    const CyclicPGroup g(2, 3);
    const Quintuple id{g.n, 0, g.n, 0, 1};
    for (const auto& q : enumerate_basis(g)) {
        EXPECT_EQ(star(g, q, id), q);
        EXPECT_EQ(star(g, id, q), q);
    }
}

TEST(Star, BifreeClosure) {
    const CyclicPGroup g(3, 2);
    for (const auto& a : enumerate_basis(g))
        for (const auto& b : enumerate_basis(g))
            if (a.is_bifree() && b.is_bifree())
                EXPECT_TRUE(star(g, a, b).is_bifree());
}

TEST(Gamma, Examples) {
    const CyclicPGroup c5(5, 1);
    const auto w = q5(c5, 0, 0, 0, 0), z = q5(c5, 1, 1, 1, 1);
    EXPECT_EQ(gamma(c5, w, w), 5);
    EXPECT_EQ(gamma(c5, z, w), 1);
    const CyclicPGroup c9(3, 2);
    const Quintuple id{2, 0, 2, 0, 1};
    for (const auto& q : enumerate_basis(c9)) {
        EXPECT_EQ(gamma(c9, id, q), 1);
        EXPECT_EQ(gamma(c9, q, id), 1);
    }
}

TEST(Gamma, CocycleRelation) {
    for (const auto& [p, n] :
         std::vector<std::pair<std::int64_t, int>>{{2, 1}, {3, 1}, {2, 2}, {3, 2}}) {
        const CyclicPGroup g(p, n);
        const auto basis = enumerate_basis(g);
        for (const auto& L : basis)
            for (const auto& M : basis) {
                const auto LM = star(g, L, M);
                for (const auto& Q : basis)
                    EXPECT_EQ(gamma(g, L, M) * gamma(g, LM, Q),
                              gamma(g, M, Q) * gamma(g, L, star(g, M, Q)));
            }
    }
}

TEST(MakeQuintuple, Validation) {
    const CyclicPGroup g(3, 2);
    EXPECT_THROW(q5(g, 2, 0, 1, 0), std::invalid_argument);  // unequal orders
    EXPECT_THROW(q5(g, 3, 0, 3, 0), std::invalid_argument);  // out of range
    EXPECT_THROW(q5(g, 1, 2, 1, 2), std::invalid_argument);  // j > i
    EXPECT_THROW(q5(g, 2, 0, 2, 0, 3), std::invalid_argument);  // not a unit
    EXPECT_EQ(q5(g, 2, 0, 2, 0, 11).u, 2);  // residue reduced mod 9
    EXPECT_EQ(q5(g, 1, 1, 2, 2, 7).u, 1);   // trivial subquotient forces u = 1
}

TEST(Quintuple, TextForm) {
    const CyclicPGroup g(3, 2);
    EXPECT_EQ(to_string(q5(g, 2, 0, 2, 0, 5)), "(2,0;2,0)_5");
    EXPECT_EQ(to_string(q5(g, 0, 0, 0, 0)), "(0,0;0,0)_1");
}

TEST(Quintuple, SectionAccessors) {
    const CyclicPGroup g(3, 2);
    const auto q = q5(g, 2, 1, 1, 0, 2);
    EXPECT_EQ(q.left_section(), (Section{2, 1}));
    EXPECT_EQ(q.right_section(), (Section{1, 0}));
    EXPECT_EQ(q.subquotient_exponent(), 1);
    EXPECT_FALSE(q.is_bifree());
    EXPECT_TRUE(q5(g, 2, 0, 2, 0, 1).is_bifree());
}
