#include <gtest/gtest.h>

#include <dburnside/cyclic_group.hpp>

using namespace dburnside;

TEST(CyclicGroup, ConstructionValidatesPrimality) {
    EXPECT_NO_THROW(CyclicPGroup(2, 0));
    EXPECT_NO_THROW(CyclicPGroup(7, 3));
    EXPECT_NO_THROW(CyclicPGroup(2147483647, 1));  // 2^31 - 1 is prime
    EXPECT_THROW(CyclicPGroup(4, 1), std::invalid_argument);
    EXPECT_THROW(CyclicPGroup(1, 1), std::invalid_argument);
    EXPECT_THROW(CyclicPGroup(0, 1), std::invalid_argument);
    EXPECT_THROW(CyclicPGroup(9, 2), std::invalid_argument);
    EXPECT_THROW(CyclicPGroup(3, -1), std::invalid_argument);
}

TEST(CyclicGroup, Order) {
    EXPECT_EQ(CyclicPGroup(3, 0).order(), 1);
    EXPECT_EQ(CyclicPGroup(3, 2).order(), 9);
    EXPECT_EQ(CyclicPGroup(2, 10).order(), 1024);
}

TEST(CyclicGroup, SubgroupExponents) {
    EXPECT_EQ(subgroup_exponents(CyclicPGroup(3, 0)),
              (std::vector<SubgroupIndex>{0}));
    EXPECT_EQ(subgroup_exponents(CyclicPGroup(3, 2)),
              (std::vector<SubgroupIndex>{0, 1, 2}));
    EXPECT_EQ(subgroup_exponents(CyclicPGroup(2, 1)),
              (std::vector<SubgroupIndex>{0, 1}));
}

namespace {

// Defining recursion of the Moebius function on the chain poset:
// mu(a,a) = 1 and sum_{a <= c <= b} mu(a,c) = 0 for a < b.
int mobius_by_recursion(int a, int b) {
    if (a == b) return 1;
    int sum = 0;
    for (int c = a; c < b; ++c) sum += mobius_by_recursion(a, c);
    return -sum;
}

}  // namespace

TEST(CyclicGroup, MobiusChainMatchesDefiningRecursion) {
    EXPECT_EQ(mobius_chain(1, 1), 1);
    EXPECT_EQ(mobius_chain(1, 2), -1);
    EXPECT_EQ(mobius_chain(0, 2), mobius_by_recursion(0, 2));
    EXPECT_EQ(mobius_chain(0, 2), 0);
    for (int a = 0; a <= 6; ++a)
        for (int b = a; b <= 6; ++b)
            EXPECT_EQ(mobius_chain(a, b), mobius_by_recursion(a, b));
    EXPECT_THROW(mobius_chain(2, 1), std::invalid_argument);
}

TEST(CyclicGroup, MobiusInversionIdentity) {
    // sum over the interval [a,b] of mu(a,c) is the delta function
    for (int a = 0; a <= 5; ++a)
        for (int b = a; b <= 5; ++b) {
            int sum = 0;
            for (int c = a; c <= b; ++c) sum += mobius_chain(a, c);
            EXPECT_EQ(sum, a == b ? 1 : 0);
        }
}

TEST(Units, UnitsModExamples) {
    const CyclicPGroup c9(3, 2);
    auto values = [](const std::vector<UnitModPK>& units) {
        std::vector<std::int64_t> out;
        for (const auto& u : units) out.push_back(u.value);
        return out;
    };
    EXPECT_EQ(values(units_mod(c9, 1)), (std::vector<std::int64_t>{1, 2}));
    EXPECT_EQ(values(units_mod(c9, 2)),
              (std::vector<std::int64_t>{1, 2, 4, 5, 7, 8}));
    EXPECT_EQ(values(units_mod(CyclicPGroup(5, 1), 0)),
              (std::vector<std::int64_t>{1}));
    EXPECT_THROW(units_mod(c9, -1), std::invalid_argument);
    EXPECT_THROW(units_mod(c9, 3), std::invalid_argument);
}

TEST(Units, MulInvExamples) {
    const CyclicPGroup c9(3, 2);
    const CyclicPGroup c3(3, 1);
    EXPECT_EQ(unit_mul(c9, UnitModPK{2, 2}, UnitModPK{2, 5}).value, 1);
    EXPECT_EQ(unit_inv(c3, UnitModPK{1, 2}).value, 2);
    EXPECT_EQ(unit_mul(c9, UnitModPK{2, 4}, UnitModPK{2, 7}).value, 1);
    EXPECT_THROW(unit_mul(c9, UnitModPK{2, 2}, UnitModPK{1, 2}),
                 std::invalid_argument);
}

TEST(Units, GroupClosureAndOrder) {
    for (std::int64_t p : {2, 3, 5}) {
        const CyclicPGroup g(p, 3);
        for (int t = 0; t <= 3; ++t) {
            const auto units = units_mod(g, t);
            const auto expected = t == 0 ? 1 : pow_i64(p, t) - pow_i64(p, t - 1);
            EXPECT_EQ(static_cast<std::int64_t>(units.size()), expected);
            for (const auto& a : units) {
                const auto inv = unit_inv(g, a);
                EXPECT_EQ(unit_mul(g, a, inv).value, t == 0 ? 1 : 1);
                for (const auto& b : units) {
                    const auto prod = unit_mul(g, a, b);
                    EXPECT_TRUE(prod.value % p != 0 || t == 0);
                    EXPECT_EQ(prod.modulus_exponent, t);
                }
            }
        }
    }
}

TEST(Units, ReductionIsSurjectiveHomomorphism) {
    const CyclicPGroup g(3, 3);
    for (int t = 0; t <= 3; ++t)
        for (int s = 0; s <= t; ++s) {
            const auto big = units_mod(g, t);
            std::set<std::int64_t> image;
            for (const auto& a : big) {
                image.insert(reduce_unit(g, a, s).value);
                for (const auto& b : big)
                    EXPECT_EQ(reduce_unit(g, unit_mul(g, a, b), s),
                              unit_mul(g, reduce_unit(g, a, s),
                                       reduce_unit(g, b, s)));
            }
            EXPECT_EQ(image.size(), units_mod(g, s).size());
        }
}

TEST(Units, MakeUnitRejectsNonUnits) {
    const CyclicPGroup c9(3, 2);
    EXPECT_THROW(make_unit(c9, 2, 3), std::invalid_argument);
    EXPECT_THROW(make_unit(c9, 2, 0), std::invalid_argument);
    EXPECT_EQ(make_unit(c9, 2, -1).value, 8);
    EXPECT_EQ(make_unit(c9, 0, 42).value, 1);
}
