#include <gtest/gtest.h>

#include <array>

#include <dburnside/solver.hpp>

using namespace dburnside;

namespace {

RingElement quad_alpha(const CyclicPGroup& g, std::int64_t aw, std::int64_t ax,
                       std::int64_t ay, std::int64_t az) {
    RingElement alpha(g);
    add_term(alpha, Quintuple{0, 0, 0, 0, 1}, aw);
    add_term(alpha, Quintuple{0, 0, 1, 1, 1}, ax);
    add_term(alpha, Quintuple{1, 1, 0, 0, 1}, ay);
    add_term(alpha, Quintuple{1, 1, 1, 1, 1}, az);
    return alpha;
}

std::set<std::array<std::int64_t, 4>> as_quadruples(
    const KernelSearchResult& r) {
    std::set<std::array<std::int64_t, 4>> out;
    for (const auto& a : r.solutions) {
        const CyclicPGroup& g = a.group;
        out.insert({static_cast<std::int64_t>(a.coeff(Quintuple{0, 0, 0, 0, 1})),
                    static_cast<std::int64_t>(a.coeff(Quintuple{0, 0, 1, 1, 1})),
                    static_cast<std::int64_t>(a.coeff(Quintuple{1, 1, 0, 0, 1})),
                    static_cast<std::int64_t>(a.coeff(Quintuple{1, 1, 1, 1, 1}))});
        (void)g;
    }
    return out;
}

}  // namespace

TEST(OrthogonalUnit, Examples) {
    const CyclicPGroup g(3, 2);
    EXPECT_TRUE(is_orthogonal_unit(identity(g)));
    EXPECT_TRUE(is_orthogonal_unit(Int(-1) * identity(g)));
    for (int m = 0; m <= g.n; ++m)
        EXPECT_TRUE(is_orthogonal_unit(identity(g) - Int(2) * j_idem(g, m)));
    EXPECT_FALSE(is_orthogonal_unit(Int(2) * identity(g)));
}

TEST(KernelOracle, CpKernelCounts) {
    SearchConfig cfg;
    cfg.mode = SearchMode::oracle;
    const std::map<std::int64_t, std::size_t> expected{
        {2, 8}, {3, 4}, {5, 2}, {7, 2}};
    for (const auto& [p, count] : expected) {
        const auto result = kernel_oracle(CyclicPGroup(p, 1), cfg);
        EXPECT_TRUE(result.complete);
        EXPECT_FALSE(result.budget_exceeded);
        EXPECT_EQ(result.solutions.size(), count) << "p = " << p;
        for (const auto& alpha : result.solutions) {
            EXPECT_TRUE(is_kernel_solution(alpha));
            EXPECT_TRUE(
                is_orthogonal_unit(identity(alpha.group) - alpha));
        }
    }
}

TEST(KernelOracle, P2SetMatchesTheEightQuadruples) {
    SearchConfig cfg;
    cfg.mode = SearchMode::oracle;
    const auto result = kernel_oracle(CyclicPGroup(2, 1), cfg);
    const std::set<std::array<std::int64_t, 4>> expected{
        {0, 0, 0, 0}, {0, 0, 0, 2},  {2, -2, -2, 2}, {2, -2, -2, 4},
        {1, 0, 0, 0}, {1, -2, 0, 2}, {1, 0, -2, 2},  {1, -2, -2, 4}};
    EXPECT_EQ(as_quadruples(result), expected);
}

TEST(KernelOracle, SelfDualCounts) {
    SearchConfig cfg;
    cfg.mode = SearchMode::oracle;
    const std::map<std::int64_t, std::size_t> expected{{2, 6}, {3, 4}, {5, 2}};
    for (const auto& [p, count] : expected) {
        const auto result = kernel_oracle(CyclicPGroup(p, 1), cfg);
        std::size_t self_dual = 0;
        for (const auto& alpha : result.solutions) {
            if (dual(alpha) == alpha) ++self_dual;
            // solution sets are closed under duality
            EXPECT_TRUE(std::count(result.solutions.begin(),
                                   result.solutions.end(), dual(alpha)) == 1);
        }
        EXPECT_EQ(self_dual, count);
    }
}

TEST(KernelOracle, BudgetExceededIsDistinctFromNoSolutions) {
    SearchConfig cfg;
    cfg.mode = SearchMode::oracle;
    cfg.time_budget_seconds = 1e-9;
    const auto result = kernel_oracle(CyclicPGroup(5, 1), cfg);
    EXPECT_TRUE(result.budget_exceeded);
    EXPECT_FALSE(result.complete);
}

TEST(KernelPruned, AgreesWithOracle) {
    for (std::int64_t p : {2, 3, 5, 7}) {
        const CyclicPGroup g(p, 1);
        SearchConfig cfg;
        const auto pruned = kernel_pruned(g, cfg);
        cfg.mode = SearchMode::oracle;
        const auto oracle = kernel_oracle(g, cfg);
        EXPECT_TRUE(pruned.complete);
        EXPECT_EQ(pruned.solutions, oracle.solutions) << "p = " << p;
    }
}

TEST(KernelPruned, P3ResolvesThePlusThreeQuadruple) {
    const CyclicPGroup c3(3, 1);
    const auto result = kernel_pruned(c3, SearchConfig{});
    const std::set<std::array<std::int64_t, 4>> expected{
        {0, 0, 0, 0}, {0, 0, 0, 2}, {1, -1, -1, 1}, {1, -1, -1, 3}};
    EXPECT_EQ(as_quadruples(result), expected);
    EXPECT_FALSE(is_kernel_solution(quad_alpha(c3, 1, -1, -1, -3)));
}

TEST(KernelPruned, TrivialGroup) {
    const auto result = kernel_pruned(CyclicPGroup(5, 0), SearchConfig{});
    EXPECT_TRUE(result.complete);
    ASSERT_EQ(result.solutions.size(), 1u);
    EXPECT_TRUE(result.solutions.front().is_zero());
}

TEST(KernelPruned, C9SupportLiesInLiftedBasis) {
    const CyclicPGroup c9(3, 2);
    const auto result = kernel_pruned(c9, SearchConfig{});
    EXPECT_TRUE(result.complete);
    EXPECT_TRUE(result.support_in_lifted_basis);
    EXPECT_EQ(result.solutions.size(), 16u);
    for (const auto& alpha : result.solutions) {
        EXPECT_TRUE(is_kernel_solution(alpha));
        for (const auto& [q, c] : alpha.coeffs) {
            EXPECT_GE(q.j, 1);
            EXPECT_GE(q.l, 1);
        }
    }
    EXPECT_FALSE(result.notes.empty());
}

TEST(KernelPruned, C25KernelIsLiftedFromC5) {
    const auto result = kernel_pruned(CyclicPGroup(5, 2), SearchConfig{});
    EXPECT_TRUE(result.complete);
    EXPECT_TRUE(result.support_in_lifted_basis);
    // |ker| = |B_o(C_5, C_5)| = 16
    EXPECT_EQ(result.solutions.size(), 16u);
}

TEST(UnitGroup, CpUnitGroupOrders) {
    SearchConfig cfg;
    const std::map<std::int64_t, std::size_t> expected{
        {2, 16}, {3, 16}, {5, 16}, {7, 24}};
    for (const auto& [p, order] : expected) {
        const auto report = orthogonal_unit_group(CyclicPGroup(p, 1), cfg);
        EXPECT_EQ(report.elements.size(), order) << "p = " << p;
        EXPECT_TRUE(report.verified);
        EXPECT_TRUE(report.direct_product_verified);
        ASSERT_TRUE(report.match.has_value());
        EXPECT_TRUE(*report.match);
    }
}

TEST(UnitGroup, TrivialGroup) {
    const auto report =
        orthogonal_unit_group(CyclicPGroup(2, 0), SearchConfig{});
    EXPECT_EQ(report.elements.size(), 2u);
    ASSERT_TRUE(report.fingerprint.has_value());
    EXPECT_EQ(report.fingerprint->order, 2);
    ASSERT_TRUE(report.match.has_value());
    EXPECT_TRUE(*report.match);
}

TEST(UnitGroup, C2KernelIsDihedral) {
    const auto report =
        orthogonal_unit_group(CyclicPGroup(2, 1), SearchConfig{});
    EXPECT_EQ(report.elements.size(), 16u);
    ASSERT_TRUE(report.fingerprint.has_value());
    EXPECT_FALSE(report.fingerprint->is_abelian);
    // the kernel subgroup alone is D_8
    std::vector<RingElement> kernel_units;
    const RingElement id = identity(report.group);
    for (const auto& alpha : report.kernel.solutions)
        kernel_units.push_back(id - alpha);
    const auto fp = fingerprint(kernel_units);
    EXPECT_TRUE(match_structure(fp, StructureDescriptor{{}, 1}));
    EXPECT_EQ(fp.center_order, 2);
    EXPECT_EQ(fp.order_statistics,
              (std::map<std::int64_t, std::int64_t>{{1, 1}, {2, 5}, {4, 2}}));
}

TEST(UnitGroup, ExploratoryModeForC4) {
    SearchConfig cfg;
    cfg.time_budget_seconds = 10;
    const auto report = orthogonal_unit_group(CyclicPGroup(2, 2), cfg);
    EXPECT_FALSE(report.verified);
    EXPECT_FALSE(report.claimed.has_value());
    bool flagged = false;
    for (const auto& note : report.notes)
        if (note.find("UNVERIFIED") != std::string::npos) flagged = true;
    EXPECT_TRUE(flagged);
    // whatever was found is genuinely a set of orthogonal units
    for (const auto& u : report.elements) EXPECT_TRUE(is_orthogonal_unit(u));
}

TEST(UnitGroup, EtaImageIsCentral) {
    const CyclicPGroup g(3, 2);
    for (int sign : {1, -1})
        for (const auto& u : units_mod(g, g.n)) {
            const auto e = eta(g, sign, u.value);
            for (const auto& q : enumerate_basis(g)) {
                const RingElement x(g, q);
                EXPECT_EQ(e * x, x * e);
            }
        }
}
