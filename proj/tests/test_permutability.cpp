#include <gtest/gtest.h>

#include "permgraph/graph.hpp"
#include "permgraph/permutability.hpp"

using namespace permgraph;

namespace {

// Product of subgroups is a subgroup iff it is closed; checked by generating it.
bool permutes_by_generation(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
    std::vector<Element> gens = h.generators;
    gens.insert(gens.end(), k.generators.begin(), k.generators.end());
    const Bitset join = generate_subgroup(g, gens);
    return join.count() * h.members.intersection_count(k.members) == h.order() * k.order();
}

void expect_closed_form_agrees(const GroupSpec& s) {
    const auto lat = std::make_shared<const SubgroupLattice>(enumerate_catalog(s));
    const auto t = compute_permutability(lat, BuildOptions{true, true, false});
    EXPECT_EQ(t.diagnostics.closed_form_disagreements, 0U) << s.name() << " " << t.diagnostics.first_disagreement;
    EXPECT_EQ(t.diagnostics.closure_disagreements, 0U) << s.name();
    EXPECT_EQ(t.diagnostics.normality_disagreements, 0U) << s.name();
    EXPECT_EQ(t.diagnostics.closed_form_checked, t.diagnostics.pairs) << s.name();
}

}  // namespace

TEST(Permutability, ThreeOraclesAgreeOnSmallGroups) {
    for (const auto& s : {GroupSpec::dihedral(12), GroupSpec::quaternion(6), GroupSpec::quasidihedral(5),
                          GroupSpec::modular(3, 3)}) {
        const auto lat = enumerate_catalog(s);
        const auto& g = lat.group();
        for (std::size_t u = 0; u < lat.proper_count(); ++u) {
            for (std::size_t v = 0; v < lat.proper_count(); ++v) {
                const bool a = permutes_bruteforce(g, lat[u], lat[v]);
                ASSERT_EQ(a, permutes_by_closure(g, lat[u], lat[v])) << s.name();
                ASSERT_EQ(a, permutes_by_generation(g, lat[u], lat[v])) << s.name();
            }
        }
    }
}

TEST(Permutability, ClosedFormDihedral) {
    for (unsigned n = 3; n <= 30; ++n) expect_closed_form_agrees(GroupSpec::dihedral(n));
}

TEST(Permutability, ClosedFormQuaternion) {
    for (unsigned n = 2; n <= 16; ++n) expect_closed_form_agrees(GroupSpec::quaternion(n));
}

TEST(Permutability, ClosedFormQuasiDihedralAndModular) {
    for (unsigned a = 4; a <= 7; ++a) expect_closed_form_agrees(GroupSpec::quasidihedral(a));
    for (auto [p, a] : {std::pair{2U, 3U}, {2U, 4U}, {3U, 3U}, {3U, 4U}, {5U, 3U}})
        expect_closed_form_agrees(GroupSpec::modular(p, a));
}

TEST(Permutability, DihedralCriterionExamples) {
    // n / lcm(r, s) | 2(i - j)
    EXPECT_TRUE(permutes_dihedral_closedform(6, {1, 1}, {1, 4}));
    EXPECT_FALSE(permutes_dihedral_closedform(6, {1, 1}, {1, 2}));
    EXPECT_TRUE(permutes_dihedral_closedform(15, {3, 1}, {5, 2}));
    EXPECT_FALSE(permutes_dihedral_closedform(15, {1, 1}, {1, 2}));
    EXPECT_TRUE(permutes_dihedral_closedform(9, {3, 1}, {1, 1}));
    EXPECT_TRUE(permutes_dihedral_closedform(8, {4, 0}, {1, 3}));
}

TEST(Permutability, QuaternionExamples) {
    const auto lat = enumerate_catalog(GroupSpec::quaternion(3));
    const auto& g = lat.group();
    const auto h1 = lat.find(CatalogLabel{SubgroupKind::CyclicFour, 1, 1});
    const auto h2 = lat.find(CatalogLabel{SubgroupKind::CyclicFour, 1, 2});
    ASSERT_TRUE(h1 && h2);
    EXPECT_FALSE(permutes_bruteforce(g, lat[*h1], lat[*h2]));
    EXPECT_FALSE(permutes_quaternion_closedform(3, {1, 1}, {1, 2}));

    const auto lat4 = enumerate_catalog(GroupSpec::quaternion(4));
    const auto k1 = lat4.find(CatalogLabel{SubgroupKind::CyclicFour, 1, 1});
    const auto k3 = lat4.find(CatalogLabel{SubgroupKind::CyclicFour, 1, 3});
    ASSERT_TRUE(k1 && k3);
    EXPECT_TRUE(permutes_bruteforce(lat4.group(), lat4[*k1], lat4[*k3]));
    EXPECT_TRUE(permutes_quaternion_closedform(4, {1, 1}, {1, 3}));
}

TEST(Permutability, QuaternionImageIndex) {
    // a^i b maps to b a^(-i), so H_{i,r} lands on H^r_{((-i) mod n/r) + 1}
    EXPECT_EQ(quaternion_image_index(6, {1, 1}).i, 6U);
    EXPECT_EQ(quaternion_image_index(6, {1, 6}).i, 1U);
    EXPECT_EQ(quaternion_image_index(6, {2, 1}).i, 3U);
    EXPECT_EQ(quaternion_image_index(6, {3, 0}).i, 0U);
}

TEST(Permutability, IndexValidation) {
    EXPECT_THROW(permutes_dihedral_closedform(6, {4, 1}, {1, 1}), std::invalid_argument);
    EXPECT_THROW(permutes_dihedral_closedform(6, {2, 4}, {1, 1}), std::invalid_argument);
}

TEST(Permutability, NormalSubgroupsPermuteWithEverything) {
    const auto lat = enumerate_catalog(GroupSpec::dihedral(20));
    const auto& g = lat.group();
    for (std::size_t u = 0; u < lat.proper_count(); ++u) {
        if (!lat[u].is_normal) continue;
        for (std::size_t v = 0; v < lat.proper_count(); ++v) ASSERT_TRUE(permutes_bruteforce(g, lat[u], lat[v]));
    }
}

TEST(Permutability, ClosedFormCheckIsOptional) {
    const auto lat = std::make_shared<const SubgroupLattice>(enumerate_catalog(GroupSpec::quaternion(5)));
    EXPECT_NO_THROW(compute_permutability(lat, BuildOptions{true, true, true}));
    const auto t = compute_permutability(lat, BuildOptions{false, false, true});
    EXPECT_EQ(t.diagnostics.closed_form_checked, 0U);
}
