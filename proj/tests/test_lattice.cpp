#include <gtest/gtest.h>

#include "permgraph/lattice.hpp"
#include "permgraph/numtheory.hpp"

using namespace permgraph;
namespace nt = permgraph::numtheory;

namespace {

void expect_catalog_matches_oracle(const GroupSpec& s) {
    const auto g = build_group(s);
    const SubgroupLattice cat = enumerate_catalog(g);
    const SubgroupLattice orc = enumerate_bruteforce(g);
    const auto c = compare_lattices(cat, orc);
    EXPECT_TRUE(c.same_sets()) << s.name() << ": " << c.only_in_catalog << " catalog-only, " << c.only_in_oracle
                               << " oracle-only, " << c.catalog_duplicates << " duplicates";
    EXPECT_TRUE(c.same_normality()) << s.name();
    for (const auto& sub : cat.proper()) {
        EXPECT_TRUE(sub.label.has_value()) << s.name();
        EXPECT_EQ(sub.is_normal, is_normal(*g, sub.members)) << s.name();
    }
}

}  // namespace

TEST(Lattice, CatalogMatchesOracleDihedral) {
    for (unsigned n = 3; n <= 40; ++n) expect_catalog_matches_oracle(GroupSpec::dihedral(n));
}

TEST(Lattice, CatalogMatchesOracleQuaternion) {
    for (unsigned n = 2; n <= 20; ++n) expect_catalog_matches_oracle(GroupSpec::quaternion(n));
}

TEST(Lattice, CatalogMatchesOracleQuasiDihedral) {
    for (unsigned a = 4; a <= 7; ++a) expect_catalog_matches_oracle(GroupSpec::quasidihedral(a));
}

TEST(Lattice, CatalogMatchesOracleModular) {
    for (auto [p, a] : {std::pair{2U, 3U}, {2U, 4U}, {2U, 5U}, {2U, 6U}, {3U, 3U}, {3U, 4U}, {5U, 3U}})
        expect_catalog_matches_oracle(GroupSpec::modular(p, a));
}

TEST(Lattice, SizesByClosedForm) {
    for (unsigned n = 3; n <= 30; ++n)
        EXPECT_EQ(enumerate_catalog(GroupSpec::dihedral(n)).lattice_size(), nt::tau(n) + nt::sigma(n)) << n;
    for (unsigned n = 2; n <= 20; ++n)
        EXPECT_EQ(enumerate_catalog(GroupSpec::quaternion(n)).lattice_size(), nt::tau(2 * n) + nt::sigma(n)) << n;
    for (unsigned a = 4; a <= 7; ++a)
        EXPECT_EQ(enumerate_catalog(GroupSpec::quasidihedral(a)).lattice_size(), a + 3 * (1U << (a - 2)) - 1) << a;
    // the lattice of M_{p^alpha} matches Z_{p^(alpha-1)} x Z_p
    EXPECT_EQ(enumerate_catalog(GroupSpec::modular(3, 3)).lattice_size(), 10U);
    EXPECT_EQ(enumerate_catalog(GroupSpec::modular(2, 4)).lattice_size(), 11U);
}

TEST(Lattice, NormalCounts) {
    for (unsigned n = 3; n <= 30; ++n) {
        const auto want = n % 2 ? nt::tau(n) - 1 : nt::tau(n) + 1;
        EXPECT_EQ(enumerate_catalog(GroupSpec::dihedral(n)).normal_count(), want) << n;
    }
    for (unsigned n = 2; n <= 20; ++n) {
        const auto want = n % 2 ? nt::tau(2 * n) - 1 : nt::tau(2 * n) + 1;
        EXPECT_EQ(enumerate_catalog(GroupSpec::quaternion(n)).normal_count(), want) << n;
    }
    // Q_2: every subgroup normal
    EXPECT_EQ(enumerate_catalog(GroupSpec::quaternion(2)).non_normal_count(), 0U);
}

TEST(Lattice, ModularHasExactlyPNonNormal) {
    for (auto [p, a] : {std::pair{2U, 4U}, {2U, 5U}, {3U, 3U}, {3U, 4U}, {5U, 3U}}) {
        const auto lat = enumerate_catalog(GroupSpec::modular(p, a));
        EXPECT_EQ(lat.non_normal_count(), p) << p << "^" << a;
        for (const auto& s : lat.proper()) {
            if (!s.is_normal) {
                EXPECT_EQ(s.order(), p);
            }
        }
    }
}

TEST(Lattice, LabelsName) {
    const auto lat = enumerate_catalog(GroupSpec::dihedral(6));
    const auto g = lat.group_ptr();
    // H^1_1 = <b>
    const auto k = lat.find(CatalogLabel{SubgroupKind::Reflection, 1, 1});
    ASSERT_TRUE(k);
    EXPECT_EQ(lat[*k].elements, (std::vector<Element>{g->identity(), g->b()}));
    // H^3_2 = <a^2, b a>, order 6
    const auto h = lat.find(CatalogLabel{SubgroupKind::DihedralSub, 3, 2});
    ASSERT_TRUE(h);
    EXPECT_EQ(lat[*h].order(), 6U);
    EXPECT_TRUE(lat[*h].members.test(g->multiply(g->b(), g->a())));
    EXPECT_TRUE(lat[*h].is_normal);
    EXPECT_EQ(lat.find(lat[*h].members), h);
}

TEST(Lattice, DihedralCatalogCounts) {
    // one cyclic subgroup per divisor except 1, n/r conjugates per dihedral type
    const unsigned n = 12;
    const auto lat = enumerate_catalog(GroupSpec::dihedral(n));
    std::size_t cyclic = 0, dihedral = 0;
    for (const auto& s : lat.proper()) {
        if (s.label->kind == SubgroupKind::Cyclic) ++cyclic;
        if (s.label->dihedral_type()) ++dihedral;
    }
    EXPECT_EQ(cyclic, nt::tau(n) - 1);
    EXPECT_EQ(dihedral, nt::sigma(n) - 1);
}

TEST(Lattice, GenerateSubgroup) {
    const auto g = build_group(GroupSpec::dihedral(9));
    const std::vector<Element> gens{g->power(g->a(), 3)};
    EXPECT_EQ(generate_subgroup(*g, gens).count(), 3U);
    const std::vector<Element> both{g->a(), g->b()};
    EXPECT_EQ(generate_subgroup(*g, both).count(), 18U);
}
