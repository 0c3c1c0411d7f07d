#include <gtest/gtest.h>

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

#include "permgraph/invariants.hpp"

using namespace permgraph;

namespace {

Graph from_edges(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

Graph cycle(std::size_t n) {
    Graph g(n);
    for (std::size_t v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph petersen() {
    Graph g(10);
    for (std::size_t v = 0; v < 5; ++v) {
        g.add_edge(v, (v + 1) % 5);
        g.add_edge(v, v + 5);
        g.add_edge(v + 5, (v + 2) % 5 + 5);
    }
    return g;
}

Graph random_graph(std::size_t n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

// ---- exhaustive oracles over vertex subsets ----

std::vector<std::size_t> members(std::uint32_t mask) {
    std::vector<std::size_t> s;
    for (std::size_t v = 0; v < 32; ++v)
        if (mask >> v & 1U) s.push_back(v);
    return s;
}

std::size_t brute_best(const Graph& g, bool maximise, const std::function<bool(const std::vector<std::size_t>&)>& ok) {
    const std::size_t n = g.vertex_count();
    std::size_t best = maximise ? 0 : n;
    for (std::uint32_t m = 0; m < (1U << n); ++m) {
        const auto s = members(m);
        if (ok(s)) best = maximise ? std::max(best, s.size()) : std::min(best, s.size());
    }
    return best;
}

std::size_t brute_chromatic(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return 0;
    for (std::size_t k = 1; k <= n; ++k) {
        std::vector<std::size_t> c(n, 0);
        while (true) {
            if (is_proper_coloring(g, c)) return k;
            std::size_t i = 0;
            while (i < n && ++c[i] == k) c[i++] = 0;
            if (i == n) break;
        }
    }
    return n;
}

bool brute_hamiltonian(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 3) return false;
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        if (is_hamiltonian_cycle(g, p)) return true;
    } while (std::next_permutation(p.begin() + 1, p.end()));
    return false;
}

bool brute_split(const Graph& g) {
    const std::size_t n = g.vertex_count();
    for (std::uint32_t m = 0; m < (1U << n); ++m) {
        const auto k = members(m);
        std::vector<std::size_t> rest;
        for (std::size_t v = 0; v < n; ++v)
            if (!(m >> v & 1U)) rest.push_back(v);
        if (is_clique(g, k) && is_independent(g, rest)) return true;
    }
    return false;
}

}  // namespace

TEST(Invariants, Petersen) {
    const Graph g = petersen();
    EXPECT_EQ(g.edge_count(), 15U);
    const auto r = compute_invariants(g);
    EXPECT_EQ(r.independence.value, 4U);
    EXPECT_EQ(r.clique.value, 2U);
    EXPECT_EQ(r.chromatic.value, 3U);
    EXPECT_EQ(r.domination.value, 3U);
    EXPECT_EQ(r.hamiltonian.verdict, Tri::No);
    EXPECT_FALSE(r.euler.all_degrees_even);
    EXPECT_FALSE(r.split.split);
    EXPECT_EQ(r.weakly_perfect(), false);
    std::vector<std::size_t> all(10);
    std::iota(all.begin(), all.end(), 0);
    EXPECT_EQ(hamiltonian_path(g, all).verdict, Tri::Yes);
}

TEST(Invariants, Cycles) {
    for (std::size_t n = 3; n <= 12; ++n) {
        const auto r = compute_invariants(cycle(n));
        EXPECT_EQ(r.chromatic.value, n % 2 ? 3U : 2U) << n;
        EXPECT_EQ(r.independence.value, n / 2) << n;
        EXPECT_EQ(r.domination.value, (n + 2) / 3) << n;
        EXPECT_EQ(r.hamiltonian.verdict, Tri::Yes) << n;
        EXPECT_TRUE(is_hamiltonian_cycle(cycle(n), r.hamiltonian.cycle));
        EXPECT_TRUE(r.euler.eulerian());
    }
}

TEST(Invariants, CompleteBipartiteCutWitness) {
    // K_{2,3}: removing the two-vertex side leaves three components
    const Graph g = from_edges(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
    const auto h = hamiltonian_cycle(g);
    EXPECT_EQ(h.verdict, Tri::No);
    EXPECT_GT(components_after_removal(g, h.cut_set), h.cut_set.size());
}

TEST(Invariants, EmptyAndEdgeless) {
    const auto e = compute_invariants(Graph(0));
    EXPECT_EQ(e.independence.value, 0U);
    EXPECT_EQ(e.chromatic.value, 0U);
    const auto r = compute_invariants(Graph(5));
    EXPECT_EQ(r.independence.value, 5U);
    EXPECT_EQ(r.domination.value, 5U);
    EXPECT_EQ(r.clique.value, 1U);
    EXPECT_EQ(r.chromatic.value, 1U);
    EXPECT_TRUE(r.split.split);
    EXPECT_EQ(r.hamiltonian.verdict, Tri::No);
    EXPECT_EQ(r.components, 5U);
}

TEST(Invariants, SplitExamples) {
    EXPECT_TRUE(is_split(Graph::complete(4)));
    EXPECT_FALSE(is_split(cycle(4)));
    EXPECT_FALSE(is_split(cycle(5)));
    // K_3 with a pendant on each vertex
    EXPECT_TRUE(is_split(from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 4}, {2, 5}})));
}

TEST(Invariants, RandomGraphsAgainstExhaustiveSearch) {
    std::mt19937 rng(20240611);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t n = 1 + trial % 9;
        const double p = 0.2 + 0.6 * ((trial * 7) % 10) / 10.0;
        const Graph g = random_graph(n, p, rng);
        const auto r = compute_invariants(g);
        ASSERT_TRUE(r.clique.solved() && r.chromatic.solved() && r.independence.solved() && r.domination.solved());
        EXPECT_EQ(r.clique.value, brute_best(g, true, [&](auto& s) { return is_clique(g, s); }));
        EXPECT_EQ(r.independence.value, brute_best(g, true, [&](auto& s) { return is_independent(g, s); }));
        EXPECT_EQ(r.domination.value, brute_best(g, false, [&](auto& s) { return is_dominating(g, s); }));
        EXPECT_EQ(r.chromatic.value, brute_chromatic(g));
        EXPECT_EQ(r.split.split, brute_split(g));
        ASSERT_NE(r.hamiltonian.verdict, Tri::Unknown);
        EXPECT_EQ(r.hamiltonian.verdict == Tri::Yes, brute_hamiltonian(g)) << "trial " << trial;

        EXPECT_TRUE(is_clique(g, r.clique.certificate));
        EXPECT_EQ(r.clique.certificate.size(), r.clique.value);
        EXPECT_TRUE(is_independent(g, r.independence.certificate));
        EXPECT_TRUE(is_dominating(g, r.domination.certificate));
        EXPECT_TRUE(is_proper_coloring(g, r.chromatic.certificate));
        EXPECT_EQ(colours_used(r.chromatic.certificate), r.chromatic.value);
        if (r.hamiltonian.verdict == Tri::Yes) {
            EXPECT_TRUE(is_hamiltonian_cycle(g, r.hamiltonian.cycle));
        }
        if (!r.hamiltonian.cut_set.empty()) {
            EXPECT_GT(components_after_removal(g, r.hamiltonian.cut_set), r.hamiltonian.cut_set.size());
        }
    }
}

TEST(Invariants, MediumRandomCertificates) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph g = random_graph(40, 0.3 + 0.02 * trial, rng);
        const auto r = compute_invariants(g);
        ASSERT_TRUE(r.clique.solved());
        EXPECT_TRUE(is_clique(g, r.clique.certificate));
        EXPECT_TRUE(is_independent(g, r.independence.certificate));
        EXPECT_TRUE(is_dominating(g, r.domination.certificate));
        EXPECT_TRUE(is_proper_coloring(g, r.chromatic.certificate));
        EXPECT_LE(r.clique.value, r.chromatic.value);
        if (r.hamiltonian.verdict == Tri::Yes) {
            EXPECT_TRUE(is_hamiltonian_cycle(g, r.hamiltonian.cycle));
        }
    }
}

TEST(Invariants, CapsSkipInsteadOfGuessing) {
    SolverLimits lim;
    lim.max_vertices = 5;
    const auto r = clique_number(cycle(8), lim);
    EXPECT_FALSE(r.solved());
    EXPECT_FALSE(r.note.empty());
    lim.hamiltonian_max_vertices = 5;
    // a cycle has no refutation witness, so the search cap leaves it unknown
    EXPECT_EQ(hamiltonian_cycle(cycle(8), lim).verdict, Tri::Unknown);
}

TEST(Invariants, NodeBudgetSkips) {
    std::mt19937 rng(3);
    SolverLimits lim;
    lim.node_budget = 10;
    const auto r = chromatic_number(random_graph(60, 0.5, rng), lim);
    EXPECT_FALSE(r.solved());
}

TEST(Invariants, Components) {
    const Graph g = from_edges(6, {{0, 1}, {2, 3}, {3, 4}});
    const auto c = components(g);
    ASSERT_EQ(c.size(), 3U);
    EXPECT_EQ(component_count(g), 3U);
    EXPECT_EQ(components_after_removal(g, {3}), 4U);
    EXPECT_EQ(degree_sequence(g), (std::vector<std::size_t>{1, 1, 1, 2, 1, 0}));
    const auto e = eulerian(g);
    EXPECT_FALSE(e.all_degrees_even);
    EXPECT_FALSE(e.connected_edges);
}

TEST(Invariants, ArticulationPoints) {
    // two triangles sharing vertex 2
    const Graph g = from_edges(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
    EXPECT_EQ(detail::articulation_points(g), (std::vector<std::size_t>{2}));
    EXPECT_EQ(hamiltonian_cycle(g).verdict, Tri::No);
}

TEST(Invariants, HamiltonianPathInsideComponent) {
    const Graph g = from_edges(7, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {4, 6}});
    const auto p = hamiltonian_path(g, {0, 1, 2, 3});
    ASSERT_EQ(p.verdict, Tri::Yes);
    EXPECT_EQ(p.path.size(), 4U);
    // a star has no Hamiltonian path
    const Graph star = from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
    EXPECT_EQ(hamiltonian_path(star, {0, 1, 2, 3}).verdict, Tri::No);
}
