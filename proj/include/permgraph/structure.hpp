#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "permgraph/graph.hpp"
#include "permgraph/invariants.hpp"
#include "permgraph/numtheory.hpp"

// Constructive checks of the structure results: every vertex is located by
// its catalog label or by the image of a member set, never by isomorphism search.

namespace permgraph {

struct StructureResult {
    bool ok = false;
    std::string descriptor;  // what was verified
    std::string failure;

    static StructureResult pass(std::string d) { return {true, std::move(d), {}}; }
    static StructureResult fail(std::string why) { return {false, {}, std::move(why)}; }
};

namespace detail {

// Image of every element of `small` under the generator map a -> A, b -> B,
// after checking it is an injective homomorphism.
inline std::optional<std::vector<Element>> embed(const FiniteGroup& small, const FiniteGroup& big,
                                                 Element A, Element B) {
    std::vector<Element> img(small.order());
    for (Element x = 0; x < small.order(); ++x) {
        img[x] = big.multiply(big.power(A, small.a_exponent(x)), big.power(B, small.b_exponent(x)));
    }
    Bitset seen(big.order());
    for (Element x = 0; x < small.order(); ++x) {
        if (seen.test(img[x])) return std::nullopt;
        seen.set(img[x]);
        for (Element y = 0; y < small.order(); ++y) {
            if (img[small.multiply(x, y)] != big.multiply(img[x], img[y])) return std::nullopt;
        }
    }
    return img;
}

// Vertex of `big` hit by each vertex of `small` under the element map.
inline std::optional<std::vector<std::size_t>> map_vertices(const PermGraph& small, const PermGraph& big,
                                                            const std::vector<Element>& img) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < small.vertex_count(); ++v) {
        Bitset m(big.lattice->group().order());
        for (Element x : small.subgroup(v).elements) m.set(img[x]);
        const auto k = big.lattice->find(m);
        if (!k) return std::nullopt;
        const auto w = big.vertex_of(*k);
        if (!w) return std::nullopt;
        out.push_back(*w);
    }
    return out;
}

// `map` is a bijection from small onto `target` preserving adjacency both ways.
inline std::optional<std::string> check_iso_onto(const Graph& small, const Graph& big,
                                                 const std::vector<std::size_t>& map,
                                                 const std::vector<std::size_t>& target) {
    if (map.size() != target.size()) {
        return "vertex counts differ (" + std::to_string(map.size()) + " vs " +
               std::to_string(target.size()) + ")";
    }
    std::vector<std::size_t> a = map, b = target;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end()) return "map not injective";
    if (a != b) return "image differs from the expected vertex set";
    for (std::size_t u = 0; u < map.size(); ++u)
        for (std::size_t v = u + 1; v < map.size(); ++v)
            if (small.adjacent(u, v) != big.adjacent(map[u], map[v])) return "adjacency not preserved";
    return std::nullopt;
}

inline std::vector<std::size_t> vertices_inside(const PermGraph& pg, const Bitset& members) {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < pg.vertex_count(); ++v)
        if (pg.subgroup(v).members.is_subset_of(members)) out.push_back(v);
    return out;
}

inline bool normal_in(const FiniteGroup& g, const Subgroup& h, const Subgroup& parent) {
    for (Element x : parent.generators) {
        const Element xi = g.inverse(x);
        for (Element y : h.elements)
            if (!h.members.test(g.multiply(g.multiply(x, y), xi))) return false;
    }
    return true;
}

// `hub` vertices are pairwise adjacent and adjacent to every other vertex of `part`.
inline bool is_joined(const Graph& g, const std::vector<std::size_t>& hub,
                      const std::vector<std::size_t>& part) {
    for (auto h : hub)
        for (auto v : part)
            if (h != v && !g.adjacent(h, v)) return false;
    return true;
}

inline bool no_edges_between(const Graph& g, const std::vector<std::size_t>& x,
                             const std::vector<std::size_t>& y) {
    for (auto u : x)
        for (auto v : y)
            if (g.adjacent(u, v)) return false;
    return true;
}

inline PermGraph nonnormal_graph(const GroupSpec& spec) {
    return build_graph(spec, GraphKind::NonNormal, BuildOptions{true, false, true});
}

// part = hub + Gamma_N(small), where Gamma_N(small) embeds through a -> A, b -> B.
inline std::optional<std::string> check_cone(const PermGraph& gn, const std::vector<std::size_t>& part,
                                             const std::vector<std::size_t>& hub,
                                             const std::optional<GroupSpec>& small, Element A, Element B) {
    const FiniteGroup& G = gn.lattice->group();
    if (!is_joined(gn.graph, hub, part)) return "hub not joined to its part";
    std::vector<std::size_t> rest;
    for (auto v : part)
        if (std::find(hub.begin(), hub.end(), v) == hub.end()) rest.push_back(v);
    if (!small) {
        if (!rest.empty()) return "expected no vertices beyond the hub";
        return std::nullopt;
    }
    const PermGraph sg = nonnormal_graph(*small);
    const auto img = embed(sg.lattice->group(), G, A, B);
    if (!img) return "generator map from " + small->name() + " is not an embedding";
    const auto map = map_vertices(sg, gn, *img);
    if (!map) return "image of a non-normal subgroup of " + small->name() + " is not a vertex";
    if (auto e = check_iso_onto(sg.graph, gn.graph, *map, rest)) return small->name() + ": " + *e;
    return std::nullopt;
}

inline std::vector<std::size_t> all_vertices(const PermGraph& pg) {
    std::vector<std::size_t> v(pg.vertex_count());
    std::iota(v.begin(), v.end(), 0);
    return v;
}

inline std::optional<std::size_t> label_vertex(const PermGraph& pg, SubgroupKind k, std::uint64_t r,
                                               std::uint64_t i) {
    return pg.vertex_of(CatalogLabel{k, static_cast<unsigned>(r), static_cast<unsigned>(i)});
}

inline std::optional<std::size_t> dihedral_vertex(const PermGraph& pg, std::uint64_t r, std::uint64_t i) {
    return label_vertex(pg, r == 1 ? SubgroupKind::Reflection : SubgroupKind::DihedralSub, r, i);
}

}  // namespace detail

// Gamma_N(D_n) for n = 2^a, p^a, 2p, pq.
inline StructureResult check_dihedral_nonnormal_structure(const PermGraph& gn) {
    using namespace detail;
    const GroupSpec spec = gn.lattice->group().spec();
    if (spec.family != Family::Dihedral || gn.kind != GraphKind::NonNormal) {
        return StructureResult::fail("needs the non-normal graph of a dihedral group");
    }
    const FiniteGroup& G = gn.lattice->group();
    const std::uint64_t n = spec.n;
    const auto f = numtheory::factorize(n);
    const auto two = numtheory::split_two(n);
    const Element a = G.a();
    const Element b = G.b();

    if (two.odd == 1) {
        if (n == 4) {
            const auto comps = components(gn.graph);
            if (gn.vertex_count() != 4 || gn.graph.edge_count() != 2 || comps.size() != 2)
                return StructureResult::fail("not 2K_2");
            return StructureResult::pass("2K_2");
        }
        std::vector<std::size_t> covered;
        std::vector<std::vector<std::size_t>> parts;
        for (std::uint64_t i = 1; i <= 2; ++i) {
            const auto top = G.multiply(b, G.power(a, i - 1));
            const Bitset span = generate_subgroup(G, std::vector<Element>{G.power(a, 2), top});
            const auto part = vertices_inside(gn, span);
            const auto h1 = dihedral_vertex(gn, n / 4, i);
            const auto h2 = dihedral_vertex(gn, n / 4, i + 2);
            if (!h1 || !h2) return StructureResult::fail("missing H^" + std::to_string(n / 4) + " vertices");
            if (!gn.graph.adjacent(*h1, *h2)) return StructureResult::fail("K_2 pair not adjacent");
            if (auto e = check_cone(gn, part, {*h1, *h2}, GroupSpec::dihedral(static_cast<unsigned>(n / 2)),
                                    G.power(a, 2), top))
                return StructureResult::fail(*e);
            covered.insert(covered.end(), part.begin(), part.end());
            parts.push_back(part);
        }
        if (!no_edges_between(gn.graph, parts[0], parts[1])) return StructureResult::fail("edges between halves");
        std::sort(covered.begin(), covered.end());
        if (covered != all_vertices(gn)) return StructureResult::fail("halves do not partition the vertices");
        return StructureResult::pass("2(Gamma_N(D_" + std::to_string(n / 2) + ") + K_2)");
    }
    if (f.size() == 1) {
        const std::uint64_t p = f[0].prime;
        if (n == p) {
            if (gn.vertex_count() != p || gn.graph.edge_count() != 0) return StructureResult::fail("not empty");
            return StructureResult::pass(std::to_string(p) + "K_1");
        }
        std::vector<std::size_t> covered;
        std::vector<std::vector<std::size_t>> parts;
        for (std::uint64_t i = 1; i <= p; ++i) {
            const auto top = G.multiply(b, G.power(a, i - 1));
            const auto hub = dihedral_vertex(gn, n / p, i);
            if (!hub) return StructureResult::fail("missing H^" + std::to_string(n / p) + " vertex");
            const auto part = vertices_inside(gn, gn.subgroup(*hub).members);
            std::optional<GroupSpec> small;
            if (n / p >= 3) small = GroupSpec::dihedral(static_cast<unsigned>(n / p));
            if (auto e = check_cone(gn, part, {*hub}, small, G.power(a, p), top)) return StructureResult::fail(*e);
            for (const auto& other : parts)
                if (!no_edges_between(gn.graph, other, part)) return StructureResult::fail("edges between parts");
            covered.insert(covered.end(), part.begin(), part.end());
            parts.push_back(part);
        }
        std::sort(covered.begin(), covered.end());
        if (covered != all_vertices(gn)) return StructureResult::fail("parts do not partition the vertices");
        return StructureResult::pass(std::to_string(p) + "(Gamma_N(D_" + std::to_string(n / p) + ") + K_1)");
    }
    if (f.size() == 2 && f[0].exponent == 1 && f[1].exponent == 1) {
        const std::uint64_t p = f[0].prime;
        const std::uint64_t q = f[1].prime;
        std::vector<std::size_t> covered;
        std::size_t triangles = 0;
        auto triangle = [&](std::optional<std::size_t> x, std::optional<std::size_t> y,
                            std::optional<std::size_t> z) {
            if (!x || !y || !z) return false;
            if (!is_clique(gn.graph, {*x, *y, *z})) return false;
            ++triangles;
            return true;
        };
        if (p == 2) {
            for (std::uint64_t i = 1; i <= q; ++i) {
                const auto u = dihedral_vertex(gn, 2, i);
                const auto v = dihedral_vertex(gn, 1, i);
                const auto w = dihedral_vertex(gn, 1, i + q);
                if (!triangle(u, v, w)) return StructureResult::fail("triangle " + std::to_string(i) + " missing");
                covered.insert(covered.end(), {*u, *v, *w});
            }
        } else {
            for (std::uint64_t i = 1; i <= p; ++i) covered.push_back(dihedral_vertex(gn, q, i).value_or(0));
            for (std::uint64_t j = 1; j <= q; ++j) covered.push_back(dihedral_vertex(gn, p, j).value_or(0));
            for (std::uint64_t i = 1; i <= p; ++i) {
                for (std::uint64_t j = 1; j <= q; ++j) {
                    // Chinese remainder index: m = i mod p, m = j mod q, 1 <= m <= pq
                    std::uint64_t m = 1;
                    while (!(m % p == i % p && m % q == j % q)) ++m;
                    const auto w = dihedral_vertex(gn, 1, m);
                    if (!triangle(dihedral_vertex(gn, q, i), dihedral_vertex(gn, p, j), w))
                        return StructureResult::fail("triangle G_" + std::to_string(i) + std::to_string(j) + " missing");
                    covered.push_back(*w);
                }
            }
        }
        std::sort(covered.begin(), covered.end());
        if (std::adjacent_find(covered.begin(), covered.end()) != covered.end() || covered != all_vertices(gn))
            return StructureResult::fail("triangles do not partition the labelled vertices");
        if (gn.graph.edge_count() != 3 * triangles) return StructureResult::fail("edges outside the triangles");
        if (p == 2) return StructureResult::pass(std::to_string(q) + "K_3");
        return StructureResult::pass("union of " + std::to_string(n) + " triangles {u_i, v_j, w_ij}, i <= " +
                                     std::to_string(p) + ", j <= " + std::to_string(q));
    }
    return StructureResult::fail("no structure result for n = " + std::to_string(n));
}

// Quotient map Q_n -> D_n; checks the label bijection H_{i,r} -> H^r_{i'} and adjacency.
inline StructureResult check_quaternion_dihedral_bijection(const PermGraph& gq, const PermGraph& gd) {
    using namespace detail;
    const FiniteGroup& Q = gq.lattice->group();
    const FiniteGroup& D = gd.lattice->group();
    const std::uint64_t n = Q.spec().n;
    if (Q.spec().family != Family::Quaternion || D.spec().family != Family::Dihedral || D.spec().n != n)
        return StructureResult::fail("needs Q_n and D_n");
    auto pi = [&](Element x) { return D.make(static_cast<std::int64_t>(Q.a_exponent(x) % n), Q.b_exponent(x)); };
    for (Element x = 0; x < Q.order(); ++x)
        for (Element y = 0; y < Q.order(); ++y)
            if (pi(Q.multiply(x, y)) != D.multiply(pi(x), pi(y)))
                return StructureResult::fail("quotient map is not a homomorphism");
    std::vector<std::size_t> map;
    for (std::size_t v = 0; v < gq.vertex_count(); ++v) {
        const Subgroup& s = gq.subgroup(v);
        if (!s.label) return StructureResult::fail("unlabelled vertex");
        const DihedralIndex di = quaternion_image_index(static_cast<unsigned>(n), to_index(*s.label));
        const auto w = dihedral_vertex(gd, di.r, di.i);
        if (!w) return StructureResult::fail("no dihedral vertex for " + s.label->str());
        Bitset img(D.order());
        for (Element x : s.elements) img.set(pi(x));
        if (img != gd.subgroup(*w).members)
            return StructureResult::fail("label map disagrees with the quotient image of " + s.label->str());
        map.push_back(*w);
    }
    if (auto e = check_iso_onto(gq.graph, gd.graph, map, all_vertices(gd))) return StructureResult::fail(*e);
    return StructureResult::pass("Gamma_N(" + Q.spec().name() + ") = Gamma_N(" + D.spec().name() + ")");
}

// Gamma_N(QD_2^a) = (K_2 + Gamma_N(D_m)) u (K_2 + Gamma_N(Q_{m/2})), m = 2^(a-2).
inline StructureResult check_quasidihedral_nonnormal_structure(const PermGraph& gn) {
    using namespace detail;
    const FiniteGroup& G = gn.lattice->group();
    const GroupSpec spec = G.spec();
    if (spec.family != Family::QuasiDihedral) return StructureResult::fail("needs a quasi-dihedral group");
    const std::uint64_t m = std::uint64_t{1} << (spec.alpha - 2);
    const Element A = G.multiply(G.a(), G.a());
    const Element Bd = G.b();
    const Element Bq = G.multiply(G.a(), G.b());
    struct Part {
        Bitset span;
        std::optional<GroupSpec> small;
        Element B;
        std::string name;
    };
    std::vector<Part> parts;
    parts.push_back({generate_subgroup(G, std::vector<Element>{A, Bd}),
                     GroupSpec::dihedral(static_cast<unsigned>(m)), Bd, "D_" + std::to_string(m)});
    parts.push_back({generate_subgroup(G, std::vector<Element>{A, Bq}),
                     GroupSpec::quaternion(static_cast<unsigned>(m / 2)), Bq, "D_" + std::to_string(m / 2)});
    std::vector<std::vector<std::size_t>> found;
    std::vector<std::size_t> covered;
    for (const auto& pt : parts) {
        const auto part = vertices_inside(gn, pt.span);
        Subgroup parent = make_subgroup(pt.span, {A, pt.B});
        std::vector<std::size_t> hub;
        for (auto v : part)
            if (normal_in(G, gn.subgroup(v), parent)) hub.push_back(v);
        if (hub.size() != 2) return StructureResult::fail("expected a K_2 hub in the " + pt.name + " part");
        if (auto e = check_cone(gn, part, hub, pt.small, A, pt.B)) return StructureResult::fail(*e);
        if (components_of(gn.graph, [&] {
                Bitset b(gn.vertex_count());
                for (auto v : part) b.set(v);
                return b;
            }()).size() != 1)
            return StructureResult::fail("part not connected");
        covered.insert(covered.end(), part.begin(), part.end());
        found.push_back(part);
    }
    if (!no_edges_between(gn.graph, found[0], found[1])) return StructureResult::fail("edges between the parts");
    std::sort(covered.begin(), covered.end());
    if (covered != all_vertices(gn)) return StructureResult::fail("parts do not partition the vertices");
    // the quaternion part matches Gamma_N(D_{m/2}) through the quotient map
    if (m / 2 >= 3) {
        const auto q = nonnormal_graph(GroupSpec::quaternion(static_cast<unsigned>(m / 2)));
        const auto d = nonnormal_graph(GroupSpec::dihedral(static_cast<unsigned>(m / 2)));
        const auto r = check_quaternion_dihedral_bijection(q, d);
        if (!r.ok) return r;
    }
    return StructureResult::pass("(K_2 + Gamma_N(D_" + std::to_string(m) + ")) u (K_2 + Gamma_N(D_" +
                                 std::to_string(m / 2) + "))");
}

// Gamma(G) = K_r + Gamma_N(G): normal vertices universal, the rest induce Gamma_N.
inline StructureResult check_join(const PermGraph& full, const PermGraph& gn, const std::string& tail) {
    if (full.lattice != gn.lattice) return StructureResult::fail("graphs from different lattices");
    std::vector<std::size_t> normal;
    std::vector<std::size_t> map;
    for (std::size_t v = 0; v < full.vertex_count(); ++v) {
        if (full.normal[v]) {
            normal.push_back(v);
            if (full.graph.degree(v) + 1 != full.vertex_count()) return StructureResult::fail("normal vertex not universal");
        }
    }
    for (std::size_t w = 0; w < gn.vertex_count(); ++w) {
        const auto v = full.vertex_of(gn.vertices[w]);
        if (!v || full.normal[*v]) return StructureResult::fail("non-normal vertex missing from Gamma");
        map.push_back(*v);
    }
    if (normal.size() + map.size() != full.vertex_count()) return StructureResult::fail("vertex sets do not split");
    for (std::size_t a = 0; a < map.size(); ++a)
        for (std::size_t b = a + 1; b < map.size(); ++b)
            if (gn.graph.adjacent(a, b) != full.graph.adjacent(map[a], map[b]))
                return StructureResult::fail("induced graph differs from Gamma_N");
    return StructureResult::pass("K_" + std::to_string(normal.size()) + tail);
}

inline StructureResult check_complete(const PermGraph& pg) {
    const std::size_t n = pg.vertex_count();
    if (pg.graph.edge_count() != n * (n == 0 ? 0 : n - 1) / 2) return StructureResult::fail("not complete");
    return StructureResult::pass("K_" + std::to_string(n));
}

struct PartiteResult {
    bool ok = false;
    std::vector<std::vector<std::size_t>> classes;
    bool all_maximal = false;
    std::string failure;
};

// A_r, B_r, C_r classes of Gamma_N(D_n) by label; each must be a maximal
// independent set and together they must partition the vertices.
inline PartiteResult dihedral_partite_classes(const PermGraph& gn) {
    using namespace detail;
    PartiteResult out;
    const GroupSpec spec = gn.lattice->group().spec();
    if (spec.family != Family::Dihedral || gn.kind != GraphKind::NonNormal) {
        out.failure = "needs the non-normal graph of a dihedral group";
        return out;
    }
    const std::uint64_t n = spec.n;
    auto range = [&](std::uint64_t r, std::uint64_t lo, std::uint64_t hi) {
        std::vector<std::size_t> c;
        for (std::uint64_t i = lo; i <= hi; ++i) {
            if (auto v = dihedral_vertex(gn, r, i)) c.push_back(*v);
        }
        return c;
    };
    for (std::uint64_t r : numtheory::divisors(n)) {
        if (r == n) continue;
        const std::uint64_t k = n / r;
        if (n % 2 == 1 || k % 2 == 1) {
            out.classes.push_back(range(r, 1, k));
        } else if (r != n / 2) {
            out.classes.push_back(range(r, 1, k / 2));
            out.classes.push_back(range(r, k / 2 + 1, k));
        }
    }
    std::vector<std::size_t> covered;
    out.all_maximal = true;
    for (const auto& c : out.classes) {
        if (!is_independent(gn.graph, c)) {
            out.failure = "class not independent";
            return out;
        }
        Bitset in(gn.vertex_count());
        for (auto v : c) in.set(v);
        for (std::size_t v = 0; v < gn.vertex_count(); ++v) {
            if (!in.test(v) && !gn.graph.neighbors(v).intersects(in)) out.all_maximal = false;
        }
        covered.insert(covered.end(), c.begin(), c.end());
    }
    std::sort(covered.begin(), covered.end());
    if (covered != all_vertices(gn)) {
        out.failure = "classes do not partition the vertices";
        return out;
    }
    out.ok = true;
    return out;
}

}  // namespace permgraph
