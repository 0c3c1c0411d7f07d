#pragma once

#include <algorithm>
#include <memory>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "permgraph/bitset.hpp"
#include "permgraph/lattice.hpp"
#include "permgraph/permutability.hpp"

namespace permgraph {

// Simple undirected graph on 0..n-1 with bitset rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n) : rows_(n, Bitset(n)) {}

    static Graph complete(std::size_t n) {
        Graph g(n);
        for (std::size_t u = 0; u < n; ++u)
            for (std::size_t v = u + 1; v < n; ++v) g.add_edge(u, v);
        return g;
    }

    std::size_t vertex_count() const { return rows_.size(); }

    void add_edge(std::size_t u, std::size_t v) {
        if (u == v) throw std::invalid_argument("self-loop");
        rows_[u].set(v);
        rows_[v].set(u);
    }

    bool adjacent(std::size_t u, std::size_t v) const { return rows_[u].test(v); }
    const Bitset& neighbors(std::size_t u) const { return rows_[u]; }
    std::size_t degree(std::size_t u) const { return rows_[u].count(); }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (const auto& r : rows_) twice += r.count();
        return twice / 2;
    }

    Bitset all() const {
        Bitset b(vertex_count());
        b.set_all();
        return b;
    }

    Graph complement() const {
        Graph c(vertex_count());
        for (std::size_t u = 0; u < vertex_count(); ++u) {
            Bitset row = rows_[u].complement();
            row.reset(u);
            c.rows_[u] = std::move(row);
        }
        return c;
    }

    Graph induced(std::span<const std::size_t> vs) const {
        Graph h(vs.size());
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b)
                if (adjacent(vs[a], vs[b])) h.add_edge(a, b);
        return h;
    }

    bool operator==(const Graph&) const = default;

private:
    std::vector<Bitset> rows_;
};

enum class GraphKind { Full, NonNormal };

inline std::string kind_name(GraphKind k) { return k == GraphKind::Full ? "full" : "nonnormal"; }

inline GraphKind parse_kind(const std::string& s) {
    if (s == "full") return GraphKind::Full;
    if (s == "nonnormal") return GraphKind::NonNormal;
    throw ParameterError("unknown graph kind '" + s + "' (expected full or nonnormal)");
}

// Brute-force adjacency disagreed with a closed form or with the second oracle route.
class OracleMismatch : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

struct BuildOptions {
    bool check_closed_form = true;
    bool check_closure_route = true;
    bool strict = true;  // throw OracleMismatch instead of only counting
};

struct BuildDiagnostics {
    std::size_t pairs = 0;
    std::size_t closed_form_checked = 0;
    std::size_t closed_form_disagreements = 0;
    std::size_t closure_disagreements = 0;
    std::size_t normality_disagreements = 0;
    std::string first_disagreement;
};

// Permutability of every pair of proper subgroups, plus computed normality.
struct PermutabilityTable {
    std::shared_ptr<const SubgroupLattice> lattice;
    std::vector<Bitset> permutes;
    std::vector<bool> normal;
    BuildDiagnostics diagnostics;
};

inline PermutabilityTable compute_permutability(std::shared_ptr<const SubgroupLattice> lattice,
                                                const BuildOptions& opt = {}) {
    const SubgroupLattice& lat = *lattice;
    const FiniteGroup& g = lat.group();
    const std::size_t n = lat.proper_count();
    PermutabilityTable t;
    t.permutes.assign(n, Bitset(n));
    t.normal.assign(n, false);
    auto& d = t.diagnostics;
    auto note = [&](const std::string& what) {
        if (d.first_disagreement.empty()) d.first_disagreement = what;
        if (opt.strict) throw OracleMismatch(g.requested_spec().name() + ": " + what);
    };
    for (std::size_t u = 0; u < n; ++u) {
        t.normal[u] = is_normal(g, lat[u].members);
        if (lat[u].label && t.normal[u] != lat[u].is_normal) {
            ++d.normality_disagreements;
            note("normality of " + lat[u].label->describe());
        }
    }
    for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = u + 1; v < n; ++v) {
            ++d.pairs;
            const bool pb = permutes_bruteforce(g, lat[u], lat[v]);
            if (pb) {
                t.permutes[u].set(v);
                t.permutes[v].set(u);
            }
            if (opt.check_closure_route && permutes_by_closure(g, lat[u], lat[v]) != pb) {
                ++d.closure_disagreements;
                note("product-set and closure routes disagree");
            }
            if (opt.check_closed_form && lat[u].label && lat[v].label) {
                const auto cf = permutes_closedform(g.requested_spec(), *lat[u].label, *lat[v].label);
                if (cf) {
                    ++d.closed_form_checked;
                    if (*cf != pb) {
                        ++d.closed_form_disagreements;
                        note("closed form disagrees on " + lat[u].label->describe() + ", " +
                             lat[v].label->describe());
                    }
                }
            }
        }
    }
    t.lattice = std::move(lattice);
    return t;
}

struct PermGraph {
    GraphKind kind = GraphKind::Full;
    std::shared_ptr<const SubgroupLattice> lattice;
    std::vector<std::size_t> vertices;  // lattice indices
    std::vector<bool> normal;           // per vertex, computed
    Graph graph;
    bool dedekind = false;  // nonnormal graph of a group with no non-normal subgroups

    const GroupSpec& spec() const { return lattice->group().requested_spec(); }
    const Subgroup& subgroup(std::size_t v) const { return (*lattice)[vertices[v]]; }
    std::size_t vertex_count() const { return vertices.size(); }

    std::string name() const {
        return std::string(kind == GraphKind::Full ? "Gamma" : "Gamma_N") + "(" + spec().name() + ")";
    }

    std::optional<std::size_t> vertex_of(std::size_t lattice_index) const {
        auto it = std::find(vertices.begin(), vertices.end(), lattice_index);
        if (it == vertices.end()) return std::nullopt;
        return static_cast<std::size_t>(it - vertices.begin());
    }

    std::optional<std::size_t> vertex_of(const CatalogLabel& l) const {
        auto k = lattice->find(l);
        if (!k) return std::nullopt;
        return vertex_of(*k);
    }
};

inline PermGraph graph_from_table(const PermutabilityTable& t, GraphKind kind) {
    PermGraph pg;
    pg.kind = kind;
    pg.lattice = t.lattice;
    for (std::size_t u = 0; u < t.normal.size(); ++u) {
        if (kind == GraphKind::Full || !t.normal[u]) pg.vertices.push_back(u);
    }
    pg.dedekind = kind == GraphKind::NonNormal && pg.vertices.empty();
    pg.graph = Graph(pg.vertices.size());
    for (std::size_t a = 0; a < pg.vertices.size(); ++a) {
        pg.normal.push_back(t.normal[pg.vertices[a]]);
        for (std::size_t b = a + 1; b < pg.vertices.size(); ++b) {
            if (t.permutes[pg.vertices[a]].test(pg.vertices[b])) pg.graph.add_edge(a, b);
        }
    }
    return pg;
}

inline PermGraph build_graph(const GroupSpec& spec, GraphKind kind, const BuildOptions& opt = {}) {
    auto lat = std::make_shared<const SubgroupLattice>(enumerate_catalog(build_group(spec)));
    return graph_from_table(compute_permutability(lat, opt), kind);
}

inline std::string vertex_label(const PermGraph& pg, std::size_t v) {
    const Subgroup& s = pg.subgroup(v);
    const std::string head = s.label ? s.label->str() : "S" + std::to_string(pg.vertices[v]);
    return head + "|" + std::to_string(s.order());
}

// Vertex order used for output: (order, r, i, kind, lattice index).
inline std::vector<std::size_t> output_order(const PermGraph& pg) {
    std::vector<std::size_t> ord(pg.vertex_count());
    for (std::size_t v = 0; v < ord.size(); ++v) ord[v] = v;
    std::stable_sort(ord.begin(), ord.end(), [&](std::size_t x, std::size_t y) {
        const Subgroup& a = pg.subgroup(x);
        const Subgroup& b = pg.subgroup(y);
        if (a.order() != b.order()) return a.order() < b.order();
        const CatalogLabel la = a.label.value_or(CatalogLabel{SubgroupKind::Cyclic, ~0U, ~0U});
        const CatalogLabel lb = b.label.value_or(CatalogLabel{SubgroupKind::Cyclic, ~0U, ~0U});
        if (la.r != lb.r) return la.r < lb.r;
        if (la.i != lb.i) return la.i < lb.i;
        if (la.kind != lb.kind) return la.kind < lb.kind;
        return pg.vertices[x] < pg.vertices[y];
    });
    return ord;
}

inline std::string to_dot(const PermGraph& pg) {
    const auto ord = output_order(pg);
    std::vector<std::size_t> pos(ord.size());
    for (std::size_t k = 0; k < ord.size(); ++k) pos[ord[k]] = k;
    std::ostringstream os;
    os << "graph \"" << pg.name() << "\" {\n";
    if (pg.dedekind) os << "  // dedekind group: no non-normal subgroups\n";
    for (std::size_t k = 0; k < ord.size(); ++k) {
        const std::size_t v = ord[k];
        const Subgroup& s = pg.subgroup(v);
        os << "  n" << k << " [label=\"" << vertex_label(pg, v) << "\"";
        if (s.label) os << ", kind=\"" << kind_name(s.label->kind) << "\"";
        os << ", normal=\"" << (pg.normal[v] ? "true" : "false") << "\"];\n";
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < pg.vertex_count(); ++u) {
        pg.graph.neighbors(u).for_each([&](std::size_t v) {
            if (u < v) edges.emplace_back(std::min(pos[u], pos[v]), std::max(pos[u], pos[v]));
        });
    }
    std::sort(edges.begin(), edges.end());
    for (const auto& [a, b] : edges) os << "  n" << a << " -- n" << b << ";\n";
    os << "}\n";
    return os.str();
}

}  // namespace permgraph
