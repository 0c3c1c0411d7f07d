#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "permgraph/graph.hpp"
#include "permgraph/invariants.hpp"
#include "permgraph/verify.hpp"

// Structured text reports. Every document starts with "permgraph-report 1",
// then "key: value" lines, then tab-separated tables introduced by "[name]"
// headers whose first row lists the columns. See README.md.

namespace permgraph {

namespace detail {

inline std::string join_ids(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t k = 0; k < v.size(); ++k) {
        if (k) s += ",";
        s += std::to_string(v[k]);
    }
    return s.empty() ? "-" : s;
}

inline std::string optimum_str(const OptimumResult& r) {
    return r.solved() ? std::to_string(r.value) : "skipped (" + r.note + ")";
}

// Certificates use output positions, matching the [vertices] table ids.
inline std::vector<std::size_t> to_positions(const std::vector<std::size_t>& vs, const std::vector<std::size_t>& pos) {
    std::vector<std::size_t> out;
    out.reserve(vs.size());
    for (auto v : vs) out.push_back(pos[v]);
    return out;
}

}  // namespace detail

inline void write_graph_header(std::ostringstream& os, const PermGraph& pg) {
    const GroupSpec& s = pg.spec();
    os << "permgraph-report 1\n";
    os << "graph: " << pg.name() << "\n";
    os << "group: " << s.name() << "\n";
    if (s.realized() != s) os << "realized-as: " << s.realized().name() << "\n";
    os << "family: " << family_name(s.family) << "\n";
    os << "order: " << s.order() << "\n";
    os << "kind: " << kind_name(pg.kind) << "\n";
    os << "lattice-size: " << pg.lattice->lattice_size() << "\n";
    os << "vertices: " << pg.vertex_count() << "\n";
    os << "edges: " << pg.graph.edge_count() << "\n";
    os << "dedekind: " << (pg.dedekind ? "true" : "false") << "\n";
}

inline std::string graph_report(const PermGraph& pg) {
    std::ostringstream os;
    write_graph_header(os, pg);
    const auto ord = output_order(pg);
    std::vector<std::size_t> pos(ord.size());
    for (std::size_t k = 0; k < ord.size(); ++k) pos[ord[k]] = k;
    os << "\n[vertices]\nid\tlabel\torder\tkind\tnormal\tdegree\n";
    for (std::size_t k = 0; k < ord.size(); ++k) {
        const std::size_t v = ord[k];
        const Subgroup& s = pg.subgroup(v);
        os << k << "\t" << (s.label ? s.label->str() : "S" + std::to_string(pg.vertices[v])) << "\t" << s.order()
           << "\t" << (s.label ? kind_name(s.label->kind) : "unlabelled") << "\t"
           << (pg.normal[v] ? "true" : "false") << "\t" << pg.graph.degree(v) << "\n";
    }
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t u = 0; u < pg.vertex_count(); ++u) {
        pg.graph.neighbors(u).for_each([&](std::size_t v) {
            if (u < v) edges.emplace_back(std::min(pos[u], pos[v]), std::max(pos[u], pos[v]));
        });
    }
    std::sort(edges.begin(), edges.end());
    os << "\n[edges]\nu\tv\n";
    for (const auto& [a, b] : edges) os << a << "\t" << b << "\n";
    return os.str();
}

inline std::string invariants_report(const PermGraph& pg, const InvariantReport& r) {
    using namespace detail;
    std::ostringstream os;
    write_graph_header(os, pg);
    const auto ord = output_order(pg);
    std::vector<std::size_t> pos(ord.size());
    for (std::size_t k = 0; k < ord.size(); ++k) pos[ord[k]] = k;
    auto cert = [&](const OptimumResult& o) {
        return o.solved() ? join_ids(to_positions(o.certificate, pos)) : std::string("-");
    };
    os << "components: " << r.components << "\n";
    os << "independence: " << optimum_str(r.independence) << "\n";
    os << "domination: " << optimum_str(r.domination) << "\n";
    os << "clique: " << optimum_str(r.clique) << "\n";
    os << "chromatic: " << optimum_str(r.chromatic) << "\n";
    const auto wp = r.weakly_perfect();
    os << "weakly-perfect: " << (wp ? (*wp ? "true" : "false") : "skipped") << "\n";
    os << "all-degrees-even: " << (r.euler.all_degrees_even ? "true" : "false") << "\n";
    os << "eulerian-connected: " << (r.euler.eulerian() ? "true" : "false") << "\n";
    os << "split: " << (r.split.split ? "true" : "false") << "\n";
    os << "totally-disconnected: " << (r.edges == 0 ? "true" : "false") << "\n";
    os << "hamiltonian: " << tri_name(r.hamiltonian.verdict) << "\n";
    os << "hamiltonian-reason: " << (r.hamiltonian.reason.empty() ? "-" : r.hamiltonian.reason) << "\n";

    os << "\n[certificates]\ninvariant\tvertices\n";
    os << "independent-set\t" << cert(r.independence) << "\n";
    os << "dominating-set\t" << cert(r.domination) << "\n";
    os << "clique\t" << cert(r.clique) << "\n";
    if (r.chromatic.solved()) {
        std::vector<std::size_t> by_pos(r.chromatic.certificate.size());
        for (std::size_t v = 0; v < by_pos.size(); ++v) by_pos[pos[v]] = r.chromatic.certificate[v];
        os << "colouring\t" << join_ids(by_pos) << "\n";
    } else {
        os << "colouring\t-\n";
    }
    os << "hamiltonian-cycle\t"
       << (r.hamiltonian.cycle.empty() ? "-" : join_ids(to_positions(r.hamiltonian.cycle, pos))) << "\n";
    os << "cut-set\t" << (r.hamiltonian.cut_set.empty() ? "-" : join_ids(to_positions(r.hamiltonian.cut_set, pos)))
       << "\n";
    if (r.split.split) {
        os << "split-clique\t" << join_ids(to_positions(r.split.clique, pos)) << "\n";
        os << "split-independent\t" << join_ids(to_positions(r.split.independent, pos)) << "\n";
    }

    os << "\n[degrees]\nid\tdegree\n";
    for (std::size_t k = 0; k < ord.size(); ++k) os << k << "\t" << r.degrees[ord[k]] << "\n";
    return os.str();
}

inline std::string sweep_report(const SweepResult& res) {
    std::ostringstream os;
    os << "permgraph-report 1\n";
    os << "document: verify\n";
    os << "instances: " << res.summary.instances << "\n";
    os << "checks: " << res.summary.checks << "\n";
    for (Verdict v : {Verdict::Match, Verdict::Mismatch, Verdict::Skipped, Verdict::PaperOpen, Verdict::Erratum}) {
        auto it = res.summary.counts.find(v);
        os << verdict_name(v) << ": " << (it == res.summary.counts.end() ? 0 : it->second) << "\n";
    }
    os << "\n[checks]\ninstance\tcheck\tpredicted\tcomputed\tverdict\tanchor\tnote\n";
    for (const auto& inst : res.instances) {
        for (const auto& r : inst.rows) {
            os << inst.spec.name() << "\t" << r.check << "\t" << r.predicted << "\t" << r.computed << "\t"
               << verdict_name(r.verdict) << "\t" << r.anchor << "\t" << (r.note.empty() ? "-" : r.note) << "\n";
        }
    }
    os << "\n[instances]\ninstance\tchecks\tmismatches\terrata\tseconds\n";
    for (const auto& inst : res.instances) {
        std::ostringstream t;
        t.precision(3);
        t << std::fixed << inst.seconds;
        os << inst.spec.name() << "\t" << inst.rows.size() << "\t" << inst.count(Verdict::Mismatch) << "\t"
           << inst.count(Verdict::Erratum) << "\t" << t.str() << "\n";
    }
    return os.str();
}

}  // namespace permgraph
