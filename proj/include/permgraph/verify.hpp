#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "permgraph/formulas.hpp"
#include "permgraph/graph.hpp"
#include "permgraph/invariants.hpp"
#include "permgraph/lattice.hpp"
#include "permgraph/structure.hpp"

namespace permgraph {

enum class Verdict { Match, Mismatch, Skipped, PaperOpen, Erratum };

inline std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::Match: return "match";
        case Verdict::Mismatch: return "mismatch";
        case Verdict::Skipped: return "skipped";
        case Verdict::PaperOpen: return "paper-open";
        case Verdict::Erratum: return "erratum";
    }
    return "?";
}

struct CheckRow {
    std::string check;
    std::string anchor;
    std::string predicted;
    std::string computed;
    Verdict verdict = Verdict::Skipped;
    std::string note;
};

struct InstanceResult {
    GroupSpec spec;
    std::vector<CheckRow> rows;
    double seconds = 0;
    std::string error;  // set when the instance could not be built

    const CheckRow* find(const std::string& check) const {
        for (const auto& r : rows)
            if (r.check == check) return &r;
        return nullptr;
    }
    std::size_t count(Verdict v) const {
        return static_cast<std::size_t>(
            std::count_if(rows.begin(), rows.end(), [&](const CheckRow& r) { return r.verdict == v; }));
    }
};

struct VerifyOptions {
    SolverLimits limits;
    bool invariants = true;   // exact alpha/gamma/omega/chi
    bool hamiltonian = true;  // cycle search for the hamiltonian rows
    bool structure = true;    // constructive structure checks
    bool oracle = true;       // brute-force lattice and closure route
};

namespace detail {

class RowSink {
public:
    explicit RowSink(InstanceResult& out) : out_(out) {}

    // A computed value of nullopt means the check could not be evaluated.
    void put(const std::string& check, const std::string& anchor, const std::optional<Value>& predicted,
             PredictionKind kind, const std::optional<Value>& computed, std::string note = {}) {
        CheckRow r;
        r.check = check;
        r.anchor = anchor;
        r.predicted = predicted ? value_str(*predicted) : "-";
        r.computed = computed ? value_str(*computed) : "skipped";
        r.note = std::move(note);
        if (kind == PredictionKind::PaperOpen || !predicted) {
            r.verdict = Verdict::PaperOpen;
        } else if (!computed) {
            r.verdict = Verdict::Skipped;
        } else if (kind == PredictionKind::Erratum) {
            r.verdict = *computed == *predicted ? Verdict::Match : Verdict::Erratum;
        } else {
            r.verdict = *computed == *predicted ? Verdict::Match : Verdict::Mismatch;
        }
        out_.rows.push_back(std::move(r));
    }

    void stated(const std::string& check, const std::string& anchor, const Value& predicted,
                const std::optional<Value>& computed, std::string note = {}) {
        put(check, anchor, predicted, PredictionKind::Stated, computed, std::move(note));
    }

private:
    InstanceResult& out_;
};

inline std::optional<Value> opt_value(const OptimumResult& r) {
    if (!r.solved()) return std::nullopt;
    return static_cast<std::int64_t>(r.value);
}

inline std::optional<Value> tri_value(Tri t) {
    if (t == Tri::Unknown) return std::nullopt;
    return t == Tri::Yes;
}

inline std::int64_t count_matching_degrees(const PermGraph& pg, const std::map<CatalogLabel, std::int64_t>& m) {
    std::int64_t ok = 0;
    for (std::size_t v = 0; v < pg.vertex_count(); ++v) {
        const auto& l = pg.subgroup(v).label;
        if (!l) continue;
        auto it = m.find(*l);
        if (it != m.end() && it->second == static_cast<std::int64_t>(pg.graph.degree(v))) ++ok;
    }
    return ok;
}

// x for H^1_1: dihedral-type neighbours in Gamma, itself, and G.
inline std::optional<std::int64_t> reflection_count(const PermGraph& full) {
    const auto v = full.vertex_of(CatalogLabel{SubgroupKind::Reflection, 1, 1});
    if (!v) return std::nullopt;
    std::int64_t x = 2;
    full.graph.neighbors(*v).for_each([&](std::size_t w) {
        const auto& l = full.subgroup(w).label;
        if (l && l->dihedral_type()) ++x;
    });
    return x;
}

inline std::optional<Value> structure_value(const StructureResult& r) {
    if (r.ok) return r.descriptor;
    return "unvalidated: " + r.failure;
}

inline PermGraph dihedral_partner(const GroupSpec& q) {
    return build_graph(GroupSpec::dihedral(q.n), GraphKind::NonNormal, BuildOptions{true, false, true});
}

// Descriptor of Gamma(G) validated against Gamma_N(G).
inline StructureResult full_structure(const PermGraph& full, const PermGraph& gn, const GroupSpec& spec) {
    const GroupSpec real = spec.realized();
    switch (spec.family) {
        case Family::Dihedral:
            return check_join(full, gn, " + Gamma_N(" + spec.name() + ")");
        case Family::Quaternion: {
            if (gn.vertex_count() == 0) return check_join(full, gn, "");
            const auto bij = check_quaternion_dihedral_bijection(gn, dihedral_partner(spec));
            if (!bij.ok) return bij;
            return check_join(full, gn, " + Gamma_N(D_" + std::to_string(spec.n) + ")");
        }
        case Family::QuasiDihedral:
            return check_join(full, gn, " + Gamma_N(" + spec.name() + ")");
        case Family::Modular:
            if (real.family == Family::Dihedral) return check_join(full, gn, " + Gamma_N(" + real.name() + ")");
            return check_complete(full);
    }
    return StructureResult::fail("unknown family");
}

inline StructureResult nonnormal_structure(const PermGraph& gn, const GroupSpec& spec) {
    const GroupSpec real = spec.realized();
    switch (real.family) {
        case Family::Dihedral:
            return check_dihedral_nonnormal_structure(gn);
        case Family::Quaternion: {
            if (spec.n < 3) return StructureResult::fail("dedekind");
            const auto d = dihedral_partner(spec);
            const auto bij = check_quaternion_dihedral_bijection(gn, d);
            if (!bij.ok) return bij;
            // the shape carries over through the bijection
            return check_dihedral_nonnormal_structure(d);
        }
        case Family::QuasiDihedral:
            return check_quasidihedral_nonnormal_structure(gn);
        case Family::Modular:
            return check_complete(gn);
    }
    return StructureResult::fail("unknown family");
}

inline std::optional<Value> component_paths(const PermGraph& gn, const SolverLimits& lim) {
    for (const auto& comp : components(gn.graph)) {
        const auto p = hamiltonian_path(gn.graph, comp, lim);
        if (p.verdict == Tri::Unknown) return std::nullopt;
        if (p.verdict == Tri::No) return false;
    }
    return true;
}

}  // namespace detail

inline InstanceResult verify_instance(const GroupSpec& spec, const VerifyOptions& opt = {}) {
    using namespace detail;
    const auto t0 = std::chrono::steady_clock::now();
    InstanceResult out;
    out.spec = spec;
    RowSink sink(out);
    try {
        const PredictionReport pred = predict(spec);
        const auto group = build_group(spec);
        auto lattice = std::make_shared<const SubgroupLattice>(enumerate_catalog(group));

        if (opt.oracle) {
            const SubgroupLattice oracle = enumerate_bruteforce(group);
            const LatticeComparison cmp = compare_lattices(*lattice, oracle);
            sink.stated("lattice.catalog", "subgroup-catalog", true, cmp.same_sets(),
                        std::to_string(cmp.only_in_catalog) + " catalog-only, " +
                            std::to_string(cmp.only_in_oracle) + " oracle-only");
            sink.stated("lattice.normality", "subgroup-catalog", true, cmp.same_normality());
            if (const auto* p = pred.find("lattice.size"))
                sink.put(p->check, p->anchor, p->value, p->kind,
                         static_cast<std::int64_t>(oracle.lattice_size()), p->note);
        } else if (const auto* p = pred.find("lattice.size")) {
            sink.put(p->check, p->anchor, p->value, p->kind, static_cast<std::int64_t>(lattice->lattice_size()),
                     p->note);
        }

        BuildOptions bo{true, opt.oracle, false};
        const PermutabilityTable table = compute_permutability(lattice, bo);
        const auto& d = table.diagnostics;
        sink.stated("adjacency.closed_form", "permutability-criterion", std::int64_t{0},
                    static_cast<std::int64_t>(d.closed_form_disagreements + d.normality_disagreements),
                    std::to_string(d.closed_form_checked) + " of " + std::to_string(d.pairs) + " pairs by closed form" +
                        (d.first_disagreement.empty() ? "" : "; first: " + d.first_disagreement));
        if (opt.oracle)
            sink.stated("adjacency.closure_route", "permutability-criterion", std::int64_t{0},
                        static_cast<std::int64_t>(d.closure_disagreements));

        const PermGraph full = graph_from_table(table, GraphKind::Full);
        const PermGraph gn = graph_from_table(table, GraphKind::NonNormal);
        const auto r = static_cast<std::int64_t>(std::count(full.normal.begin(), full.normal.end(), true));
        const auto L = static_cast<std::int64_t>(lattice->lattice_size());

        InvariantOptions io;
        io.limits = opt.limits;
        io.hamiltonian = opt.hamiltonian;
        if (!opt.invariants) io.limits.max_vertices = 0;
        const InvariantReport gi = compute_invariants(gn.graph, io);
        const InvariantReport fi = compute_invariants(full.graph, io);

        const StructureResult gs = opt.structure ? nonnormal_structure(gn, spec) : StructureResult::fail("not requested");
        std::optional<PartiteResult> partite;

        auto computed_for = [&](const std::string& check) -> std::optional<Value> {
            const bool is_gn = check.rfind("gn.", 0) == 0;
            const InvariantReport& inv = is_gn ? gi : fi;
            const PermGraph& pg = is_gn ? gn : full;
            const std::string key = check.substr(check.find('.') + 1);
            if (check == "lattice.normal_count") return r;
            if (check == "modular.relation")
                return static_cast<std::int64_t>(group->presentation().multiplier);
            if (key == "vertices") return static_cast<std::int64_t>(inv.vertices);
            if (key == "edges") return static_cast<std::int64_t>(inv.edges);
            if (key == "components") return static_cast<std::int64_t>(inv.components);
            if (key == "eulerian") return inv.euler.all_degrees_even;
            if (key == "alpha") return opt_value(inv.independence);
            if (key == "gamma") return opt_value(inv.domination);
            if (key == "omega") return opt_value(inv.clique);
            if (key == "chi") return opt_value(inv.chromatic);
            if (key == "weakly_perfect") {
                if (auto w = inv.weakly_perfect()) return *w;
                return std::nullopt;
            }
            if (key == "split") return inv.split.split;
            if (key == "hamiltonian") {
                if (!opt.hamiltonian) return std::nullopt;
                return tri_value(inv.hamiltonian.verdict);
            }
            if (key == "totally_disconnected") return inv.edges == 0;
            if (key == "structure") {
                if (!opt.structure) return std::nullopt;
                return structure_value(is_gn ? gs : full_structure(full, gn, spec));
            }
            if (key == "isomorphic_to_dihedral") {
                if (!opt.structure) return std::nullopt;
                return check_quaternion_dihedral_bijection(gn, dihedral_partner(spec)).ok;
            }
            if (key == "partite_classes" || key == "partite_maximal") {
                if (!partite) partite = dihedral_partite_classes(pg);
                if (!partite->ok) return "invalid: " + partite->failure;
                if (key == "partite_classes") return static_cast<std::int64_t>(partite->classes.size());
                return partite->all_maximal;
            }
            if (key == "reflection_count") {
                if (auto x = reflection_count(full)) return *x;
                return std::nullopt;
            }
            if (key == "component_paths") {
                if (!opt.hamiltonian) return std::nullopt;
                return component_paths(gn, opt.limits);
            }
            return std::nullopt;
        };

        for (const auto& p : pred.rows) {
            if (p.check == "lattice.size") continue;
            sink.put(p.check, p.anchor, p.value, p.kind, computed_for(p.check), p.note);
        }

        sink.stated("gn.degrees", "nonnormal-degrees", static_cast<std::int64_t>(gn.vertex_count()),
                    count_matching_degrees(gn, pred.gn_degrees), "vertices whose degree matches the closed form");
        sink.stated("g.degrees", "full-degrees", static_cast<std::int64_t>(full.vertex_count()),
                    count_matching_degrees(full, pred.g_degrees), "vertices whose degree matches the closed form");

        // transfer through the join with the normal clique
        sink.stated("join.edges", "join-transfer",
                    static_cast<std::int64_t>(gi.edges) + r * (2 * L - r - 5) / 2,
                    static_cast<std::int64_t>(fi.edges));
        std::int64_t deg_ok = 0;
        for (std::size_t v = 0; v < full.vertex_count(); ++v) {
            std::int64_t want = L - 3;
            if (!full.normal[v]) want = r + static_cast<std::int64_t>(gn.graph.degree(*gn.vertex_of(full.vertices[v])));
            if (want == static_cast<std::int64_t>(full.graph.degree(v))) ++deg_ok;
        }
        sink.stated("join.degrees", "join-transfer", static_cast<std::int64_t>(full.vertex_count()), deg_ok);
        auto transfer = [&](const std::string& check, const OptimumResult& part, const OptimumResult& whole,
                            std::int64_t shift) {
            if (gn.vertex_count() == 0) {
                sink.put(check, "join-transfer", std::nullopt, PredictionKind::Stated, std::nullopt,
                         "no non-normal subgroups");
                return;
            }
            std::optional<Value> want;
            if (part.solved()) want = static_cast<std::int64_t>(part.value) + shift;
            if (!want) {
                out.rows.push_back({check, "join-transfer", "skipped", whole.solved() ? std::to_string(whole.value) : "skipped",
                                    Verdict::Skipped, "solver cap"});
                return;
            }
            sink.stated(check, "join-transfer", *want, opt_value(whole));
        };
        transfer("join.alpha", gi.independence, fi.independence, 0);
        transfer("join.omega", gi.clique, fi.clique, r);
        transfer("join.chi", gi.chromatic, fi.chromatic, r);
    } catch (const CapExceeded&) {
        throw;
    } catch (const ParameterError&) {
        throw;
    } catch (const std::exception& e) {
        out.error = e.what();
        out.rows.push_back({"instance", "-", "built", std::string("error: ") + e.what(), Verdict::Mismatch, {}});
    }
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return out;
}

struct SweepSummary {
    std::size_t instances = 0;
    std::size_t checks = 0;
    std::map<Verdict, std::size_t> counts;
    double seconds = 0;

    std::size_t mismatches() const {
        auto it = counts.find(Verdict::Mismatch);
        return it == counts.end() ? 0 : it->second;
    }
};

struct SweepResult {
    std::vector<InstanceResult> instances;
    SweepSummary summary;
};

// Runs the instances on a small thread pool; results keep the input order.
inline SweepResult run_sweep(const std::vector<GroupSpec>& specs, const VerifyOptions& opt, unsigned threads,
                             const std::function<void(const InstanceResult&)>& on_done = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    SweepResult res;
    res.instances.resize(specs.size());
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::exception_ptr failure;
    auto work = [&] {
        for (std::size_t k = next++; k < specs.size(); k = next++) {
            try {
                res.instances[k] = verify_instance(specs[k], opt);
                if (on_done) {
                    std::lock_guard lock(mu);
                    on_done(res.instances[k]);
                }
            } catch (...) {
                std::lock_guard lock(mu);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(specs.size())));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    auto& s = res.summary;
    s.instances = res.instances.size();
    for (const auto& inst : res.instances) {
        s.checks += inst.rows.size();
        for (const auto& r : inst.rows) ++s.counts[r.verdict];
    }
    s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

// Command line that reruns a single instance.
inline std::string reproducer(const GroupSpec& s) {
    std::string cmd = "permgraph verify --family " + family_name(s.family);
    switch (s.family) {
        case Family::Dihedral:
        case Family::Quaternion: return cmd + " --n " + std::to_string(s.n);
        case Family::QuasiDihedral: return cmd + " --alpha " + std::to_string(s.alpha);
        case Family::Modular: return cmd + " --p " + std::to_string(s.p) + " --alpha " + std::to_string(s.alpha);
    }
    return cmd;
}

// Default sweep: D_n n <= 60, Q_n n <= 30, QD alpha <= 8, modular order <= 243.
inline std::vector<GroupSpec> default_specs(std::optional<Family> only = std::nullopt) {
    std::vector<GroupSpec> out;
    auto want = [&](Family f) { return !only || *only == f; };
    if (want(Family::Dihedral))
        for (unsigned n = 3; n <= 60; ++n) out.push_back(GroupSpec::dihedral(n));
    if (want(Family::Quaternion))
        for (unsigned n = 2; n <= 30; ++n) out.push_back(GroupSpec::quaternion(n));
    if (want(Family::QuasiDihedral))
        for (unsigned a = 4; a <= 8; ++a) out.push_back(GroupSpec::quasidihedral(a));
    if (want(Family::Modular)) {
        for (unsigned p = 2; p <= 243; ++p) {
            if (!numtheory::is_prime(p)) continue;
            for (unsigned a = 3; numtheory::checked_pow(p, a) <= 243; ++a) out.push_back(GroupSpec::modular(p, a));
        }
    }
    return out;
}

}  // namespace permgraph
