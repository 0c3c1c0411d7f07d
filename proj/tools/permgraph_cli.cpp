// permgraph: build, inspect and verify permutability graphs of subgroups.
//
//   permgraph build --family dihedral --n 15 --kind nonnormal --format dot
//   permgraph invariants --family quasidihedral --alpha 4 --kind full
//   permgraph verify --family dihedral --n 3..40
//   permgraph hamiltonian-sweep --family quaternion --n 2..20
//
// Exit codes: 0 ok, 1 usage error, 2 verification mismatch, 3 cap exceeded.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "permgraph/formulas.hpp"
#include "permgraph/graph.hpp"
#include "permgraph/invariants.hpp"
#include "permgraph/report.hpp"
#include "permgraph/verify.hpp"

namespace pg = permgraph;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kMismatch = 2;
constexpr int kCap = 3;

// "7", "3..40", "3,5,9" or "2..10,15".
std::vector<unsigned> parse_range(const std::string& text, const char* flag) {
    std::vector<unsigned> out;
    std::stringstream ss(text);
    std::string part;
    auto num = [&](const std::string& s) -> unsigned {
        std::size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(s, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != s.size() || v > 1'000'000) {
            throw pg::ParameterError(std::string(flag) + ": cannot parse '" + s + "'");
        }
        return static_cast<unsigned>(v);
    };
    while (std::getline(ss, part, ',')) {
        const auto dots = part.find("..");
        if (dots == std::string::npos) {
            out.push_back(num(part));
            continue;
        }
        const unsigned lo = num(part.substr(0, dots));
        const unsigned hi = num(part.substr(dots + 2));
        if (lo > hi) throw pg::ParameterError(std::string(flag) + ": empty range '" + part + "'");
        for (unsigned v = lo; v <= hi; ++v) out.push_back(v);
    }
    if (out.empty()) throw pg::ParameterError(std::string(flag) + ": empty range");
    return out;
}

struct GroupArgs {
    std::string family;
    std::string n;
    std::string p;
    std::string alpha;
    std::uint64_t max_order = 512;

    void add_to(CLI::App* app, bool ranges) {
        app->add_option("--family", family, "dihedral | quaternion | quasidihedral | modular")->required(!ranges);
        const char* shape = ranges ? "parameter or range, e.g. 3..40" : "parameter";
        app->add_option("--n", n, std::string("D_n / Q_n ") + shape);
        app->add_option("--p", p, std::string("prime of M_{p^alpha} ") + shape);
        app->add_option("--alpha", alpha, std::string("exponent for QD_{2^alpha}, M_{p^alpha} ") + shape);
        app->add_option("--max-order", max_order, "largest group order to build")->capture_default_str();
    }

    void check_order(const pg::GroupSpec& s) const {
        if (s.order() > max_order) {
            throw pg::CapExceeded(s.name() + " has order " + std::to_string(s.order()) + " > --max-order " +
                                  std::to_string(max_order));
        }
    }

    std::vector<pg::GroupSpec> specs(bool ranges) const {
        std::vector<pg::GroupSpec> out;
        if (family.empty()) {
            if (!n.empty() || !p.empty() || !alpha.empty())
                throw pg::ParameterError("--family is required with --n, --p or --alpha");
            for (const auto& s : pg::default_specs())
                if (s.order() <= max_order) out.push_back(s);
            return out;
        }
        const pg::Family f = pg::parse_family(family);
        auto values = [&](const std::string& v, const char* flag) {
            auto r = parse_range(v, flag);
            if (!ranges && r.size() != 1) throw pg::ParameterError(std::string(flag) + " takes a single value here");
            return r;
        };
        switch (f) {
            case pg::Family::Dihedral:
            case pg::Family::Quaternion:
                if (!p.empty() || !alpha.empty()) throw pg::ParameterError(family + " takes --n only");
                if (n.empty()) {
                    if (!ranges) throw pg::ParameterError("--n is required for " + family);
                    for (const auto& s : pg::default_specs(f))
                        if (s.order() <= max_order) out.push_back(s);
                    return out;
                }
                for (unsigned v : values(n, "--n"))
                    out.push_back(f == pg::Family::Dihedral ? pg::GroupSpec::dihedral(v) : pg::GroupSpec::quaternion(v));
                break;
            case pg::Family::QuasiDihedral:
                if (!n.empty() || !p.empty()) throw pg::ParameterError("quasidihedral takes --alpha only");
                if (alpha.empty()) {
                    if (!ranges) throw pg::ParameterError("--alpha is required for quasidihedral");
                    for (const auto& s : pg::default_specs(f))
                        if (s.order() <= max_order) out.push_back(s);
                    return out;
                }
                for (unsigned v : values(alpha, "--alpha")) out.push_back(pg::GroupSpec::quasidihedral(v));
                break;
            case pg::Family::Modular:
                if (!n.empty()) throw pg::ParameterError("modular takes --p and --alpha");
                if (p.empty() || alpha.empty()) {
                    if (!ranges) throw pg::ParameterError("--p and --alpha are required for modular");
                    // enumerate every M_{p^alpha} within --max-order, restricted by whichever flag is given
                    std::optional<std::vector<unsigned>> ps, as;
                    if (!p.empty()) ps = values(p, "--p");
                    if (!alpha.empty()) as = values(alpha, "--alpha");
                    for (unsigned q = 2; q <= max_order; ++q) {
                        if (!pg::numtheory::is_prime(q)) continue;
                        if (ps && std::find(ps->begin(), ps->end(), q) == ps->end()) continue;
                        for (unsigned a = 3; pg::numtheory::checked_pow(q, a) <= max_order; ++a) {
                            if (as && std::find(as->begin(), as->end(), a) == as->end()) continue;
                            out.push_back(pg::GroupSpec::modular(q, a));
                        }
                    }
                    return out;
                }
                for (unsigned q : values(p, "--p"))
                    for (unsigned a : values(alpha, "--alpha")) out.push_back(pg::GroupSpec::modular(q, a));
                break;
        }
        for (const auto& s : out) {
            s.validate();
            check_order(s);
        }
        return out;
    }
};

struct LimitArgs {
    pg::SolverLimits limits;

    void add_to(CLI::App* app) {
        app->add_option("--max-vertices", limits.max_vertices, "vertex cap for the exact NP solvers")
            ->capture_default_str();
        app->add_option("--node-budget", limits.node_budget, "search nodes per solver call")->capture_default_str();
        app->add_option("--ham-max-vertices", limits.hamiltonian_max_vertices,
                        "vertex cap for the exhaustive Hamiltonian search")
            ->capture_default_str();
        app->add_option("--ham-seconds", limits.hamiltonian_seconds, "time budget per Hamiltonian search")
            ->capture_default_str();
    }
};

void emit(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw pg::ParameterError("cannot write " + path);
    f << text;
}

int cmd_build(const GroupArgs& g, const std::string& kind, const std::string& format, const std::string& out) {
    const auto spec = g.specs(false).front();
    const auto pgraph = pg::build_graph(spec, pg::parse_kind(kind));
    if (format == "dot") emit(pg::to_dot(pgraph), out);
    else emit(pg::graph_report(pgraph), out);
    return kOk;
}

int cmd_invariants(const GroupArgs& g, const LimitArgs& l, const std::string& kind, bool no_ham,
                   const std::string& out) {
    const auto spec = g.specs(false).front();
    const auto pgraph = pg::build_graph(spec, pg::parse_kind(kind));
    pg::InvariantOptions opt;
    opt.limits = l.limits;
    opt.hamiltonian = !no_ham;
    emit(pg::invariants_report(pgraph, pg::compute_invariants(pgraph.graph, opt)), out);
    return kOk;
}

int cmd_verify(const GroupArgs& g, const LimitArgs& l, unsigned threads, bool no_ham, bool full_report,
               const std::string& out) {
    const auto specs = g.specs(true);
    pg::VerifyOptions opt;
    opt.limits = l.limits;
    opt.hamiltonian = !no_ham;
    const auto res = pg::run_sweep(specs, opt, threads);
    if (full_report || !out.empty()) emit(pg::sweep_report(res), out.empty() ? "-" : out);
    if (!full_report) {
        for (const auto& inst : res.instances) {
            for (const auto& r : inst.rows) {
                if (r.verdict != pg::Verdict::Mismatch && r.verdict != pg::Verdict::Erratum) continue;
                std::cout << pg::verdict_name(r.verdict) << "\t" << inst.spec.name() << "\t" << r.check
                          << "\tpredicted=" << r.predicted << "\tcomputed=" << r.computed
                          << (r.note.empty() ? "" : "\t" + r.note) << "\n";
            }
        }
        const auto& s = res.summary;
        std::cout << "instances: " << s.instances << "  checks: " << s.checks;
        for (pg::Verdict v : {pg::Verdict::Match, pg::Verdict::Mismatch, pg::Verdict::Skipped,
                              pg::Verdict::PaperOpen, pg::Verdict::Erratum}) {
            auto it = s.counts.find(v);
            std::cout << "  " << pg::verdict_name(v) << ": " << (it == s.counts.end() ? 0 : it->second);
        }
        std::cout << "  seconds: " << std::fixed << std::setprecision(1) << s.seconds << "\n";
    }
    if (res.summary.mismatches() == 0) return kOk;
    for (const auto& inst : res.instances) {
        if (inst.count(pg::Verdict::Mismatch) > 0) {
            std::cerr << "first mismatch; reproduce with: " << pg::reproducer(inst.spec) << "\n";
            break;
        }
    }
    return kMismatch;
}

int cmd_hamiltonian_sweep(const GroupArgs& g, const LimitArgs& l, const std::string& kind_filter) {
    const auto specs = g.specs(true);
    bool disagreement = false;
    std::cout << "graph\tvertices\tcomputed\tpredicted\tstatus\treason\n";
    for (const auto& spec : specs) {
        const auto pred = pg::predict(spec);
        const auto lat = std::make_shared<const pg::SubgroupLattice>(pg::enumerate_catalog(pg::build_group(spec)));
        const auto table = pg::compute_permutability(lat, pg::BuildOptions{false, false, true});
        for (pg::GraphKind kind : {pg::GraphKind::NonNormal, pg::GraphKind::Full}) {
            if (!kind_filter.empty() && pg::parse_kind(kind_filter) != kind) continue;
            const auto pgraph = pg::graph_from_table(table, kind);
            if (pgraph.vertex_count() == 0) continue;
            const auto h = pg::hamiltonian_cycle(pgraph.graph, l.limits);
            const auto* p = pred.find(kind == pg::GraphKind::Full ? "g.hamiltonian" : "gn.hamiltonian");
            std::string predicted = "-";
            std::string status = "no-prediction";
            if (p && p->kind == pg::PredictionKind::PaperOpen) {
                predicted = "paper-open";
                status = "empirical";
            } else if (p && p->value) {
                const bool want = std::get<bool>(*p->value);
                predicted = want ? "yes" : "no";
                if (h.verdict == pg::Tri::Unknown) {
                    status = "unresolved";
                } else if ((h.verdict == pg::Tri::Yes) == want) {
                    status = "agree";
                } else {
                    status = "DISAGREE";
                    disagreement = true;
                }
            }
            std::cout << pgraph.name() << "\t" << pgraph.vertex_count() << "\t" << pg::tri_name(h.verdict) << "\t"
                      << predicted << "\t" << status << "\t" << (h.reason.empty() ? "-" : h.reason) << "\n";
        }
    }
    return disagreement ? kMismatch : kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Permutability graphs of subgroups of dihedral, quaternion, quasi-dihedral and modular groups"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "accepted and ignored; every computation is deterministic");

    GroupArgs build_g;
    std::string build_kind = "full", build_format = "dot", build_out;
    auto* build = app.add_subcommand("build", "build a graph and write DOT or a structured report");
    build_g.add_to(build, false);
    build->add_option("--kind", build_kind, "full | nonnormal")->capture_default_str();
    build->add_option("--format", build_format, "dot | report")
        ->check(CLI::IsMember({"dot", "report"}))
        ->capture_default_str();
    build->add_option("--output,-o", build_out, "output file (default stdout)");

    GroupArgs inv_g;
    LimitArgs inv_l;
    std::string inv_kind = "full", inv_out;
    bool inv_no_ham = false;
    auto* inv = app.add_subcommand("invariants", "exact invariants with certificates");
    inv_g.add_to(inv, false);
    inv_l.add_to(inv);
    inv->add_option("--kind", inv_kind, "full | nonnormal")->capture_default_str();
    inv->add_flag("--no-hamiltonian", inv_no_ham, "skip the Hamiltonian cycle search");
    inv->add_option("--output,-o", inv_out, "output file (default stdout)");

    GroupArgs ver_g;
    LimitArgs ver_l;
    unsigned threads = std::max(1U, std::thread::hardware_concurrency());
    bool ver_no_ham = false, ver_report = false;
    std::string ver_out;
    auto* ver = app.add_subcommand("verify", "diff every closed-form prediction against brute force");
    ver_g.add_to(ver, true);
    ver_l.add_to(ver);
    ver->add_option("--threads", threads, "worker threads")->capture_default_str();
    ver->add_flag("--no-hamiltonian", ver_no_ham, "skip Hamiltonian searches");
    ver->add_flag("--report", ver_report, "print the full structured report instead of the summary");
    ver->add_option("--output,-o", ver_out, "also write the full structured report to this file");

    GroupArgs ham_g;
    LimitArgs ham_l;
    std::string ham_kind;
    auto* ham = app.add_subcommand("hamiltonian-sweep", "empirical Hamiltonicity table");
    ham_g.add_to(ham, true);
    ham_l.add_to(ham);
    ham->add_option("--kind", ham_kind, "full | nonnormal (default both)");

    for (auto* sub : {build, inv, ver, ham}) sub->add_option("--seed", seed, "accepted and ignored");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*build) return cmd_build(build_g, build_kind, build_format, build_out);
        if (*inv) return cmd_invariants(inv_g, inv_l, inv_kind, inv_no_ham, inv_out);
        if (*ver) return cmd_verify(ver_g, ver_l, threads, ver_no_ham, ver_report, ver_out);
        if (*ham) return cmd_hamiltonian_sweep(ham_g, ham_l, ham_kind);
    } catch (const pg::CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return kCap;
    } catch (const pg::ParameterError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kMismatch;
    }
    return kUsage;
}
