#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "permgraph/bitset.hpp"
#include "permgraph/graph.hpp"

namespace permgraph {

struct SolverLimits {
    std::size_t max_vertices = 120;            // exact NP solvers
    std::uint64_t node_budget = 50'000'000;    // per solver call
    std::size_t hamiltonian_max_vertices = 80; // exhaustive cycle search
    double hamiltonian_seconds = 10.0;
};

enum class SolveStatus { Solved, Skipped };

// Exact optimum plus its certificate: a vertex set, or one colour per vertex.
struct OptimumResult {
    SolveStatus status = SolveStatus::Skipped;
    std::size_t value = 0;
    std::vector<std::size_t> certificate;
    std::string note;

    bool solved() const { return status == SolveStatus::Solved; }

    static OptimumResult skipped(std::string why) {
        OptimumResult r;
        r.note = std::move(why);
        return r;
    }
};

// ---- basic structure ----

inline std::vector<std::size_t> degree_sequence(const Graph& g) {
    std::vector<std::size_t> d(g.vertex_count());
    for (std::size_t v = 0; v < d.size(); ++v) d[v] = g.degree(v);
    return d;
}

inline std::vector<std::vector<std::size_t>> components_of(const Graph& g, const Bitset& within) {
    std::vector<std::vector<std::size_t>> out;
    Bitset left = within;
    while (left.any()) {
        const std::size_t s = left.first();
        Bitset comp(g.vertex_count());
        comp.set(s);
        Bitset frontier = comp;
        while (frontier.any()) {
            Bitset next(g.vertex_count());
            frontier.for_each([&](std::size_t v) { next |= g.neighbors(v); });
            next &= within;
            next -= comp;
            comp |= next;
            frontier = std::move(next);
        }
        left -= comp;
        out.push_back(comp.to_vector());
    }
    return out;
}

inline std::vector<std::vector<std::size_t>> components(const Graph& g) {
    return components_of(g, g.all());
}

inline std::size_t component_count(const Graph& g) { return components(g).size(); }

// c(G - S)
inline std::size_t components_after_removal(const Graph& g, const std::vector<std::size_t>& s) {
    Bitset rest = g.all();
    for (auto v : s) rest.reset(v);
    return components_of(g, rest).size();
}

// ---- certificate checks, independent of the solvers ----

inline bool is_clique(const Graph& g, const std::vector<std::size_t>& s) {
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            if (s[a] == s[b] || !g.adjacent(s[a], s[b])) return false;
    return true;
}

inline bool is_independent(const Graph& g, const std::vector<std::size_t>& s) {
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b)
            if (s[a] == s[b] || g.adjacent(s[a], s[b])) return false;
    return true;
}

inline bool is_dominating(const Graph& g, const std::vector<std::size_t>& s) {
    std::vector<bool> dom(g.vertex_count(), false);
    for (auto v : s) {
        dom[v] = true;
        g.neighbors(v).for_each([&](std::size_t u) { dom[u] = true; });
    }
    return std::all_of(dom.begin(), dom.end(), [](bool b) { return b; });
}

inline bool is_proper_coloring(const Graph& g, const std::vector<std::size_t>& colour) {
    if (colour.size() != g.vertex_count()) return false;
    for (std::size_t u = 0; u < colour.size(); ++u) {
        bool ok = true;
        g.neighbors(u).for_each([&](std::size_t v) {
            if (colour[u] == colour[v]) ok = false;
        });
        if (!ok) return false;
    }
    return true;
}

inline std::size_t colours_used(const std::vector<std::size_t>& colour) {
    std::vector<std::size_t> c = colour;
    std::sort(c.begin(), c.end());
    return static_cast<std::size_t>(std::unique(c.begin(), c.end()) - c.begin());
}

// Simple path through exactly the vertices of `within`.
inline bool is_hamiltonian_path(const Graph& g, const std::vector<std::size_t>& path,
                                const Bitset& within) {
    if (path.size() != within.count()) return false;
    Bitset seen(g.vertex_count());
    for (std::size_t k = 0; k < path.size(); ++k) {
        const auto v = path[k];
        if (v >= g.vertex_count() || !within.test(v) || seen.test(v)) return false;
        seen.set(v);
        if (k > 0 && !g.adjacent(path[k - 1], v)) return false;
    }
    return true;
}

inline bool is_hamiltonian_cycle(const Graph& g, const std::vector<std::size_t>& cycle) {
    if (g.vertex_count() < 3) return false;
    return is_hamiltonian_path(g, cycle, g.all()) && g.adjacent(cycle.back(), cycle.front());
}

namespace detail {

// Vertices sorted by degree descending, ties by index.
inline std::vector<std::size_t> degree_order(const Graph& g) {
    std::vector<std::size_t> ord(g.vertex_count());
    std::iota(ord.begin(), ord.end(), 0);
    std::stable_sort(ord.begin(), ord.end(),
                     [&](std::size_t a, std::size_t b) { return g.degree(a) > g.degree(b); });
    return ord;
}

inline Graph relabel(const Graph& g, const std::vector<std::size_t>& ord) {
    return g.induced(ord);
}

// Bitset branch and bound with greedy colouring bounds.
class CliqueSearch {
public:
    CliqueSearch(const Graph& g, std::uint64_t budget) : g_(g), budget_(budget) {}

    bool run() {
        Bitset p = g_.all();
        greedy_seed();
        if (p.any()) expand(p);
        return !aborted_;
    }

    const std::vector<std::size_t>& best() const { return best_; }

private:
    void greedy_seed() {
        Bitset p = g_.all();
        while (p.any()) {
            const std::size_t v = p.first();
            best_.push_back(v);
            p &= g_.neighbors(v);
        }
    }

    void expand(Bitset p) {
        if (++nodes_ > budget_) {
            aborted_ = true;
            return;
        }
        std::vector<std::size_t> order;
        std::vector<std::size_t> bound;
        Bitset uncoloured = p;
        std::size_t colour = 0;
        while (uncoloured.any()) {
            ++colour;
            Bitset q = uncoloured;
            while (q.any()) {
                const std::size_t v = q.first();
                q.reset(v);
                q -= g_.neighbors(v);
                uncoloured.reset(v);
                order.push_back(v);
                bound.push_back(colour);
            }
        }
        for (std::size_t k = order.size(); k-- > 0;) {
            if (cur_.size() + bound[k] <= best_.size()) return;
            const std::size_t v = order[k];
            cur_.push_back(v);
            Bitset np = p & g_.neighbors(v);
            if (np.none()) {
                if (cur_.size() > best_.size()) best_ = cur_;
            } else {
                expand(std::move(np));
            }
            cur_.pop_back();
            if (aborted_) return;
            p.reset(v);
        }
    }

    const Graph& g_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::vector<std::size_t> cur_;
    std::vector<std::size_t> best_;
};

}  // namespace detail

inline OptimumResult clique_number(const Graph& g, const SolverLimits& lim = {}) {
    if (g.vertex_count() > lim.max_vertices) {
        return OptimumResult::skipped("vertex count " + std::to_string(g.vertex_count()) +
                                      " exceeds cap " + std::to_string(lim.max_vertices));
    }
    const auto ord = detail::degree_order(g);
    const Graph h = detail::relabel(g, ord);
    detail::CliqueSearch s(h, lim.node_budget);
    if (!s.run()) return OptimumResult::skipped("node budget exhausted");
    OptimumResult r;
    r.status = SolveStatus::Solved;
    for (auto v : s.best()) r.certificate.push_back(ord[v]);
    std::sort(r.certificate.begin(), r.certificate.end());
    r.value = r.certificate.size();
    if (!is_clique(g, r.certificate)) throw std::logic_error("clique certificate invalid");
    return r;
}

inline OptimumResult independence_number(const Graph& g, const SolverLimits& lim = {}) {
    OptimumResult r = clique_number(g.complement(), lim);
    if (r.solved() && !is_independent(g, r.certificate)) {
        throw std::logic_error("independent set certificate invalid");
    }
    return r;
}

namespace detail {

// DSATUR branch and bound; the clique `seed` is precoloured 0..k-1.
class ColouringSearch {
public:
    ColouringSearch(const Graph& g, std::uint64_t budget)
        : g_(g), n_(g.vertex_count()), budget_(budget), colour_(n_, kNone),
          ncount_(n_, std::vector<std::uint16_t>(n_ + 1, 0)), sat_(n_, 0) {}

    bool run(const std::vector<std::size_t>& seed, std::size_t lower) {
        lower_ = std::max<std::size_t>(lower, seed.size());
        best_ = greedy();
        best_k_ = colours_used(best_);
        if (best_k_ <= lower_) return true;
        std::size_t used = 0;
        for (auto v : seed) assign(v, used++);
        search(seed.size(), used);
        return !aborted_;
    }

    const std::vector<std::size_t>& best() const { return best_; }
    std::size_t best_count() const { return best_k_; }

private:
    static constexpr std::size_t kNone = static_cast<std::size_t>(-1);

    std::vector<std::size_t> greedy() const {
        std::vector<std::size_t> col(n_, kNone);
        std::vector<std::vector<bool>> near(n_, std::vector<bool>(n_ + 1, false));
        std::vector<std::size_t> sat(n_, 0);
        for (std::size_t step = 0; step < n_; ++step) {
            std::size_t pick = kNone;
            for (std::size_t v = 0; v < n_; ++v) {
                if (col[v] != kNone) continue;
                if (pick == kNone || sat[v] > sat[pick] ||
                    (sat[v] == sat[pick] && g_.degree(v) > g_.degree(pick))) {
                    pick = v;
                }
            }
            std::size_t c = 0;
            while (near[pick][c]) ++c;
            col[pick] = c;
            g_.neighbors(pick).for_each([&](std::size_t u) {
                if (!near[u][c]) {
                    near[u][c] = true;
                    ++sat[u];
                }
            });
        }
        return col;
    }

    void assign(std::size_t v, std::size_t c) {
        colour_[v] = c;
        g_.neighbors(v).for_each([&](std::size_t u) {
            if (ncount_[u][c]++ == 0) ++sat_[u];
        });
    }

    void unassign(std::size_t v) {
        const std::size_t c = colour_[v];
        colour_[v] = kNone;
        g_.neighbors(v).for_each([&](std::size_t u) {
            if (--ncount_[u][c] == 0) --sat_[u];
        });
    }

    void search(std::size_t coloured, std::size_t used) {
        if (aborted_ || best_k_ <= lower_) return;
        if (++nodes_ > budget_) {
            aborted_ = true;
            return;
        }
        if (coloured == n_) {
            if (used < best_k_) {
                best_ = colour_;
                best_k_ = used;
            }
            return;
        }
        std::size_t pick = kNone;
        for (std::size_t v = 0; v < n_; ++v) {
            if (colour_[v] != kNone) continue;
            if (pick == kNone || sat_[v] > sat_[pick] ||
                (sat_[v] == sat_[pick] && g_.degree(v) > g_.degree(pick))) {
                pick = v;
            }
        }
        for (std::size_t c = 0; c <= used && c + 1 < best_k_; ++c) {
            if (ncount_[pick][c] != 0) continue;
            assign(pick, c);
            search(coloured + 1, std::max(used, c + 1));
            unassign(pick);
            if (aborted_ || best_k_ <= lower_) return;
        }
    }

    const Graph& g_;
    std::size_t n_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::size_t lower_ = 0;
    std::vector<std::size_t> colour_;
    std::vector<std::vector<std::uint16_t>> ncount_;
    std::vector<std::size_t> sat_;
    std::vector<std::size_t> best_;
    std::size_t best_k_ = 0;
};

}  // namespace detail

// Pass a solved clique result to reuse it as the lower bound and precoloured seed.
inline OptimumResult chromatic_number(const Graph& g, const SolverLimits& lim = {},
                                      const OptimumResult* clique = nullptr) {
    if (g.vertex_count() > lim.max_vertices) {
        return OptimumResult::skipped("vertex count " + std::to_string(g.vertex_count()) +
                                      " exceeds cap " + std::to_string(lim.max_vertices));
    }
    OptimumResult r;
    r.status = SolveStatus::Solved;
    if (g.vertex_count() == 0) return r;
    OptimumResult own;
    if (clique == nullptr || !clique->solved()) {
        own = clique_number(g, lim);
        if (!own.solved()) return OptimumResult::skipped("clique bound: " + own.note);
        clique = &own;
    }
    detail::ColouringSearch s(g, lim.node_budget);
    if (!s.run(clique->certificate, clique->value)) {
        return OptimumResult::skipped("node budget exhausted");
    }
    r.certificate = s.best();
    r.value = s.best_count();
    if (!is_proper_coloring(g, r.certificate) || colours_used(r.certificate) != r.value) {
        throw std::logic_error("colouring certificate invalid");
    }
    return r;
}

namespace detail {

class DominationSearch {
public:
    DominationSearch(const Graph& g, const std::vector<std::size_t>& comp, std::uint64_t budget)
        : g_(g), budget_(budget), closed_(g.vertex_count(), Bitset(g.vertex_count())),
          within_(g.vertex_count()) {
        for (auto v : comp) within_.set(v);
        for (auto v : comp) {
            closed_[v] = g.neighbors(v) & within_;
            closed_[v].set(v);
        }
        comp_ = comp;
    }

    bool run() {
        greedy();
        std::vector<std::size_t> chosen;
        Bitset excluded(g_.vertex_count());
        search(within_, chosen, excluded);
        return !aborted_;
    }

    const std::vector<std::size_t>& best() const { return best_; }

private:
    void greedy() {
        Bitset u = within_;
        best_.clear();
        while (u.any()) {
            std::size_t pick = 0;
            std::size_t cover = 0;
            for (auto w : comp_) {
                const std::size_t c = closed_[w].intersection_count(u);
                if (c > cover) {
                    cover = c;
                    pick = w;
                }
            }
            best_.push_back(pick);
            u -= closed_[pick];
        }
    }

    void search(const Bitset& undominated, std::vector<std::size_t>& chosen, Bitset excluded) {
        if (aborted_) return;
        if (++nodes_ > budget_) {
            aborted_ = true;
            return;
        }
        if (undominated.none()) {
            if (chosen.size() < best_.size()) best_ = chosen;
            return;
        }
        if (chosen.size() + 1 >= best_.size()) return;
        std::size_t max_cover = 0;
        for (auto w : comp_) {
            if (!excluded.test(w)) max_cover = std::max(max_cover, closed_[w].intersection_count(undominated));
        }
        if (max_cover == 0) return;
        const std::size_t need = (undominated.count() + max_cover - 1) / max_cover;
        if (chosen.size() + need >= best_.size()) return;

        std::size_t target = Bitset::npos;
        std::size_t fewest = static_cast<std::size_t>(-1);
        undominated.for_each([&](std::size_t u) {
            const std::size_t c = (closed_[u] - excluded).count();
            if (c < fewest) {
                fewest = c;
                target = u;
            }
        });
        if (fewest == 0) return;
        std::vector<std::size_t> cand = (closed_[target] - excluded).to_vector();
        std::stable_sort(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) {
            return closed_[a].intersection_count(undominated) >
                   closed_[b].intersection_count(undominated);
        });
        for (auto w : cand) {
            chosen.push_back(w);
            search(undominated - closed_[w], chosen, excluded);
            chosen.pop_back();
            if (aborted_) return;
            excluded.set(w);
        }
    }

    const Graph& g_;
    std::uint64_t budget_;
    std::uint64_t nodes_ = 0;
    bool aborted_ = false;
    std::vector<Bitset> closed_;
    Bitset within_;
    std::vector<std::size_t> comp_;
    std::vector<std::size_t> best_;
};

}  // namespace detail

// Solved component by component.
inline OptimumResult domination_number(const Graph& g, const SolverLimits& lim = {}) {
    if (g.vertex_count() > lim.max_vertices) {
        return OptimumResult::skipped("vertex count " + std::to_string(g.vertex_count()) +
                                      " exceeds cap " + std::to_string(lim.max_vertices));
    }
    OptimumResult r;
    r.status = SolveStatus::Solved;
    for (const auto& comp : components(g)) {
        detail::DominationSearch s(g, comp, lim.node_budget);
        if (!s.run()) return OptimumResult::skipped("node budget exhausted");
        r.certificate.insert(r.certificate.end(), s.best().begin(), s.best().end());
    }
    std::sort(r.certificate.begin(), r.certificate.end());
    r.value = r.certificate.size();
    if (!is_dominating(g, r.certificate)) throw std::logic_error("dominating set certificate invalid");
    return r;
}

// ---- Eulerian and split ----

struct EulerianResult {
    bool all_degrees_even = true;
    bool connected_edges = true;  // every edge lies in one component
    bool eulerian() const { return all_degrees_even && connected_edges; }
};

inline EulerianResult eulerian(const Graph& g) {
    EulerianResult e;
    std::size_t with_edges = 0;
    for (const auto& c : components(g)) {
        if (c.size() > 1) ++with_edges;
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) % 2 != 0) e.all_degrees_even = false;
    }
    e.connected_edges = with_edges <= 1;
    return e;
}

struct SplitResult {
    bool split = false;
    std::vector<std::size_t> clique;
    std::vector<std::size_t> independent;
};

// Degree-sequence test, with the partition it implies checked directly.
inline SplitResult split_partition(const Graph& g) {
    SplitResult s;
    const std::size_t n = g.vertex_count();
    const auto ord = detail::degree_order(g);
    std::size_t m = 0;
    for (std::size_t k = 0; k < n; ++k) {
        if (g.degree(ord[k]) + 1 >= k + 1) m = k + 1;
    }
    std::size_t lhs = 0;
    std::size_t rhs = m * (m == 0 ? 0 : m - 1);
    for (std::size_t k = 0; k < n; ++k) (k < m ? lhs : rhs) += g.degree(ord[k]);
    s.split = lhs == rhs;
    if (s.split) {
        s.clique.assign(ord.begin(), ord.begin() + static_cast<std::ptrdiff_t>(m));
        s.independent.assign(ord.begin() + static_cast<std::ptrdiff_t>(m), ord.end());
        std::sort(s.clique.begin(), s.clique.end());
        std::sort(s.independent.begin(), s.independent.end());
        if (!is_clique(g, s.clique) || !is_independent(g, s.independent)) {
            throw std::logic_error("split partition invalid");
        }
    }
    return s;
}

inline bool is_split(const Graph& g) { return split_partition(g).split; }

// ---- Hamiltonicity ----

enum class Tri { Yes, No, Unknown };

inline std::string tri_name(Tri t) {
    switch (t) {
        case Tri::Yes: return "yes";
        case Tri::No: return "no";
        case Tri::Unknown: return "unknown";
    }
    return "?";
}

struct HamiltonResult {
    Tri verdict = Tri::Unknown;
    std::vector<std::size_t> cycle;    // verdict yes
    std::vector<std::size_t> cut_set;  // verdict no via c(G-S) > |S|
    std::size_t cut_components = 0;
    std::string reason;
};

namespace detail {

inline std::vector<std::size_t> articulation_points(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<std::size_t> disc(n, 0), low(n, 0), parent(n, Bitset::npos);
    std::vector<bool> cut(n, false);
    std::size_t timer = 0;
    for (std::size_t root = 0; root < n; ++root) {
        if (disc[root] != 0) continue;
        // iterative DFS; stack holds (vertex, next neighbour to scan)
        std::vector<std::pair<std::size_t, std::size_t>> st{{root, 0}};
        disc[root] = low[root] = ++timer;
        std::size_t root_children = 0;
        while (!st.empty()) {
            auto& [v, from] = st.back();
            const std::size_t w = from == 0 ? g.neighbors(v).first() : g.neighbors(v).next(from - 1);
            if (w == Bitset::npos) {
                const std::size_t done = v;
                st.pop_back();
                if (!st.empty()) {
                    const std::size_t p = st.back().first;
                    low[p] = std::min(low[p], low[done]);
                    if (parent[p] != Bitset::npos && low[done] >= disc[p]) cut[p] = true;
                }
                continue;
            }
            from = w + 1;
            if (disc[w] == 0) {
                parent[w] = v;
                if (v == root) ++root_children;
                disc[w] = low[w] = ++timer;
                st.emplace_back(w, 0);
            } else if (w != parent[v]) {
                low[v] = std::min(low[v], disc[w]);
            }
        }
        if (root_children > 1) cut[root] = true;
    }
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < n; ++v)
        if (cut[v]) out.push_back(v);
    return out;
}

class CycleSearch {
public:
    CycleSearch(const Graph& g, double seconds)
        : g_(g), n_(g.vertex_count()), unvisited_(g.all()),
          deadline_(std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(seconds))) {}

    Tri run() {
        start_ = 0;
        for (std::size_t v = 1; v < n_; ++v)
            if (g_.degree(v) < g_.degree(start_)) start_ = v;
        path_.push_back(start_);
        unvisited_.reset(start_);
        if (extend(start_)) return Tri::Yes;
        return timed_out_ ? Tri::Unknown : Tri::No;
    }

    const std::vector<std::size_t>& cycle() const { return path_; }

private:
    bool feasible(std::size_t last) const {
        if (unvisited_.none()) return true;
        Bitset ends = unvisited_;
        ends.set(last);
        ends.set(start_);
        bool ok = true;
        unvisited_.for_each([&](std::size_t x) {
            if (ok && g_.neighbors(x).intersection_count(ends) < 2) ok = false;
        });
        if (!ok) return false;
        if (!g_.neighbors(start_).intersects(unvisited_)) return false;
        // unvisited vertices must stay in one piece
        const std::size_t s = unvisited_.first();
        Bitset reach(n_);
        reach.set(s);
        Bitset frontier = reach;
        while (frontier.any()) {
            Bitset next(n_);
            frontier.for_each([&](std::size_t v) { next |= g_.neighbors(v); });
            next &= unvisited_;
            next -= reach;
            reach |= next;
            frontier = std::move(next);
        }
        return reach.count() == unvisited_.count();
    }

    bool extend(std::size_t last) {
        if ((++nodes_ & 1023U) == 0 && std::chrono::steady_clock::now() > deadline_) {
            timed_out_ = true;
        }
        if (timed_out_) return false;
        if (unvisited_.none()) return n_ >= 3 && g_.adjacent(last, start_);
        std::vector<std::size_t> cand = (g_.neighbors(last) & unvisited_).to_vector();
        std::vector<std::size_t> score(n_, 0);
        for (auto c : cand) score[c] = g_.neighbors(c).intersection_count(unvisited_);
        std::stable_sort(cand.begin(), cand.end(),
                         [&](std::size_t a, std::size_t b) { return score[a] < score[b]; });
        for (auto c : cand) {
            path_.push_back(c);
            unvisited_.reset(c);
            if (feasible(c) && extend(c)) return true;
            unvisited_.set(c);
            path_.pop_back();
            if (timed_out_) return false;
        }
        return false;
    }

    const Graph& g_;
    std::size_t n_;
    std::size_t start_ = 0;
    Bitset unvisited_;
    std::vector<std::size_t> path_;
    std::chrono::steady_clock::time_point deadline_;
    std::uint64_t nodes_ = 0;
    bool timed_out_ = false;
};

inline bool try_witness(const Graph& g, std::vector<std::size_t> s, const std::string& why,
                        HamiltonResult& out) {
    if (s.empty() || s.size() >= g.vertex_count()) return false;
    std::sort(s.begin(), s.end());
    const std::size_t c = components_after_removal(g, s);
    if (c <= s.size()) return false;
    out.verdict = Tri::No;
    out.cut_set = std::move(s);
    out.cut_components = c;
    out.reason = why;
    return true;
}

}  // namespace detail

// Tries cut-set refutations first, then an exhaustive search under the caps.
// An independent set, when supplied, is tried as the complement witness.
inline HamiltonResult hamiltonian_cycle(const Graph& g, const SolverLimits& lim = {},
                                        const std::vector<std::size_t>* independent = nullptr) {
    HamiltonResult r;
    const std::size_t n = g.vertex_count();
    if (n < 3) {
        r.verdict = Tri::No;
        r.reason = "fewer than 3 vertices";
        return r;
    }
    const auto comps = components(g);
    if (comps.size() > 1) {
        const auto& big = *std::max_element(comps.begin(), comps.end(),
                                            [](const auto& a, const auto& b) { return a.size() < b.size(); });
        if (detail::try_witness(g, {big.front()}, "disconnected", r)) return r;
    }
    for (std::size_t v = 0; v < n; ++v) {
        if (g.degree(v) == 1 && detail::try_witness(g, {g.neighbors(v).first()}, "vertex of degree 1", r)) {
            return r;
        }
    }
    for (auto v : detail::articulation_points(g)) {
        if (detail::try_witness(g, {v}, "cut vertex", r)) return r;
    }
    std::vector<std::size_t> universal;
    for (std::size_t v = 0; v < n; ++v)
        if (g.degree(v) + 1 == n) universal.push_back(v);
    if (detail::try_witness(g, universal, "universal vertices separate too many components", r)) {
        return r;
    }
    auto complement_of = [&](const std::vector<std::size_t>& ind) {
        Bitset s = g.all();
        for (auto v : ind) s.reset(v);
        return s.to_vector();
    };
    if (independent != nullptr && is_independent(g, *independent)) {
        if (detail::try_witness(g, complement_of(*independent), "large independent set", r)) return r;
    }
    {
        // greedy maximal independent set, low degree first
        auto ord = detail::degree_order(g);
        std::reverse(ord.begin(), ord.end());
        Bitset blocked(n);
        std::vector<std::size_t> ind;
        for (auto v : ord) {
            if (blocked.test(v)) continue;
            ind.push_back(v);
            blocked.set(v);
            blocked |= g.neighbors(v);
        }
        if (detail::try_witness(g, complement_of(ind), "large independent set", r)) return r;
    }
    if (n > lim.hamiltonian_max_vertices) {
        r.reason = "vertex count " + std::to_string(n) + " exceeds search cap " +
                   std::to_string(lim.hamiltonian_max_vertices);
        return r;
    }
    detail::CycleSearch s(g, lim.hamiltonian_seconds);
    r.verdict = s.run();
    if (r.verdict == Tri::Yes) {
        r.cycle = s.cycle();
        if (!is_hamiltonian_cycle(g, r.cycle)) throw std::logic_error("cycle certificate invalid");
        r.reason = "cycle found";
    } else if (r.verdict == Tri::No) {
        r.reason = "search exhausted";
    } else {
        r.reason = "time budget exhausted";
    }
    return r;
}

struct PathResult {
    Tri verdict = Tri::Unknown;
    std::vector<std::size_t> path;
    std::string reason;
};

// Hamiltonian path inside the vertex set `comp`, via a cycle in comp + K_1.
inline PathResult hamiltonian_path(const Graph& g, const std::vector<std::size_t>& comp,
                                   const SolverLimits& lim = {}) {
    PathResult r;
    if (comp.size() <= 2) {
        const bool ok = comp.size() < 2 || g.adjacent(comp[0], comp[1]);
        r.verdict = ok ? Tri::Yes : Tri::No;
        if (ok) r.path = comp;
        r.reason = "trivial";
        return r;
    }
    Graph h(comp.size() + 1);
    for (std::size_t a = 0; a < comp.size(); ++a) {
        h.add_edge(a, comp.size());
        for (std::size_t b = a + 1; b < comp.size(); ++b)
            if (g.adjacent(comp[a], comp[b])) h.add_edge(a, b);
    }
    SolverLimits l = lim;
    l.hamiltonian_max_vertices = lim.hamiltonian_max_vertices + 1;
    const HamiltonResult c = hamiltonian_cycle(h, l);
    r.verdict = c.verdict;
    r.reason = c.reason;
    if (c.verdict != Tri::Yes) return r;
    const auto cut = std::find(c.cycle.begin(), c.cycle.end(), comp.size());
    for (auto it = cut + 1; it != c.cycle.end(); ++it) r.path.push_back(comp[*it]);
    for (auto it = c.cycle.begin(); it != cut; ++it) r.path.push_back(comp[*it]);
    Bitset within(g.vertex_count());
    for (auto v : comp) within.set(v);
    if (!is_hamiltonian_path(g, r.path, within)) throw std::logic_error("path certificate invalid");
    return r;
}

// ---- everything at once ----

struct InvariantReport {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    std::vector<std::size_t> degrees;
    std::size_t components = 0;
    OptimumResult independence;
    OptimumResult domination;
    OptimumResult clique;
    OptimumResult chromatic;
    EulerianResult euler;
    HamiltonResult hamiltonian;
    SplitResult split;

    std::optional<bool> weakly_perfect() const {
        if (!clique.solved() || !chromatic.solved()) return std::nullopt;
        return clique.value == chromatic.value;
    }
};

struct InvariantOptions {
    SolverLimits limits;
    bool hamiltonian = true;
};

inline InvariantReport compute_invariants(const Graph& g, const InvariantOptions& opt = {}) {
    InvariantReport r;
    r.vertices = g.vertex_count();
    r.edges = g.edge_count();
    r.degrees = degree_sequence(g);
    r.components = component_count(g);
    r.clique = clique_number(g, opt.limits);
    r.chromatic = chromatic_number(g, opt.limits, &r.clique);
    r.independence = independence_number(g, opt.limits);
    r.domination = domination_number(g, opt.limits);
    r.euler = eulerian(g);
    r.split = split_partition(g);
    if (opt.hamiltonian) {
        r.hamiltonian = hamiltonian_cycle(g, opt.limits,
                                          r.independence.solved() ? &r.independence.certificate : nullptr);
    } else {
        r.hamiltonian.reason = "not requested";
    }
    return r;
}

}  // namespace permgraph
