#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "permgraph/bitset.hpp"
#include "permgraph/groups.hpp"
#include "permgraph/numtheory.hpp"

namespace permgraph {

enum class SubgroupKind : std::uint8_t {
    Cyclic,            // subgroup of <a>, r = order
    Reflection,        // <b a^(i-1)>, r = 1
    DihedralSub,       // <a^(n/r), b a^(i-1)>, order 2r
    CyclicFour,        // <a^i b> in a quaternion group, r = 1
    QuaternionSub,     // <a^(n/r), a^i b>, order 4r
    ModularCyclic,     // cyclic subgroup of M outside <a>, r = order, i = coset index
    ModularNoncyclic,  // <a^(p^k), b>, r = order
};

inline std::string kind_name(SubgroupKind k) {
    switch (k) {
        case SubgroupKind::Cyclic: return "cyclic";
        case SubgroupKind::Reflection: return "reflection";
        case SubgroupKind::DihedralSub: return "dihedral";
        case SubgroupKind::CyclicFour: return "cyclic4";
        case SubgroupKind::QuaternionSub: return "quaternion";
        case SubgroupKind::ModularCyclic: return "modular-cyclic";
        case SubgroupKind::ModularNoncyclic: return "modular-noncyclic";
    }
    return "?";
}

struct CatalogLabel {
    SubgroupKind kind = SubgroupKind::Cyclic;
    unsigned r = 0;
    unsigned i = 0;

    auto operator<=>(const CatalogLabel&) const = default;

    // Contains elements outside <a> with b-exponent one (dihedral or quaternion type).
    bool dihedral_type() const {
        return kind == SubgroupKind::Reflection || kind == SubgroupKind::DihedralSub;
    }
    bool quaternion_type() const {
        return kind == SubgroupKind::CyclicFour || kind == SubgroupKind::QuaternionSub;
    }

    std::string str() const {
        return "H^" + std::to_string(r) + "_" + std::to_string(i);
    }
    std::string describe() const {
        return kind_name(kind) + " " + str();
    }
};

struct Subgroup {
    Bitset members;
    std::vector<Element> elements;
    std::vector<Element> generators;
    std::optional<CatalogLabel> label;
    bool is_normal = false;

    std::size_t order() const { return elements.size(); }
};

inline Subgroup make_subgroup(Bitset members, std::vector<Element> generators) {
    Subgroup s;
    s.elements.reserve(members.count());
    members.for_each([&](std::size_t x) { s.elements.push_back(static_cast<Element>(x)); });
    s.members = std::move(members);
    s.generators = std::move(generators);
    return s;
}

// Closure of {e} under right multiplication by the generators, optionally
// seeded with an already-closed set.
inline Bitset generate_subgroup(const FiniteGroup& g, std::span<const Element> gens,
                                const Bitset* seed = nullptr) {
    Bitset members(g.order());
    std::vector<Element> queue;
    if (seed != nullptr) {
        members = *seed;
        seed->for_each([&](std::size_t x) { queue.push_back(static_cast<Element>(x)); });
    } else {
        members.set(g.identity());
        queue.push_back(g.identity());
    }
    for (std::size_t k = 0; k < queue.size(); ++k) {
        const Element x = queue[k];
        for (Element s : gens) {
            const Element y = g.multiply(x, s);
            if (!members.test(y)) {
                members.set(y);
                queue.push_back(y);
            }
        }
    }
    return members;
}

inline bool is_normal(const FiniteGroup& g, const Bitset& members) {
    for (Element x : g.generators()) {
        const Element xi = g.inverse(x);
        bool ok = true;
        members.for_each([&](std::size_t h) {
            if (ok && !members.test(g.multiply(g.multiply(x, static_cast<Element>(h)), xi))) {
                ok = false;
            }
        });
        if (!ok) return false;
    }
    return true;
}

inline bool is_normal(const FiniteGroup& g, const Subgroup& h) { return is_normal(g, h.members); }

// Proper subgroups (trivial group and whole group excluded) of one group.
class SubgroupLattice {
public:
    SubgroupLattice(std::shared_ptr<const FiniteGroup> group, std::vector<Subgroup> proper)
        : group_(std::move(group)), proper_(std::move(proper)) {
        std::stable_sort(proper_.begin(), proper_.end(), [](const Subgroup& x, const Subgroup& y) {
            if (x.order() != y.order()) return x.order() < y.order();
            return x.members.lex_less(y.members);
        });
        for (std::size_t k = 0; k < proper_.size(); ++k) {
            index_.emplace(proper_[k].members, k);
            if (proper_[k].label) labels_.emplace(*proper_[k].label, k);
        }
    }

    const FiniteGroup& group() const { return *group_; }
    const std::shared_ptr<const FiniteGroup>& group_ptr() const { return group_; }
    const std::vector<Subgroup>& proper() const { return proper_; }
    const Subgroup& operator[](std::size_t k) const { return proper_[k]; }
    std::size_t proper_count() const { return proper_.size(); }

    // |L(G)|, which also counts the trivial subgroup and G.
    std::size_t lattice_size() const { return proper_.size() + 2; }

    std::size_t normal_count() const {
        return static_cast<std::size_t>(std::count_if(proper_.begin(), proper_.end(),
                                                      [](const Subgroup& s) { return s.is_normal; }));
    }
    std::size_t non_normal_count() const { return proper_.size() - normal_count(); }

    std::optional<std::size_t> find(const Bitset& members) const {
        auto it = index_.find(members);
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }

    std::optional<std::size_t> find(const CatalogLabel& label) const {
        auto it = labels_.find(label);
        if (it == labels_.end()) return std::nullopt;
        return it->second;
    }

    // Member sets that collapsed onto an earlier catalog entry.
    std::size_t duplicate_labels = 0;

private:
    std::shared_ptr<const FiniteGroup> group_;
    std::vector<Subgroup> proper_;
    std::unordered_map<Bitset, std::size_t, BitsetHash> index_;
    std::map<CatalogLabel, std::size_t> labels_;
};

// Oracle: all cyclic subgroups, then joins with cyclic subgroups to a fixpoint.
inline SubgroupLattice enumerate_bruteforce(std::shared_ptr<const FiniteGroup> group,
                                            std::size_t order_cap = 512) {
    const FiniteGroup& g = *group;
    if (g.order() > order_cap) {
        throw CapExceeded("brute-force enumeration of " + g.requested_spec().name() +
                          " (order " + std::to_string(g.order()) + ") exceeds cap " +
                          std::to_string(order_cap));
    }
    std::vector<Bitset> sets;
    std::vector<std::vector<Element>> gens;
    std::unordered_map<Bitset, std::size_t, BitsetHash> seen;
    auto add = [&](Bitset b, std::vector<Element> gs) {
        if (seen.emplace(b, sets.size()).second) {
            sets.push_back(std::move(b));
            gens.push_back(std::move(gs));
        }
    };

    for (Element x = 0; x < g.order(); ++x) {
        const Element one[] = {x};
        add(generate_subgroup(g, one), {x});
    }
    const std::size_t cyclic_count = sets.size();
    std::vector<Element> cyclic_gen(cyclic_count);
    for (std::size_t c = 0; c < cyclic_count; ++c) cyclic_gen[c] = gens[c].front();

    for (std::size_t s = 0; s < sets.size(); ++s) {
        for (std::size_t c = 0; c < cyclic_count; ++c) {
            const Element x = cyclic_gen[c];
            if (sets[s].test(x)) continue;
            std::vector<Element> gs = gens[s];
            gs.push_back(x);
            Bitset seed = sets[s];
            Bitset joined = generate_subgroup(g, gs, &seed);
            add(std::move(joined), std::move(gs));
        }
    }

    std::vector<Subgroup> proper;
    for (std::size_t k = 0; k < sets.size(); ++k) {
        const std::size_t c = sets[k].count();
        if (c == 1 || c == g.order()) continue;
        Subgroup sub = make_subgroup(sets[k], gens[k]);
        sub.is_normal = is_normal(g, sub.members);
        proper.push_back(std::move(sub));
    }
    return SubgroupLattice(std::move(group), std::move(proper));
}

namespace detail {

struct CatalogBuilder {
    const FiniteGroup& g;
    std::vector<Subgroup> out;
    std::unordered_map<Bitset, std::size_t, BitsetHash> seen;
    std::size_t duplicates = 0;

    void add(std::vector<Element> gens, CatalogLabel label, bool normal) {
        Bitset m = generate_subgroup(g, gens);
        const std::size_t c = m.count();
        if (c == 1 || c == g.order()) return;
        if (!seen.emplace(m, out.size()).second) {
            ++duplicates;
            return;
        }
        Subgroup s = make_subgroup(std::move(m), std::move(gens));
        s.label = label;
        s.is_normal = normal;
        out.push_back(std::move(s));
    }
};

// Subgroups of a dihedral group D_m generated by A (order m) and B (involution
// inverting A) that contain some B A^k.
inline void add_dihedral_family(CatalogBuilder& cb, Element A, Element B, std::uint64_t m,
                                bool top_normal, bool half_normal) {
    const FiniteGroup& g = cb.g;
    for (std::uint64_t r : numtheory::divisors(m)) {
        for (std::uint64_t i = 1; i <= m / r; ++i) {
            const Element refl = g.multiply(B, g.power(A, i - 1));
            if (r == 1) {
                cb.add({refl}, {SubgroupKind::Reflection, 1, static_cast<unsigned>(i)}, false);
                continue;
            }
            const bool normal = (r == m && top_normal) || (m % 2 == 0 && r == m / 2 && half_normal);
            cb.add({g.power(A, m / r), refl},
                   {SubgroupKind::DihedralSub, static_cast<unsigned>(r), static_cast<unsigned>(i)},
                   normal);
        }
    }
}

// Subgroups of Q_m (A of order 2m, B with B^2 = A^m) containing some A^k B.
inline void add_quaternion_family(CatalogBuilder& cb, Element A, Element B, std::uint64_t m,
                                  bool top_normal, bool half_normal) {
    const FiniteGroup& g = cb.g;
    for (std::uint64_t r : numtheory::divisors(m)) {
        for (std::uint64_t i = 1; i <= m / r; ++i) {
            const Element gen = g.multiply(g.power(A, i), B);
            const bool normal = (r == m && top_normal) || (m % 2 == 0 && r == m / 2 && half_normal);
            if (r == 1) {
                cb.add({gen}, {SubgroupKind::CyclicFour, 1, static_cast<unsigned>(i)}, normal);
                continue;
            }
            cb.add({g.power(A, m / r), gen},
                   {SubgroupKind::QuaternionSub, static_cast<unsigned>(r), static_cast<unsigned>(i)},
                   normal);
        }
    }
}

inline void add_cyclic_family(CatalogBuilder& cb, std::uint64_t cyclic_order) {
    const Element a = cb.g.a();
    for (std::uint64_t r : numtheory::divisors(cyclic_order)) {
        if (r == 1) continue;
        cb.add({cb.g.power(a, cyclic_order / r)}, {SubgroupKind::Cyclic, static_cast<unsigned>(r), 0},
               true);
    }
}

}  // namespace detail

// Parametrized catalog, labelled, with the normality flags of the published lists.
inline SubgroupLattice enumerate_catalog(std::shared_ptr<const FiniteGroup> group) {
    const FiniteGroup& g = *group;
    detail::CatalogBuilder cb{g, {}, {}, 0};
    const GroupSpec spec = g.spec();
    const Element a = g.a();
    const Element b = g.b();
    switch (spec.family) {
        case Family::Dihedral:
            detail::add_cyclic_family(cb, spec.n);
            detail::add_dihedral_family(cb, a, b, spec.n, true, true);
            break;
        case Family::Quaternion:
            detail::add_cyclic_family(cb, 2ULL * spec.n);
            detail::add_quaternion_family(cb, a, b, spec.n, true, true);
            break;
        case Family::QuasiDihedral: {
            const std::uint64_t m = 1ULL << (spec.alpha - 2);
            const Element A = g.multiply(a, a);
            detail::add_cyclic_family(cb, 2 * m);
            detail::add_dihedral_family(cb, A, b, m, true, false);
            detail::add_quaternion_family(cb, A, g.multiply(a, b), m / 2, true, false);
            break;
        }
        case Family::Modular: {
            const std::uint64_t p = spec.p;
            const unsigned alpha = spec.alpha;
            detail::add_cyclic_family(cb, numtheory::checked_pow(p, alpha - 1));
            for (unsigned t = 1; t + 1 <= alpha; ++t) {
                const std::uint64_t s = numtheory::checked_pow(p, alpha - 1 - t);
                const std::uint64_t first = (t == 1) ? 0 : 1;
                for (std::uint64_t u = first; u < p; ++u) {
                    const Element gen = g.multiply(g.power(a, s * u), b);
                    cb.add({gen},
                           {SubgroupKind::ModularCyclic,
                            static_cast<unsigned>(numtheory::checked_pow(p, t)),
                            static_cast<unsigned>(u)},
                           t != 1);
                }
            }
            for (unsigned k = 1; k + 2 <= alpha; ++k) {
                cb.add({g.power(a, numtheory::checked_pow(p, k)), b},
                       {SubgroupKind::ModularNoncyclic,
                        static_cast<unsigned>(numtheory::checked_pow(p, alpha - k)), 0},
                       true);
            }
            break;
        }
    }
    SubgroupLattice lat(std::move(group), std::move(cb.out));
    lat.duplicate_labels = cb.duplicates;
    return lat;
}

inline SubgroupLattice enumerate_catalog(const GroupSpec& spec) {
    return enumerate_catalog(build_group(spec));
}

struct LatticeComparison {
    std::size_t catalog_size = 0;
    std::size_t oracle_size = 0;
    std::size_t only_in_catalog = 0;
    std::size_t only_in_oracle = 0;
    std::size_t normality_disagreements = 0;
    std::size_t catalog_duplicates = 0;

    bool same_sets() const {
        return only_in_catalog == 0 && only_in_oracle == 0 && catalog_duplicates == 0;
    }
    bool same_normality() const { return normality_disagreements == 0; }
};

inline LatticeComparison compare_lattices(const SubgroupLattice& catalog,
                                          const SubgroupLattice& oracle) {
    LatticeComparison c;
    c.catalog_size = catalog.proper_count();
    c.oracle_size = oracle.proper_count();
    c.catalog_duplicates = catalog.duplicate_labels;
    for (const auto& s : catalog.proper()) {
        auto k = oracle.find(s.members);
        if (!k) {
            ++c.only_in_catalog;
        } else if (oracle[*k].is_normal != s.is_normal) {
            ++c.normality_disagreements;
        }
    }
    for (const auto& s : oracle.proper()) {
        if (!catalog.find(s.members)) ++c.only_in_oracle;
    }
    return c;
}

}  // namespace permgraph
