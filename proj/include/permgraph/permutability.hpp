#pragma once

#include <optional>
#include <stdexcept>

#include "permgraph/lattice.hpp"

namespace permgraph {

inline Bitset product_set(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
    Bitset out(g.order());
    for (Element x : h.elements) {
        for (Element y : k.elements) {
            out.set(g.multiply(x, y));
        }
    }
    return out;
}

// HK == KH, compared as element sets.
inline bool permutes_bruteforce(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
    return product_set(g, h, k) == product_set(g, k, h);
}

// HK is closed: right multiplication by every generator of H and K maps HK into
// itself. Also asserts the product formula |HK| = |H||K| / |H n K|.
inline bool permutes_by_closure(const FiniteGroup& g, const Subgroup& h, const Subgroup& k) {
    const Bitset hk = product_set(g, h, k);
    const std::size_t meet = h.members.intersection_count(k.members);
    if (hk.count() * meet != h.order() * k.order()) {
        throw std::logic_error("product formula violated");
    }
    bool closed = true;
    auto check = [&](const std::vector<Element>& gens) {
        hk.for_each([&](std::size_t x) {
            if (!closed) return;
            for (Element s : gens) {
                if (!hk.test(g.multiply(static_cast<Element>(x), s))) {
                    closed = false;
                    return;
                }
            }
        });
    };
    check(h.generators);
    if (closed) check(k.generators);
    return closed;
}

// (r, i) names H_i^r; i == 0 names the cyclic subgroup H_0^r.
struct DihedralIndex {
    unsigned r = 0;
    unsigned i = 0;
};

inline void check_index(unsigned n, DihedralIndex x) {
    if (x.r == 0 || n % x.r != 0) {
        throw std::invalid_argument("index r=" + std::to_string(x.r) + " does not divide n=" +
                                    std::to_string(n));
    }
    if (x.i > n / x.r) {
        throw std::invalid_argument("index i=" + std::to_string(x.i) + " out of range");
    }
}

// Subgroups containing reflections permute iff n / lcm(r, s) divides 2(i - j).
inline bool permutes_dihedral_closedform(unsigned n, DihedralIndex x, DihedralIndex y) {
    check_index(n, x);
    check_index(n, y);
    if (x.i == 0 || y.i == 0) return true;
    const auto d = static_cast<long long>(n / numtheory::lcm(x.r, y.r));
    const long long diff = 2LL * (static_cast<long long>(x.i) - static_cast<long long>(y.i));
    return diff % d == 0;
}

// Image of H_{i,r} = <a^(n/r), a^i b> under Q_n -> D_n: a^i b maps to b a^(-i).
inline DihedralIndex quaternion_image_index(unsigned n, DihedralIndex q) {
    check_index(n, q);
    if (q.i == 0) return q;
    const unsigned m = n / q.r;
    return {q.r, (m - q.i % m) % m + 1};
}

inline bool permutes_quaternion_closedform(unsigned n, DihedralIndex x, DihedralIndex y) {
    return permutes_dihedral_closedform(n, quaternion_image_index(n, x),
                                        quaternion_image_index(n, y));
}

inline DihedralIndex to_index(const CatalogLabel& l) {
    switch (l.kind) {
        case SubgroupKind::Cyclic: return {l.r, 0};
        case SubgroupKind::Reflection:
        case SubgroupKind::CyclicFour: return {1, l.i};
        default: return {l.r, l.i};
    }
}

// Closed-form permutability of two catalog subgroups, where a closed form exists.
inline std::optional<bool> permutes_closedform(const GroupSpec& requested, const CatalogLabel& x,
                                               const CatalogLabel& y) {
    const GroupSpec spec = requested.realized();
    // subgroups of <a> are normal
    if (x.kind == SubgroupKind::Cyclic || y.kind == SubgroupKind::Cyclic) return true;
    switch (spec.family) {
        case Family::Dihedral:
            return permutes_dihedral_closedform(spec.n, to_index(x), to_index(y));
        case Family::Quaternion:
            return permutes_quaternion_closedform(spec.n, to_index(x), to_index(y));
        case Family::QuasiDihedral: {
            const unsigned m = 1U << (spec.alpha - 2);
            if (x.dihedral_type() && y.dihedral_type()) {
                return permutes_dihedral_closedform(m, to_index(x), to_index(y));
            }
            if (x.quaternion_type() && y.quaternion_type()) {
                return permutes_quaternion_closedform(m / 2, to_index(x), to_index(y));
            }
            // across the two index-2 subgroups only the index-2 subgroups themselves permute
            auto top = [&](const CatalogLabel& l) {
                return (l.dihedral_type() && l.r == m) || (l.quaternion_type() && l.r == m / 2);
            };
            return top(x) || top(y);
        }
        case Family::Modular:
            return true;
    }
    return std::nullopt;
}

}  // namespace permgraph
