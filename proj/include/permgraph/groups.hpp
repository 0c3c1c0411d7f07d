#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "permgraph/numtheory.hpp"

namespace permgraph {

// Invalid group parameters; the message names the violated bound.
class ParameterError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A configured size limit was exceeded.
class CapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class Family { Dihedral, Quaternion, QuasiDihedral, Modular };

inline std::string family_name(Family f) {
    switch (f) {
        case Family::Dihedral: return "dihedral";
        case Family::Quaternion: return "quaternion";
        case Family::QuasiDihedral: return "quasidihedral";
        case Family::Modular: return "modular";
    }
    return "unknown";
}

inline Family parse_family(const std::string& s) {
    if (s == "dihedral" || s == "D") return Family::Dihedral;
    if (s == "quaternion" || s == "Q") return Family::Quaternion;
    if (s == "quasidihedral" || s == "QD") return Family::QuasiDihedral;
    if (s == "modular" || s == "M") return Family::Modular;
    throw ParameterError("unknown family '" + s + "'");
}

struct GroupSpec {
    Family family = Family::Dihedral;
    unsigned n = 0;      // D_n, Q_n
    unsigned p = 0;      // M_{p^alpha}
    unsigned alpha = 0;  // QD_{2^alpha}, M_{p^alpha}

    static GroupSpec dihedral(unsigned n) { return {Family::Dihedral, n, 0, 0}; }
    static GroupSpec quaternion(unsigned n) { return {Family::Quaternion, n, 0, 0}; }
    static GroupSpec quasidihedral(unsigned alpha) { return {Family::QuasiDihedral, 0, 2, alpha}; }
    static GroupSpec modular(unsigned p, unsigned alpha) { return {Family::Modular, 0, p, alpha}; }

    bool operator==(const GroupSpec&) const = default;

    void validate() const {
        switch (family) {
            case Family::Dihedral:
                if (n < 3) throw ParameterError("D_n requires n >= 3");
                break;
            case Family::Quaternion:
                if (n < 2) throw ParameterError("Q_n requires n >= 2");
                break;
            case Family::QuasiDihedral:
                if (alpha < 4) throw ParameterError("QD requires alpha >= 4");
                if (alpha > 30) throw ParameterError("QD requires alpha <= 30");
                break;
            case Family::Modular:
                if (!numtheory::is_prime(p)) throw ParameterError("M requires p prime");
                if (alpha < 3) throw ParameterError("M requires alpha >= 3");
                if (numtheory::checked_pow(p, alpha) > (1ULL << 30)) {
                    throw ParameterError("M requires p^alpha <= 2^30");
                }
                break;
        }
    }

    std::uint64_t order() const {
        switch (family) {
            case Family::Dihedral: return 2ULL * n;
            case Family::Quaternion: return 4ULL * n;
            case Family::QuasiDihedral: return 1ULL << alpha;
            case Family::Modular: return numtheory::checked_pow(p, alpha);
        }
        return 0;
    }

    std::string name() const {
        switch (family) {
            case Family::Dihedral: return "D_" + std::to_string(n);
            case Family::Quaternion: return "Q_" + std::to_string(n);
            case Family::QuasiDihedral: return "QD_" + std::to_string(1ULL << alpha);
            case Family::Modular: return "M_" + std::to_string(order());
        }
        return "?";
    }

    // M_8 is realized as D_4; every other spec is realized as itself.
    GroupSpec realized() const {
        if (family == Family::Modular && p == 2 && alpha == 3) {
            return dihedral(4);
        }
        return *this;
    }
};

// Normal form a^i b^j with 0 <= i < cyclic_order, 0 <= j < b_period,
// b a^k b^-1 = a^(k*multiplier) and b^b_period = a^b_power.
struct Presentation {
    std::uint64_t cyclic_order = 0;
    std::uint64_t b_period = 0;
    std::uint64_t b_power = 0;
    std::uint64_t multiplier = 0;

    std::uint64_t order() const { return cyclic_order * b_period; }
};

inline Presentation presentation_of(const GroupSpec& requested) {
    const GroupSpec spec = requested.realized();
    spec.validate();
    Presentation pr;
    switch (spec.family) {
        case Family::Dihedral:
            pr = {spec.n, 2, 0, spec.n - 1ULL};
            break;
        case Family::Quaternion:
            pr = {2ULL * spec.n, 2, spec.n, 2ULL * spec.n - 1};
            break;
        case Family::QuasiDihedral: {
            const std::uint64_t half = 1ULL << (spec.alpha - 1);
            pr = {half, 2, 0, (1ULL << (spec.alpha - 2)) - 1};
            break;
        }
        case Family::Modular: {
            const std::uint64_t big = numtheory::checked_pow(spec.p, spec.alpha - 1);
            pr = {big, spec.p, 0, numtheory::checked_pow(spec.p, spec.alpha - 2) + 1};
            break;
        }
    }
    return pr;
}

// The variant of the modular relation with exponent p^(alpha-2) - 1.
inline Presentation minus_sign_modular_presentation(unsigned p, unsigned alpha) {
    const std::uint64_t big = numtheory::checked_pow(p, alpha - 1);
    return {big, p, 0, numtheory::checked_pow(p, alpha - 2) - 1};
}

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

// True when the relations define a group of order cyclic_order * b_period in
// which <a> has exactly that order: conjugation by b is an automorphism whose
// b_period-th power is the identity and which fixes b^b_period.
inline bool presentation_consistent(const Presentation& pr) {
    const auto N = pr.cyclic_order;
    if (N == 0 || pr.b_period == 0) return false;
    if (numtheory::gcd(pr.multiplier % N, N) != 1 && N != 1) return false;
    std::uint64_t mp = 1 % N;
    for (std::uint64_t k = 0; k < pr.b_period; ++k) {
        mp = mulmod(mp, pr.multiplier, N);
    }
    if (mp != 1 % N) return false;
    return mulmod(pr.b_power, pr.multiplier, N) == pr.b_power % N;
}

using Element = std::uint32_t;

class FiniteGroup {
public:
    static constexpr std::uint64_t kMaxOrder = 4096;

    explicit FiniteGroup(const GroupSpec& requested)
        : requested_(requested), spec_(requested.realized()) {
        requested_.validate();
        pres_ = presentation_of(requested_);
        if (!presentation_consistent(pres_)) {
            throw std::logic_error("inconsistent presentation for " + requested_.name());
        }
        order_ = pres_.order();
        if (order_ != spec_.order()) {
            throw std::logic_error("group order mismatch for " + requested_.name());
        }
        if (order_ > kMaxOrder) {
            throw CapExceeded("group order " + std::to_string(order_) +
                              " exceeds table limit " + std::to_string(kMaxOrder));
        }
        build_table();
    }

    const GroupSpec& spec() const { return spec_; }
    const GroupSpec& requested_spec() const { return requested_; }
    const Presentation& presentation() const { return pres_; }
    std::size_t order() const { return order_; }

    Element identity() const { return 0; }
    Element multiply(Element x, Element y) const { return table_[x * order_ + y]; }
    Element inverse(Element x) const { return inverse_[x]; }

    Element make(std::int64_t i, std::uint64_t j) const {
        const auto N = static_cast<std::int64_t>(pres_.cyclic_order);
        const auto e = static_cast<std::uint64_t>(((i % N) + N) % N);
        // a^i b^j with j reduced through b^period = a^power
        Element x = static_cast<Element>(e);
        const std::uint64_t q = j / pres_.b_period;
        const std::uint64_t r = j % pres_.b_period;
        x = multiply(x, static_cast<Element>(r * pres_.cyclic_order));
        for (std::uint64_t k = 0; k < q; ++k) {
            x = multiply(x, static_cast<Element>(pres_.b_power));
        }
        return x;
    }

    Element a() const { return make(1, 0); }
    Element b() const { return make(0, 1); }
    std::array<Element, 2> generators() const { return {a(), b()}; }

    std::uint64_t a_exponent(Element x) const { return x % pres_.cyclic_order; }
    std::uint64_t b_exponent(Element x) const { return x / pres_.cyclic_order; }

    Element power(Element x, std::uint64_t k) const {
        Element out = identity();
        Element base = x;
        while (k > 0) {
            if (k & 1U) out = multiply(out, base);
            base = multiply(base, base);
            k >>= 1;
        }
        return out;
    }

    std::string element_name(Element x) const {
        const auto i = a_exponent(x);
        const auto j = b_exponent(x);
        if (i == 0 && j == 0) return "e";
        std::string s;
        if (i == 1) s = "a";
        else if (i > 1) s = "a^" + std::to_string(i);
        if (j > 0) {
            if (!s.empty()) s += " ";
            s += (j == 1) ? "b" : "b^" + std::to_string(j);
        }
        return s;
    }

private:
    void build_table() {
        const std::uint64_t N = pres_.cyclic_order;
        const std::uint64_t E = pres_.b_period;
        std::vector<std::uint64_t> mpow(E, 1 % N);
        for (std::uint64_t j = 1; j < E; ++j) {
            mpow[j] = mulmod(mpow[j - 1], pres_.multiplier, N);
        }
        table_.assign(order_ * order_, 0);
        for (std::uint64_t x = 0; x < order_; ++x) {
            const std::uint64_t i = x % N;
            const std::uint64_t j = x / N;
            for (std::uint64_t y = 0; y < order_; ++y) {
                const std::uint64_t k = y % N;
                const std::uint64_t l = y / N;
                // (a^i b^j)(a^k b^l) = a^(i + k m^j) b^(j+l)
                std::uint64_t e = (i + mulmod(k, mpow[j], N)) % N;
                std::uint64_t t = j + l;
                if (t >= E) {
                    t -= E;
                    e = (e + pres_.b_power) % N;
                }
                table_[x * order_ + y] = static_cast<Element>(e + t * N);
            }
        }
        inverse_.assign(order_, 0);
        for (std::uint64_t x = 0; x < order_; ++x) {
            bool found = false;
            for (std::uint64_t y = 0; y < order_; ++y) {
                if (table_[x * order_ + y] == 0) {
                    inverse_[x] = static_cast<Element>(y);
                    found = true;
                    break;
                }
            }
            if (!found) throw std::logic_error("element without inverse");
        }
    }

    GroupSpec requested_;
    GroupSpec spec_;
    Presentation pres_;
    std::size_t order_ = 0;
    std::vector<Element> table_;
    std::vector<Element> inverse_;
};

inline std::shared_ptr<const FiniteGroup> build_group(const GroupSpec& spec) {
    return std::make_shared<const FiniteGroup>(spec);
}

inline std::uint64_t element_order(const FiniteGroup& g, Element x) {
    std::uint64_t k = 1;
    Element y = x;
    while (y != g.identity()) {
        y = g.multiply(y, x);
        ++k;
    }
    return k;
}

// Exhaustive for small groups, random triples otherwise.
inline bool is_associative(const FiniteGroup& g, std::size_t exhaustive_limit = 64,
                           std::size_t samples = 100000, std::uint64_t seed = 1) {
    const auto n = static_cast<Element>(g.order());
    auto ok = [&](Element x, Element y, Element z) {
        return g.multiply(g.multiply(x, y), z) == g.multiply(x, g.multiply(y, z));
    };
    if (g.order() <= exhaustive_limit) {
        for (Element x = 0; x < n; ++x)
            for (Element y = 0; y < n; ++y)
                for (Element z = 0; z < n; ++z)
                    if (!ok(x, y, z)) return false;
        return true;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Element> pick(0, n - 1);
    for (std::size_t s = 0; s < samples; ++s) {
        if (!ok(pick(rng), pick(rng), pick(rng))) return false;
    }
    return true;
}

// Elements commuting with every generator.
inline std::vector<Element> center(const FiniteGroup& g) {
    std::vector<Element> out;
    const auto gens = g.generators();
    for (Element x = 0; x < g.order(); ++x) {
        bool central = true;
        for (auto s : gens) {
            if (g.multiply(x, s) != g.multiply(s, x)) {
                central = false;
                break;
            }
        }
        if (central) out.push_back(x);
    }
    return out;
}

}  // namespace permgraph
