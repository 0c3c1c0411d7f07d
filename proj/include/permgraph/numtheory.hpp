#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace permgraph::numtheory {

using u64 = std::uint64_t;

struct PrimePower {
    u64 prime = 0;
    unsigned exponent = 0;

    bool operator==(const PrimePower&) const = default;
};

// Sorted ascending by prime.
using Factorization = std::vector<PrimePower>;

inline u64 checked_mul(u64 a, u64 b) {
    u64 out = 0;
    if (__builtin_mul_overflow(a, b, &out)) {
        throw std::overflow_error("integer overflow in multiplication");
    }
    return out;
}

inline u64 checked_add(u64 a, u64 b) {
    u64 out = 0;
    if (__builtin_add_overflow(a, b, &out)) {
        throw std::overflow_error("integer overflow in addition");
    }
    return out;
}

inline u64 checked_pow(u64 base, unsigned exp) {
    u64 out = 1;
    for (unsigned k = 0; k < exp; ++k) {
        out = checked_mul(out, base);
    }
    return out;
}

inline u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }

inline u64 lcm(u64 a, u64 b) {
    if (a == 0 || b == 0) {
        return 0;
    }
    return checked_mul(a / gcd(a, b), b);
}

inline Factorization factorize(u64 n) {
    if (n == 0) {
        throw std::domain_error("factorize: n must be positive");
    }
    Factorization out;
    auto take = [&](u64 p) {
        unsigned e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        if (e > 0) {
            out.push_back({p, e});
        }
    };
    take(2);
    for (u64 p = 3; p <= n / p; p += 2) {
        take(p);
    }
    if (n > 1) {
        out.push_back({n, 1});
    }
    return out;
}

inline bool is_prime(u64 n) {
    if (n < 2) {
        return false;
    }
    auto f = factorize(n);
    return f.size() == 1 && f.front().exponent == 1;
}

inline u64 smallest_prime_factor(u64 n) {
    if (n < 2) {
        throw std::domain_error("smallest_prime_factor: n must be at least 2");
    }
    return factorize(n).front().prime;
}

// Ascending list of all positive divisors.
inline std::vector<u64> divisors(u64 n) {
    std::vector<u64> out{1};
    for (const auto& [p, e] : factorize(n)) {
        const std::size_t base = out.size();
        u64 pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk *= p;
            for (std::size_t j = 0; j < base; ++j) {
                out.push_back(out[j] * pk);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline u64 tau(u64 n) {
    u64 out = 1;
    for (const auto& pe : factorize(n)) {
        out = checked_mul(out, pe.exponent + 1);
    }
    return out;
}

inline u64 sigma(u64 n) {
    u64 out = 1;
    for (const auto& [p, e] : factorize(n)) {
        u64 term = 1;
        u64 pk = 1;
        for (unsigned k = 1; k <= e; ++k) {
            pk = checked_mul(pk, p);
            term = checked_add(term, pk);
        }
        out = checked_mul(out, term);
    }
    return out;
}

inline bool is_deficient(u64 n) {
    return sigma(n) < checked_mul(2, n);
}

// n = 2^alpha * odd
struct TwoAdic {
    unsigned alpha = 0;
    u64 odd = 1;
};

inline TwoAdic split_two(u64 n) {
    if (n == 0) {
        throw std::domain_error("split_two: n must be positive");
    }
    TwoAdic out;
    while (n % 2 == 0) {
        n /= 2;
        ++out.alpha;
    }
    out.odd = n;
    return out;
}

inline u64 g_prime_power(u64 p, unsigned alpha) {
    using i128 = __int128;
    auto pow128 = [](i128 base, unsigned exp) {
        i128 r = 1;
        for (unsigned k = 0; k < exp; ++k) {
            if (__builtin_mul_overflow(r, base, &r)) {
                throw std::overflow_error("g: intermediate overflow");
            }
        }
        return r;
    };
    const i128 pp = static_cast<i128>(p);
    const i128 a = static_cast<i128>(alpha);
    i128 t1 = 0;
    i128 t2 = 0;
    if (__builtin_mul_overflow(2 * a + 1, pow128(pp, alpha + 2), &t1) ||
        __builtin_mul_overflow(2 * a + 3, pow128(pp, alpha + 1), &t2)) {
        throw std::overflow_error("g: intermediate overflow");
    }
    const i128 num = t1 - t2 + pp + 1;
    const i128 den = (pp - 1) * (pp - 1);
    if (num % den != 0) {
        throw std::logic_error("g: prime-power closed form is not integral");
    }
    const i128 q = num / den;
    if (q < 0 || q > static_cast<i128>(std::numeric_limits<u64>::max())) {
        throw std::overflow_error("g: value exceeds 64 bits");
    }
    return static_cast<u64>(q);
}

// g(k) = k * sum_{r|k, s|k} 1/gcd(r,s), evaluated multiplicatively.
inline u64 g(u64 n) {
    u64 out = 1;
    for (const auto& [p, e] : factorize(n)) {
        out = checked_mul(out, g_prime_power(p, e));
    }
    return out;
}

struct ParityFacts {
    u64 n = 0;
    bool tau_even = false;
    bool sigma_even = false;
    bool some_exponent_odd = false;
    bool all_exponents_even = false;
    bool n_odd = false;
    bool power_of_two = false;
    unsigned two_exponent = 0;
    bool odd_part_tau_even = false;
    bool odd_part_sigma_even = false;

    // The five divisor-parity statements, evaluated on this n.
    bool tau_even_iff_some_exponent_odd() const { return tau_even == some_exponent_odd; }
    bool tau_odd_iff_all_exponents_even() const { return !tau_even == all_exponents_even; }
    bool odd_n_sigma_matches_tau() const { return !n_odd || sigma_even == tau_even; }
    bool power_of_two_sigma_odd() const { return !power_of_two || !sigma_even; }
    bool even_n_sigma_matches_odd_part_tau() const {
        return n_odd || sigma_even == odd_part_tau_even;
    }

    bool all_hold() const {
        return tau_even_iff_some_exponent_odd() && tau_odd_iff_all_exponents_even() &&
               odd_n_sigma_matches_tau() && power_of_two_sigma_odd() &&
               even_n_sigma_matches_odd_part_tau();
    }
};

inline ParityFacts parity_facts(u64 n) {
    if (n < 1) {
        throw std::domain_error("parity_facts: n must be positive");
    }
    ParityFacts f;
    f.n = n;
    const auto fac = factorize(n);
    f.tau_even = tau(n) % 2 == 0;
    f.sigma_even = sigma(n) % 2 == 0;
    f.some_exponent_odd = false;
    f.all_exponents_even = true;
    for (const auto& pe : fac) {
        if (pe.exponent % 2 == 1) {
            f.some_exponent_odd = true;
            f.all_exponents_even = false;
        }
    }
    const auto two = split_two(n);
    f.n_odd = two.alpha == 0;
    f.two_exponent = two.alpha;
    f.power_of_two = two.odd == 1 && two.alpha >= 1;
    f.odd_part_tau_even = tau(two.odd) % 2 == 0;
    f.odd_part_sigma_even = sigma(two.odd) % 2 == 0;
    return f;
}

}  // namespace permgraph::numtheory
