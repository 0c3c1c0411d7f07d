#include <gtest/gtest.h>

#include <numeric>
#include <stdexcept>

#include "permgraph/numtheory.hpp"

namespace nt = permgraph::numtheory;

namespace {

std::vector<nt::u64> naive_divisors(nt::u64 n) {
    std::vector<nt::u64> d;
    for (nt::u64 k = 1; k <= n; ++k)
        if (n % k == 0) d.push_back(k);
    return d;
}

// n * sum over divisor pairs of 1/gcd(r,s); every term n/gcd is an integer
nt::u64 naive_g(nt::u64 n) {
    nt::u64 total = 0;
    for (auto r : naive_divisors(n))
        for (auto s : naive_divisors(n)) total += n / std::gcd(r, s);
    return total;
}

}  // namespace

TEST(NumTheory, DivisorsMatchTrialDivision) {
    for (nt::u64 n = 1; n <= 2000; ++n) {
        const auto d = naive_divisors(n);
        ASSERT_EQ(nt::divisors(n), d) << n;
        ASSERT_EQ(nt::tau(n), d.size()) << n;
        ASSERT_EQ(nt::sigma(n), std::accumulate(d.begin(), d.end(), nt::u64{0})) << n;
    }
}

TEST(NumTheory, FactorizationMultipliesBack) {
    for (nt::u64 n = 1; n <= 5000; ++n) {
        nt::u64 prod = 1;
        nt::u64 last = 0;
        for (const auto& pe : nt::factorize(n)) {
            EXPECT_TRUE(nt::is_prime(pe.prime));
            EXPECT_GT(pe.prime, last);
            last = pe.prime;
            for (unsigned k = 0; k < pe.exponent; ++k) prod *= pe.prime;
        }
        ASSERT_EQ(prod, n);
    }
}

TEST(NumTheory, PrimesAndSmallestFactor) {
    const std::vector<nt::u64> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    for (nt::u64 n = 0; n <= 31; ++n) {
        const bool want = std::find(primes.begin(), primes.end(), n) != primes.end();
        EXPECT_EQ(nt::is_prime(n), want) << n;
    }
    EXPECT_EQ(nt::smallest_prime_factor(91), 7U);
    EXPECT_EQ(nt::smallest_prime_factor(2 * 45), 2U);
    EXPECT_EQ(nt::smallest_prime_factor(97), 97U);
}

TEST(NumTheory, GMatchesPairSum) {
    for (nt::u64 n = 1; n <= 400; ++n) ASSERT_EQ(nt::g(n), naive_g(n)) << n;
}

TEST(NumTheory, GSmallValues) {
    // pairs of divisors of p: gcds 1,1,1,p
    EXPECT_EQ(nt::g(3), 3 * 3 + 1U);
    EXPECT_EQ(nt::g(1), 1U);
    EXPECT_EQ(nt::g(4), naive_g(4));
}

TEST(NumTheory, ParityFactsHold) {
    for (nt::u64 n = 1; n <= 20000; ++n) ASSERT_TRUE(nt::parity_facts(n).all_hold()) << n;
}

TEST(NumTheory, ParityFactsOnSquares) {
    EXPECT_FALSE(nt::parity_facts(9).tau_even);
    EXPECT_FALSE(nt::parity_facts(9).sigma_even);
    EXPECT_TRUE(nt::parity_facts(15).tau_even);
    EXPECT_FALSE(nt::parity_facts(16).sigma_even);
}

TEST(NumTheory, Deficient) {
    EXPECT_TRUE(nt::is_deficient(15));
    EXPECT_TRUE(nt::is_deficient(44));
    EXPECT_FALSE(nt::is_deficient(12));
    EXPECT_FALSE(nt::is_deficient(28));  // perfect
    for (nt::u64 p : {3, 5, 7, 11, 13}) EXPECT_TRUE(nt::is_deficient(p * p * p));
}

TEST(NumTheory, SplitTwo) {
    const auto t = nt::split_two(96);
    EXPECT_EQ(t.alpha, 5U);
    EXPECT_EQ(t.odd, 3U);
    EXPECT_EQ(nt::split_two(7).alpha, 0U);
    EXPECT_THROW(nt::split_two(0), std::domain_error);
}

TEST(NumTheory, GcdLcm) {
    EXPECT_EQ(nt::gcd(12, 18), 6U);
    EXPECT_EQ(nt::lcm(4, 6), 12U);
    EXPECT_EQ(nt::lcm(1, 9), 9U);
}

TEST(NumTheory, OverflowIsReported) {
    EXPECT_THROW(nt::checked_mul(~nt::u64{0}, 2), std::overflow_error);
    EXPECT_THROW(nt::checked_add(~nt::u64{0}, 1), std::overflow_error);
    EXPECT_THROW(nt::checked_pow(10, 30), std::overflow_error);
    EXPECT_EQ(nt::checked_pow(3, 5), 243U);
}

TEST(NumTheory, GFitsForSweepCap) {
    EXPECT_NO_THROW(nt::g(1'000'000));
    EXPECT_NO_THROW(nt::g(997'920));
}
