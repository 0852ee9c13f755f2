#include "freytools/arith.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace freytools;

TEST(Valuation, Examples) {
    EXPECT_EQ(valuation(32, 2), 5u);
    EXPECT_EQ(valuation(-1, 2), 0u);
    EXPECT_EQ(valuation(ExactInt(16) * ipow(3, 7), 3), 7u);
}

TEST(Valuation, ZeroIsAnError) { EXPECT_THROW(valuation(0, 2), domain_error); }

TEST(Valuation, Multiplicative) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<std::int64_t> dist(-100000, 100000);
    for (int i = 0; i < 500; ++i) {
        const ExactInt m = dist(rng), n = dist(rng);
        if (m == 0 || n == 0) continue;
        for (int ell : {2, 3, 5, 7}) EXPECT_EQ(valuation(m * n, ell), valuation(m, ell) + valuation(n, ell));
    }
}

TEST(Powmod, Examples) {
    EXPECT_EQ(powmod(2, 4, 25), 16);
    EXPECT_EQ(powmod(2, 1092, ExactInt(1093) * 1093), 1);
    EXPECT_EQ(powmod(7, 0, 13), 1);
    EXPECT_EQ(powmod(-3, 3, 7), 1); // -27 == 1 mod 7
    EXPECT_THROW(powmod(2, 3, 1), domain_error);
}

TEST(Powmod, AgreesWithRepeatedMultiplication) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<std::int64_t> base(-1000, 1000), mod(2, 5000);
    for (int i = 0; i < 300; ++i) {
        const ExactInt b = base(rng), m = mod(rng);
        for (unsigned e = 0; e <= 12; ++e) EXPECT_EQ(powmod(b, e, m), oracle::naive_powmod(b, e, m));
    }
}

TEST(MultOrder, Examples) {
    EXPECT_EQ(mult_order(2, 7), 3);
    EXPECT_EQ(mult_order(2, 5), 4);
    EXPECT_EQ(mult_order(1, 11), 1);
    EXPECT_THROW(mult_order(14, 7), domain_error);
}

TEST(MultOrder, DividesGroupOrderAndMatchesIteration) {
    for (auto p : primes_up_to(400)) {
        for (std::int64_t g = 2; g < 12; ++g) {
            if (g % p == 0) continue;
            const auto d = mult_order(g, p);
            EXPECT_EQ((p - 1) % d, 0) << g << " mod " << p;
            EXPECT_EQ(d, oracle::naive_order(g, p)) << g << " mod " << p;
        }
    }
}

TEST(GcdAll, Examples) {
    EXPECT_EQ(gcd_all({-1, 1, -1}), 1);
    EXPECT_EQ(gcd_all({6, 10, 15}), 1);
    EXPECT_EQ(gcd_all({4, 8}), 4);
    EXPECT_EQ(gcd_all({0, 0}), 0);
    EXPECT_EQ(gcd_all({-12, 18}), 6);
}

TEST(Legendre, Examples) {
    EXPECT_EQ(legendre_symbol(1, 7), 1);
    EXPECT_EQ(legendre_symbol(3, 7), -1);
    EXPECT_EQ(legendre_symbol(14, 7), 0);
    EXPECT_EQ(legendre_symbol(2, 7), 1);
    EXPECT_THROW(legendre_symbol(3, 2), domain_error);
}

TEST(Legendre, MultiplicativeAndMatchesSquares) {
    for (auto ell : primes_up_to(200)) {
        if (ell == 2) continue;
        std::vector<int> is_square(ell, -1);
        is_square[0] = 0;
        for (std::int64_t y = 1; y < ell; ++y) is_square[y * y % ell] = 1;
        for (std::int64_t a = 0; a < ell; ++a) {
            EXPECT_EQ(legendre_symbol(a, ell), is_square[a]);
            for (std::int64_t b = 0; b < ell; b += 7)
                EXPECT_EQ(legendre_symbol(a * b, ell), legendre_symbol(a, ell) * legendre_symbol(b, ell));
        }
    }
}

TEST(Primality, SmallRangeAgreesWithSieve) {
    const auto primes = primes_up_to(20000);
    std::set<std::int64_t> ps(primes.begin(), primes.end());
    for (std::int64_t n = -5; n <= 20000; ++n) EXPECT_EQ(is_prime(n), ps.count(n) == 1) << n;
}

TEST(Primality, LargeInputs) {
    EXPECT_TRUE(is_prime(ExactInt("1000000000000000003")));
    EXPECT_FALSE(is_prime(ExactInt("3215031751"))); // strong pseudoprime to 2, 3, 5, 7
    EXPECT_FALSE(is_prime(ExactInt(1093) * 1093));
    EXPECT_THROW(is_prime(primality_bound()), domain_error); // no witness divides it
    EXPECT_FALSE(is_prime(primality_bound() + 1));
}

TEST(ExactRoot, PowersAndNonPowers) {
    EXPECT_EQ(exact_root(ipow(ExactInt(-37), 13), 13), ExactInt(-37));
    EXPECT_EQ(exact_root(ipow(ExactInt(12345), 7), 7), ExactInt(12345));
    EXPECT_FALSE(exact_root(ipow(ExactInt(12345), 7) + 1, 7));
    EXPECT_FALSE(exact_root(-4, 2));
    EXPECT_EQ(exact_root(0, 5), ExactInt(0));
    EXPECT_EQ(exact_root(-1, 3), ExactInt(-1));
    for (std::int64_t x = 1; x < 300; ++x) {
        for (unsigned k = 2; k < 6; ++k) {
            const auto pw = ipow(ExactInt(x), k);
            EXPECT_EQ(exact_root(pw, k), ExactInt(x));
            EXPECT_FALSE(exact_root(pw + 1, k) && x > 1);
        }
    }
}

TEST(FactorTrial, FactorsAndFailsLoudly) {
    const auto f = factor_trial(ExactInt(-64) * 31 * 31 * 97, 1000);
    ASSERT_TRUE(f);
    ASSERT_EQ(f->size(), 3u);
    EXPECT_EQ((*f)[0], std::make_pair(ExactInt(2), 6u));
    EXPECT_EQ((*f)[1], std::make_pair(ExactInt(31), 2u));
    EXPECT_EQ((*f)[2], std::make_pair(ExactInt(97), 1u));
    // Product of two primes above the bound: cofactor cannot be certified.
    EXPECT_FALSE(factor_trial(ExactInt(1000003) * 1000033, 100));
    // A single large prime cofactor is certified by Miller-Rabin.
    const auto g = factor_trial(ExactInt(8) * 1000003, 100);
    ASSERT_TRUE(g);
    EXPECT_EQ(g->back().first, 1000003);
}
