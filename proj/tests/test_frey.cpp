#include "freytools/frey.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace freytools;

TEST(Normalize, Examples) {
    const auto n = normalize(5, 1, 1, -1, 1);
    EXPECT_EQ(n.a, -1);
    EXPECT_EQ(n.b, 1);
    EXPECT_EQ(n.c, -1);
    EXPECT_TRUE(n.normalized);
    EXPECT_EQ(normalize(5, 1, -1, 1, -1), n);
    EXPECT_EQ(normalize(n.p, n.alpha, n.a, n.b, n.c), n);
}

TEST(Normalize, Errors) {
    try {
        normalize(5, 2, 1, 1, 1);
        FAIL();
    } catch (const domain_error& e) {
        EXPECT_STREQ(e.what(), "not a solution");
    }
    try {
        normalize(3, 1, 2, -2, 2); // 8 - 16 + 8 = 0 but gcd 2
        FAIL();
    } catch (const domain_error& e) {
        EXPECT_STREQ(e.what(), "not primitive");
    }
    EXPECT_THROW(normalize(5, 0, 1, -1, 1), domain_error);
    EXPECT_THROW(normalize(4, 1, 1, -1, 1), domain_error);
}

TEST(ReduceAlpha, Examples) {
    EXPECT_EQ(reduce_alpha(7, 1, 5), std::make_pair(std::int64_t{2}, ExactInt(2)));
    EXPECT_EQ(reduce_alpha(3, 3, 5), std::make_pair(std::int64_t{3}, ExactInt(3)));
    EXPECT_EQ(reduce_alpha(10, 1, 5), std::make_pair(std::int64_t{0}, ExactInt(4)));
    for (std::int64_t alpha = 0; alpha < 40; ++alpha) {
        const auto [a2, b2] = reduce_alpha(alpha, -3, 7);
        EXPECT_EQ(ipow(2, alpha) * ipow(-3, 7), ipow(2, a2) * ipow(b2, 7));
    }
}

TEST(BuildFrey, TrivialSolution) {
    for (std::int64_t p : {3, 5, 7, 11, 13, 101}) {
        const auto [m, model] = build_frey(normalize(p, 1, -1, 1, -1));
        EXPECT_EQ(m, (MonomialTriple{-1, 2, -1}));
        EXPECT_EQ(model, (WeierstrassModel{0, 3, 0, 2, 0}));
        EXPECT_EQ(m.A + m.B + m.C, 0);
        EXPECT_EQ(model.discriminant(), 16 * ipow(m.A * m.B * m.C, 2));
    }
}

TEST(Invariants, TrivialTriple) {
    const auto inv = invariants({-1, 2, -1}, 5);
    EXPECT_EQ(inv.t, 5u);
    EXPECT_EQ(inv.odd_radical, 1);
    EXPECT_EQ(inv.conductor, 32);
    EXPECT_FALSE(inv.semistable);
    EXPECT_TRUE(inv.odd_disc_valuations.empty());
    EXPECT_TRUE(is_trivial_level(inv));
}

TEST(Invariants, TableRows) {
    const auto t4 = invariants({-1, 16, -15}, 5);
    EXPECT_EQ(t4.t, 0u);
    EXPECT_TRUE(t4.semistable);
    EXPECT_EQ(t4.conductor, 15);
    const auto t5 = invariants({-1, 32, -31}, 5);
    EXPECT_EQ(t5.t, 1u);
    EXPECT_EQ(t5.u, -8);
    EXPECT_TRUE(t5.semistable);
    EXPECT_EQ(invariants({3, 4, -7}, 5).t, 3u);
    EXPECT_EQ(invariants({3, 8, -11}, 5).t, 3u);
    EXPECT_FALSE(is_trivial_level(invariants({-9, 2, 7}, 5)));
    EXPECT_FALSE(is_trivial_level(t5));
}

TEST(Invariants, RejectsNonFreyTriples) {
    try {
        invariants({-1, 3, -2}, 5);
        FAIL();
    } catch (const domain_error& e) {
        EXPECT_STREQ(e.what(), "not a Frey triple");
    }
    EXPECT_THROW(invariants({1, 2, -3}, 5), domain_error);  // A == 1 mod 4
    EXPECT_THROW(invariants({-1, 2, 0}, 5), domain_error);
}

TEST(CartanType, ByResidueMod4) {
    EXPECT_EQ(cartan_type(5), CartanType::Split);
    EXPECT_EQ(cartan_type(7), CartanType::NonSplit);
    EXPECT_EQ(cartan_type(13), CartanType::Split);
    EXPECT_THROW(cartan_type(2), domain_error);
}

TEST(TableVsOracle, SyntheticTriplesAcrossAllTwoAdicRows) {
    std::mt19937_64 rng(99);
    int checked = 0;
    for (unsigned v = 1; v <= 8; ++v) {
        for (int i = 0; i < 20; ++i) {
            const auto [A, B, C] = oracle::random_frey_triple(rng, v, 500);
            const MonomialTriple m{A, B, C};
            const auto inv = invariants(m, 7);
            const auto oracle = global_conductor_data(frey_model(A, B));
            EXPECT_EQ(inv.conductor, oracle.conductor) << A << ' ' << B;
            for (const auto& ld : oracle.local) {
                if (ld.prime == 2) { EXPECT_EQ(ld.conductor_exponent, inv.t); }
                else EXPECT_EQ(ld.min_disc_valuation, inv.odd_disc_valuations.at(ExactInt(ld.prime)));
            }
            EXPECT_EQ(inv.semistable, inv.t <= 1);
            EXPECT_EQ(inv.semistable, B % 16 == 0);
            if (inv.t == 1) { EXPECT_EQ(inv.u, -8); }
            ++checked;
        }
    }
    EXPECT_GE(checked, 100);
}

TEST(Invariants, OddDiscriminantValuationsOfPowerShapedTriples) {
    // A = a^p, C = c^p with B = -A - C even: odd valuations coming from A and C
    // are multiples of p, the part from B need not be.
    const std::int64_t p = 5;
    for (std::int64_t a : {-1, 3, -5, 7}) {
        for (std::int64_t c : {-3, 5, -7, 9}) {
            const ExactInt A = ipow(a, p), C = ipow(c, p), B = -A - C;
            if (B == 0 || gcd_all({A, B, C}) != 1 || mod_floor(A, ExactInt(4)) != 3) continue;
            const auto inv = invariants({A, B, C}, p);
            for (const auto& [q, v] : inv.odd_disc_valuations) {
                if (a % static_cast<std::int64_t>(q) == 0 || c % static_cast<std::int64_t>(q) == 0) {
                    EXPECT_EQ(v % p, 0u) << q;
                }
            }
        }
    }
}
