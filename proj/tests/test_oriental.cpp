#include <gtest/gtest.h>

#include "support.hpp"

using namespace orientals;
using namespace testing_support;

namespace {

ZMorphism zm(const char* text, int n) { return parse_zmorphism(text, n); }

}  // namespace

TEST(Membership, PathsAndTheFillerExample) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& path : vertex_paths(n)) EXPECT_TRUE(is_oriental_morphism(path_morphism(path, n))) << path_morphism(path, n);
    EXPECT_TRUE(is_oriental_morphism(zm("(0,1,1) - (1,1,1) + (1,1,2)", 2)));
    EXPECT_TRUE(is_oriental_morphism(ZMorphism::identity(3)));
}

TEST(Membership, WitnessForNegativeInjectiveTerm) {
    auto r = is_oriental_morphism(zm("2*(0,1) - (1,1)", 1));
    ASSERT_FALSE(r);
    EXPECT_EQ(r.coefficient_sum, 1);
    ASSERT_TRUE(r.witness);
    EXPECT_EQ(r.witness->probe, MonotoneMap({0}, 1));
    EXPECT_EQ(r.witness->term, MonotoneMap({1}, 1));
    EXPECT_EQ(r.witness->coefficient, -1);

    auto s = is_oriental_morphism(zm("(0,2) - (0,1) + (1,2)", 2));
    ASSERT_FALSE(s);
    ASSERT_TRUE(s.witness);
    EXPECT_EQ(s.witness->probe, MonotoneMap({1}, 1));
    EXPECT_EQ(s.witness->term, MonotoneMap({1}, 2));
    EXPECT_EQ(s.witness->coefficient, -1);
}

TEST(Membership, CoefficientSum) {
    auto r = is_oriental_morphism(zm("(0,1) + (1,2)", 2));
    EXPECT_FALSE(r);
    EXPECT_EQ(r.coefficient_sum, 2);
    EXPECT_FALSE(r.witness);
    EXPECT_FALSE(is_oriental_morphism(ZMorphism(1, 1)));
}

TEST(Membership, AgreesWithOracle) {
    Rng rng(41);
    int members = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        int m = uniform(rng, 0, 3), n = uniform(rng, 0, 3);
        ZMorphism x = uniform(rng, 0, 1) ? random_oriental(rng, m, n) : random_zmorphism(rng, m, n, 2, 4);
        if (uniform(rng, 0, 2) == 0) x += random_zmorphism(rng, m, n, 1, 2);
        bool expected = oracle::member(oracle::from(x), m);
        ASSERT_EQ(static_cast<bool>(is_oriental_morphism(x)), expected) << x;
        members += expected;
    }
    EXPECT_GT(members, 200);
}

TEST(Membership, OneCellsAreExactlyThePaths) {
    // Brute force over coefficients in [-2,2] on every term of ZDelta(1,n).
    for (int n = 0; n <= 3; ++n) {
        auto maps = enumerate_monotone(1, n);
        std::set<ZMorphism> found;
        std::vector<int> digits(maps.size(), -2);
        while (true) {
            ZMorphism x(1, n);
            for (std::size_t k = 0; k < maps.size(); ++k) x.add_term(maps[k], digits[k]);
            if (is_oriental_morphism(x)) found.insert(x);
            std::size_t k = 0;
            while (k < digits.size() && digits[k] == 2) digits[k++] = -2;
            if (k == digits.size()) break;
            ++digits[k];
        }
        std::set<ZMorphism> paths;
        for (const auto& p : vertex_paths(n)) paths.insert(path_morphism(p, n));
        EXPECT_EQ(found, paths) << n;
    }
}

TEST(Membership, ClosedUnderCompositionAndSimplicialOperators) {
    Rng rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        int a = uniform(rng, 0, 3), b = uniform(rng, 0, 3), c = uniform(rng, 0, 3);
        auto x = random_oriental(rng, a, b), y = random_oriental(rng, b, c);
        ASSERT_TRUE(is_oriental_morphism(zcompose(y, x)));
        if (a > 0) {
            ASSERT_TRUE(is_oriental_morphism(face(uniform(rng, 0, a), x)));
        }
        ASSERT_TRUE(is_oriental_morphism(degeneracy(uniform(rng, 0, a), x)));
    }
}

TEST(Fillers, UsefulEqualities) {
    for (int n = 0; n <= 4; ++n)
        for (int a = 0; a <= n; ++a)
            for (int b = a; b <= n; ++b) {
                auto m = [&](std::vector<int> v) { return ZMorphism(MonotoneMap(std::move(v), n)); };
                EXPECT_EQ(filler(0, m({a, a}), m({a, b})), m({a, a, b}));
                EXPECT_EQ(filler(0, m({a, b}), m({b, b})), m({a, b, b}));
                EXPECT_EQ(pasting(0, m({a, a}), m({a, b})), m({a, b}));
                EXPECT_EQ(pasting(0, m({a, b}), m({b, b})), m({a, b}));
            }
    EXPECT_EQ(filler(0, zm("(0,1)", 2), zm("(1,2)", 2)), zm("(0,1,1) - (1,1,1) + (1,1,2)", 2));
}

TEST(Fillers, FacesAndClosure) {
    Rng rng(43);
    for (int trial = 0; trial < 500; ++trial) {
        int m = uniform(rng, 1, 3), n = uniform(rng, 0, 3);
        auto [i, x, y] = random_admissible_pair(rng, m, n);
        ASSERT_EQ(face(i, x), face(i + 1, y));
        auto f = filler(i, x, y);
        ASSERT_EQ(face(i, f), y);
        ASSERT_EQ(face(i + 1, f), pasting(i, x, y));
        ASSERT_EQ(face(i + 2, f), x);
        ASSERT_TRUE(is_oriental_morphism(f));
        ASSERT_TRUE(is_oriental_morphism(pasting(i, x, y)));
    }
}

TEST(Fillers, Preconditions) {
    EXPECT_THROW(filler(0, zm("(0,1)", 2), zm("(0,2)", 2)), NotComposableError);
    EXPECT_THROW(pasting(1, zm("(0,1)", 2), zm("(1,2)", 2)), NotComposableError);
    EXPECT_THROW(pasting(0, zm("(0,1)", 2), zm("(1,2)", 3)), ArityError);
}

TEST(Pasting, ZeroIsAssociative) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& p : vertex_paths(n)) {
            if (p.size() < 4) continue;
            auto e = [&](std::size_t k) { return ZMorphism(MonotoneMap({p[k], p[k + 1]}, n)); };
            EXPECT_EQ(pasting(0, pasting(0, e(0), e(1)), e(2)), pasting(0, e(0), pasting(0, e(1), e(2))));
        }
}

TEST(Structure, FirstLastAndTails) {
    Rng rng(44);
    for (int trial = 0; trial < 300; ++trial) {
        int m = uniform(rng, 1, 3), n = uniform(rng, 0, 3);
        auto x = random_oriental(rng, m, n);
        auto [s, t] = first_last(x);
        EXPECT_EQ(zcompose(x, MonotoneMap({0}, m)), ZMorphism(MonotoneMap({s}, n)));
        EXPECT_EQ(zcompose(x, MonotoneMap({m}, m)), ZMorphism(MonotoneMap({t}, n)));
        auto tails = tail_decompose(x);
        EXPECT_EQ(reassemble_tails(tails), x);
        // partial sums of tails satisfy the nonnegativity condition
        for (int r = 0; r <= n; ++r) {
            ZMorphism partial(m - 1, n);
            for (int k = r; k <= n; ++k) partial += tails[static_cast<std::size_t>(k)];
            for (const auto& g : enumerate_injective_into(m - 1)) {
                const auto composed = zcompose(partial, g);
                for (const auto& [a, c] : composed.terms()) {
                    if (is_injective(a)) {
                        ASSERT_GE(c, 0) << x << " r=" << r;
                    }
                }
            }
        }
    }
    EXPECT_THROW(first_last(zm("2*(0,1) - (1,1)", 1)), PreconditionError);
    EXPECT_THROW(tail_decompose(zm("(1)", 2)), DimensionError);
}

TEST(Splits, PostconditionsOnRandomMembers) {
    Rng rng(45);
    int attempts = 0;
    for (int trial = 0; trial < 300; ++trial) {
        int m = uniform(rng, 1, 3), n = uniform(rng, 1, 3);
        auto x = random_oriental(rng, m, n);
        int t = first_last(x).second;
        if (x.coefficient(MonotoneMap::constant(t, m, n)) != 0) continue;
        ++attempts;
        auto current = x;
        for (int r = 0; r <= m - 2; ++r) {
            auto s = split_start(r, t, current);
            EXPECT_EQ(pasting(r, s.u, s.v), current);
            for (const auto& [a, c] : s.u.terms()) EXPECT_LT(a[static_cast<std::size_t>(r + 1)], t);
            EXPECT_EQ(first_last(s.u).second, t);
            current = s.u;
        }
        auto mid = split_middle(t, current);
        EXPECT_LT(first_last(mid.u).second, t);
        EXPECT_EQ(first_last(mid.v).second, t);
        for (const auto& [a, c] : mid.v.terms())
            EXPECT_TRUE(a[static_cast<std::size_t>(m - 1)] == a.back() || a.back() == t);
        current = mid.v;
        for (int r = m - 2; r >= 0; --r) {
            auto s = split_finish(r, t, current);
            EXPECT_EQ(pasting(r, s.u, s.v), current);
            for (const auto& [a, c] : s.v.terms()) EXPECT_TRUE(a[static_cast<std::size_t>(r)] == a.back() || a.back() == t);
            current = s.v;
        }
        for (const auto& [a, c] : current.terms()) EXPECT_EQ(a.back(), t);
    }
    EXPECT_GT(attempts, 100);
}

TEST(Splits, RejectUnmetPreconditions) {
    auto x = zm("(0,1) - (1,1) + (1,2)", 2);
    EXPECT_THROW(split_start(0, 2, x), PreconditionError);   // needs m >= 2
    EXPECT_THROW(split_middle(1, x), PreconditionError);     // wrong t
    EXPECT_THROW(split_middle(2, zm("(2,2)", 2)), PreconditionError);
}

TEST(Generators, PoolsAreMembersAndExhaustSmallHomSets) {
    for (int n = 0; n <= 4; ++n)
        for (int m = 0; m <= 3; ++m)
            for (const auto& e : member_pool(n).level(m)) {
                ASSERT_EQ(eval_expr(e.expr), e.value);
                ASSERT_TRUE(oracle::member(oracle::from(e.value), m)) << e.value;
            }
    // Brute force over coefficients in [-1,1] where that is cheap.
    for (auto [m, n] : std::vector<std::pair<int, int>>{{1, 2}, {2, 2}, {1, 3}, {2, 1}, {3, 1}}) {
        auto maps = enumerate_monotone(m, n);
        std::set<ZMorphism> found;
        std::vector<int> digits(maps.size(), -1);
        while (true) {
            ZMorphism x(m, n);
            for (std::size_t k = 0; k < maps.size(); ++k) x.add_term(maps[k], digits[k]);
            if (oracle::member(oracle::from(x), m)) found.insert(x);
            std::size_t k = 0;
            while (k < digits.size() && digits[k] == 1) digits[k++] = -1;
            if (k == digits.size()) break;
            ++digits[k];
        }
        std::set<ZMorphism> pool;
        for (const auto& e : member_pool(n).level(m)) pool.insert(e.value);
        EXPECT_EQ(pool, found) << m << "," << n;
    }
}

TEST(Structure, ZeroSumsVanishOnBoundedRanges) {
    // Nonnegative injective probes and coefficient sum 0 force x = 0.
    for (auto [m, n] : std::vector<std::pair<int, int>>{{0, 3}, {1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}}) {
        auto maps = enumerate_monotone(m, n);
        std::vector<int> digits(maps.size(), -1);
        std::size_t zero_sums = 0;
        while (true) {
            oracle::Combo x;
            long long sum = 0;
            for (std::size_t k = 0; k < maps.size(); ++k) {
                if (digits[k]) x[oracle::Tuple(maps[k].values().begin(), maps[k].values().end())] = digits[k];
                sum += digits[k];
            }
            if (sum == 0) {
                ++zero_sums;
                if (oracle::probes_nonnegative(x, m)) {
                    EXPECT_TRUE(x.empty()) << m << "," << n;
                }
            }
            std::size_t k = 0;
            while (k < digits.size() && digits[k] == 1) digits[k++] = -1;
            if (k == digits.size()) break;
            ++digits[k];
        }
        EXPECT_GT(zero_sums, 0u);
    }
}
