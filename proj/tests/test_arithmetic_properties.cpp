// Property tests over randomized fuzzy numbers: alpha-cut nesting, crisp
// embedding, closure of the arithmetic, agreement with the brute-force
// extension-principle oracle, and reconstruction of triangular cuts.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fuzzcalc/fuzzy_number.hpp"

namespace fuzzcalc {
namespace {

// Triangular numbers with support inside [-scale, scale].
TriangularParams random_triangular(std::mt19937_64& rng, double scale = 10.0) {
    std::uniform_real_distribution<double> u(-scale, scale);
    double v[3] = {u(rng), u(rng), u(rng)};
    std::sort(std::begin(v), std::end(v));
    return {v[0], v[1], v[2]};
}

LevelInterval random_interval(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> u(-5.0, 5.0);
    const double a = u(rng);
    const double b = u(rng);
    return {std::min(a, b), std::max(a, b)};
}

TEST(Properties, AlphaCutNesting) {
    std::mt19937_64 rng(20260101);
    const AlphaGrid g = AlphaGrid::uniform(50);
    for (int trial = 0; trial < 200; ++trial) {
        const FuzzyNumber f = from_triangular(random_triangular(rng), g);
        for (std::size_t i = 0; i < g.size(); ++i) {
            for (std::size_t j = i; j < g.size(); ++j) {
                ASSERT_TRUE(f.cut(i).contains(f.cut(j), kDefaultTolerance)) << "trial " << trial;
            }
        }
    }
}

TEST(Properties, CrispEmbeddingIsExact) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> u(-1e3, 1e3);
    const AlphaGrid g = AlphaGrid::uniform(8);
    for (int trial = 0; trial < 500; ++trial) {
        const double x = u(rng);
        const double y = u(rng);
        const double lambda = u(rng);
        const FuzzyNumber a = FuzzyNumber::crisp(x, g);
        const FuzzyNumber b = FuzzyNumber::crisp(y, g);
        EXPECT_EQ(add(a, b), FuzzyNumber::crisp(x + y, g));
        EXPECT_EQ(multiply(a, b), FuzzyNumber::crisp(x * y, g));
        EXPECT_EQ(scalar_mul(lambda, a), FuzzyNumber::crisp(lambda * x, g));
        EXPECT_EQ(extension_brute_force_multiply(a, b, 5), FuzzyNumber::crisp(x * y, g));
    }
}

TEST(Properties, ArithmeticClosure) {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-4.0, 4.0);
    const AlphaGrid g = AlphaGrid::uniform(100);
    for (int trial = 0; trial < 300; ++trial) {
        const FuzzyNumber a = from_triangular(random_triangular(rng), g);
        const FuzzyNumber b = from_triangular(random_triangular(rng), g);
        ASSERT_TRUE(validate_fuzzy(add(a, b)).valid);
        ASSERT_TRUE(validate_fuzzy(multiply(a, b)).valid);
        ASSERT_TRUE(validate_fuzzy(scalar_mul(u(rng), a)).valid);
    }
}

TEST(Properties, MultiplyMatchesBruteForceOracle) {
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        const LevelInterval a = random_interval(rng);
        const LevelInterval b = random_interval(rng);
        EXPECT_EQ(a * b, extension_brute_force_multiply(a, b, 101)) << "trial " << trial;
    }
}

TEST(Properties, BruteForceConvergesFromInside) {
    // Coarse samples of r*s never leave the exact hull.
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const LevelInterval a = random_interval(rng);
        const LevelInterval b = random_interval(rng);
        const LevelInterval exact = a * b;
        for (std::size_t n : {2u, 3u, 17u}) {
            EXPECT_TRUE(exact.contains(extension_brute_force_multiply(a, b, n)));
        }
    }
}

TEST(Properties, TriangularReconstruction) {
    std::mt19937_64 rng(31337);
    const AlphaGrid g = AlphaGrid::uniform(100);
    for (int trial = 0; trial < 100; ++trial) {
        const TriangularParams p = random_triangular(rng);
        const FuzzyNumber f = from_triangular(p, g);
        for (std::size_t i = 0; i < g.size(); ++i) {
            ASSERT_EQ(f.cut(i), triangular_alpha_cut(p, g[i]));
            ASSERT_EQ(f.cut_at(g[i]), triangular_alpha_cut(p, g[i]));
        }
    }
}

TEST(Properties, MembershipAgreesWithCuts) {
    // r lies in the alpha-cut iff its grade is at least alpha.
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 500; ++trial) {
        const TriangularParams p = random_triangular(rng);
        if (p.left == p.right) {
            continue;
        }
        const double alpha = 0.05 + 0.9 * unit(rng);
        const LevelInterval cut = triangular_alpha_cut(p, alpha);
        const double r = p.left - 1.0 + (p.right - p.left + 2.0) * unit(rng);
        const double grade = triangular_membership(p, r);
        if (std::abs(grade - alpha) > 1e-9) {
            EXPECT_EQ(grade >= alpha, r >= cut.lo && r <= cut.hi) << "trial " << trial;
        }
    }
}

}  // namespace
}  // namespace fuzzcalc
