#include "skillsim/random.hpp"

#include <gtest/gtest.h>

#include <array>
#include <cmath>
#include <set>

namespace skillsim {
namespace {

TEST(RandomStream, SameSeedSameSequence) {
    RandomStream a(42), b(42), c(43);
    bool differs = false;
    for (int i = 0; i < 1000; ++i) {
        const auto x = a();
        ASSERT_EQ(x, b());
        differs |= x != c();
    }
    EXPECT_TRUE(differs);
}

TEST(RandomStream, UniformInHalfOpenUnitInterval) {
    RandomStream rng(1);
    for (int i = 0; i < 100000; ++i) {
        const double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(RandomStream, RunStreamsAreDistinct) {
    std::set<std::uint64_t> firsts;
    for (std::uint64_t k = 1; k <= 1000; ++k) firsts.insert(RandomStream::for_run(42, k)());
    EXPECT_EQ(firsts.size(), 1000u);
    EXPECT_NE(derive_seed(1, 2), derive_seed(2, 1));
}

TEST(RandomChoice, Degenerate) {
    const std::array<int, 3> items{0, 1, 2};
    RandomStream rng(9);
    for (int i = 0; i < 1000; ++i) {
        ASSERT_EQ(random_choice(std::span<const int>(items), std::span<const double>(std::array{1.0, 0.0, 0.0}), rng), 0);
        ASSERT_EQ(random_choice(std::span<const int>(items), std::span<const double>(std::array{0.0, 0.0, 1.0}), rng), 2);
    }
}

TEST(RandomChoice, UniformFrequencies) {
    const std::array<int, 3> items{0, 1, 2};
    const std::array<double, 3> probs{1.0 / 3, 1.0 / 3, 1.0 / 3};
    RandomStream rng(2024);
    std::array<int, 3> counts{};
    const int n = 30000;
    for (int i = 0; i < n; ++i) ++counts[static_cast<std::size_t>(random_choice(std::span<const int>(items), std::span<const double>(probs), rng))];
    for (int c : counts) {
        const double f = static_cast<double>(c) / n;
        EXPECT_GE(f, 0.3233);
        EXPECT_LE(f, 0.3433);
    }
}

TEST(RandomChoice, MalformedProbabilities) {
    const std::array<int, 3> items{0, 1, 2};
    RandomStream rng(1);
    auto pick = [&](std::array<double, 3> p) { return random_choice(std::span<const int>(items), std::span<const double>(p), rng); };
    EXPECT_THROW(pick({0.5, 0.5, 0.5}), ConfigError);
    EXPECT_THROW(pick({-0.1, 0.6, 0.5}), ConfigError);
    EXPECT_THROW(pick({NAN, 0.5, 0.5}), ConfigError);
    const std::array<double, 2> short_probs{0.5, 0.5};
    EXPECT_THROW(random_choice(std::span<const int>(items), std::span<const double>(short_probs), rng), ConfigError);
}

struct BetaCase {
    double alpha;
    double beta;
};

class BetaMean : public ::testing::TestWithParam<BetaCase> {};

TEST_P(BetaMean, WithinThreeSigma) {
    const auto [a, b] = GetParam();
    RandomStream rng(777);
    const int n = 100000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = sample_beta({a, b}, rng);
        ASSERT_GE(x, 0.0);
        ASSERT_LE(x, 1.0);
        sum += x;
    }
    const double mean = a / (a + b);
    const double sd = std::sqrt(a * b / ((a + b) * (a + b) * (a + b + 1.0)));
    EXPECT_NEAR(sum / n, mean, 3.0 * sd / std::sqrt(static_cast<double>(n)));
}

INSTANTIATE_TEST_SUITE_P(Shapes, BetaMean,
                         ::testing::Values(BetaCase{1, 1}, BetaCase{2, 8}, BetaCase{8, 2}, BetaCase{5, 5},
                                           BetaCase{0.5, 0.5}, BetaCase{0.2, 3}));

TEST(SampleBeta, StatedBounds) {
    // Beta(1,1): 0.5 +/- 0.003; Beta(8,2): 0.8 +/- 0.0012.
    RandomStream rng(31337);
    double s11 = 0.0, s82 = 0.0;
    for (int i = 0; i < 100000; ++i) {
        s11 += sample_beta({1, 1}, rng);
        s82 += sample_beta({8, 2}, rng);
    }
    EXPECT_NEAR(s11 / 1e5, 0.5, 0.003);
    EXPECT_NEAR(s82 / 1e5, 0.8, 0.0012);
}

TEST(SampleBeta, RejectsNonPositiveShapes) {
    RandomStream rng(1);
    EXPECT_THROW(sample_beta({0.0, 1.0}, rng), ConfigError);
    EXPECT_THROW(sample_beta({1.0, -2.0}, rng), ConfigError);
}

TEST(SampleBeta, DeterministicGivenStream) {
    RandomStream a(5), b(5);
    for (int i = 0; i < 1000; ++i) ASSERT_EQ(sample_beta({2, 8}, a), sample_beta({2, 8}, b));
}

} // namespace
} // namespace skillsim
