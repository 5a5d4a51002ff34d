#include "fixtures.hpp"
#include "skillsim/design.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace skillsim {
namespace {

DesignSpace unit_space(std::size_t dims) {
    DesignSpace s;
    const auto& names = design_axis_names();
    for (std::size_t j = 0; j < dims; ++j) s.numeric.push_back({names[j], 0.0, 1.0});
    s.interactions = {InteractionKind::Mean};
    s.curves = {LogisticCurve{5}};
    return s;
}

DesignSpace line_space() {
    DesignSpace s;
    s.numeric = {{"t_err", 0.0, 1.0}};
    return s;
}

std::vector<DesignPoint> line_points(std::initializer_list<double> xs) {
    std::vector<DesignPoint> out;
    for (double x : xs) out.push_back({{x}});
    return out;
}

/// Every stratum [j/n, (j+1)/n) of every dimension holds exactly one point.
void expect_stratified(const DesignSpace& space, const std::vector<DesignPoint>& pts) {
    const std::size_t n = pts.size();
    for (std::size_t d = 0; d < space.dims(); ++d) {
        const auto& r = space.numeric[d];
        std::vector<int> hits(n, 0);
        for (const auto& p : pts) {
            ASSERT_GE(p.numeric[d], r.lo);
            ASSERT_LE(p.numeric[d], r.hi);
            auto s = static_cast<std::size_t>((p.numeric[d] - r.lo) / (r.hi - r.lo) * static_cast<double>(n));
            ++hits[std::min(s, n - 1)];
        }
        for (std::size_t j = 0; j < n; ++j) EXPECT_EQ(hits[j], 1) << r.name << " stratum " << j;
    }
}

TEST(Lhs, SinglePoint) {
    RandomStream rng(1);
    const auto pts = lhs_sample(unit_space(1), 1, rng);
    ASSERT_EQ(pts.size(), 1u);
    EXPECT_GE(pts[0].numeric[0], 0.0);
    EXPECT_LE(pts[0].numeric[0], 1.0);
}

TEST(Lhs, OnePointPerStratum) {
    const DesignSpace space = DesignSpace::defaults();
    for (std::size_t n : {4u, 16u, 100u, 250u}) {
        RandomStream rng(n);
        expect_stratified(space, lhs_sample(space, n, rng));
    }
    RandomStream rng(4);
    const auto four = lhs_sample(unit_space(1), 4, rng);
    std::vector<double> xs;
    for (const auto& p : four) xs.push_back(p.numeric[0]);
    std::sort(xs.begin(), xs.end());
    EXPECT_LT(xs[0], 0.25);
    EXPECT_GE(xs[1], 0.25);
    EXPECT_LT(xs[1], 0.5);
    EXPECT_GE(xs[2], 0.5);
    EXPECT_LT(xs[2], 0.75);
    EXPECT_GE(xs[3], 0.75);
}

double spearman(const std::vector<double>& a, const std::vector<double>& b) {
    auto ranks = [](const std::vector<double>& v) {
        std::vector<std::size_t> idx(v.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::sort(idx.begin(), idx.end(), [&](auto l, auto r) { return v[l] < v[r]; });
        std::vector<double> rk(v.size());
        for (std::size_t j = 0; j < idx.size(); ++j) rk[idx[j]] = static_cast<double>(j);
        return rk;
    };
    const auto ra = ranks(a), rb = ranks(b);
    const double n = static_cast<double>(a.size());
    double d2 = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) d2 += (ra[j] - rb[j]) * (ra[j] - rb[j]);
    return 1.0 - 6.0 * d2 / (n * (n * n - 1.0));
}

TEST(Lhs, DimensionsIndependent) {
    const DesignSpace space = DesignSpace::defaults();
    const std::size_t g = *space.find("gamma_hm"), t = *space.find("t_err");
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        RandomStream rng(seed);
        const auto pts = lhs_sample(space, 100, rng);
        std::vector<double> a, b;
        for (const auto& p : pts) {
            a.push_back(p.numeric[g]);
            b.push_back(p.numeric[t]);
        }
        EXPECT_LT(std::abs(spearman(a, b)), 0.3) << "seed " << seed;
    }
}

TEST(Lhs, KolmogorovSmirnovUniform) {
    const DesignSpace space = DesignSpace::defaults();
    RandomStream rng(99);
    const std::size_t n = 500;
    const auto pts = lhs_sample(space, n, rng);
    const double critical = 1.628 / std::sqrt(static_cast<double>(n));  // alpha = 0.01
    for (std::size_t d = 0; d < space.dims(); ++d) {
        const auto& r = space.numeric[d];
        std::vector<double> u;
        for (const auto& p : pts) u.push_back((p.numeric[d] - r.lo) / (r.hi - r.lo));
        std::sort(u.begin(), u.end());
        double stat = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            stat = std::max(stat, static_cast<double>(j + 1) / n - u[j]);
            stat = std::max(stat, u[j] - static_cast<double>(j) / n);
        }
        EXPECT_LT(stat, critical) << r.name;
    }
}

TEST(Maximin, FarthestPair) {
    const auto out = maximin_select(line_space(), line_points({0.0, 0.5, 1.0}), 2);
    EXPECT_EQ(out, line_points({0.0, 1.0}));
}

TEST(Maximin, GreedyMatchesBruteForceOnSmallSet) {
    const auto candidates = line_points({0.0, 0.4, 0.5, 1.0});
    const auto out = maximin_select(line_space(), candidates, 3);
    EXPECT_EQ(out, line_points({0.0, 1.0, 0.5}));

    // Brute force over all 3-subsets.
    double best = -1.0;
    for (std::size_t skip = 0; skip < candidates.size(); ++skip) {
        std::vector<DesignPoint> subset;
        for (std::size_t j = 0; j < candidates.size(); ++j)
            if (j != skip) subset.push_back(candidates[j]);
        best = std::max(best, min_pairwise_distance(line_space(), subset));
    }
    EXPECT_DOUBLE_EQ(min_pairwise_distance(line_space(), out), best);
}

TEST(Maximin, FullSetAndErrors) {
    const auto candidates = line_points({0.3, 0.1, 0.9, 0.5});
    auto out = maximin_select(line_space(), candidates, candidates.size());
    auto key = [](const std::vector<DesignPoint>& v) {
        std::multiset<double> s;
        for (const auto& p : v) s.insert(p.numeric[0]);
        return s;
    };
    EXPECT_EQ(key(out), key(candidates));
    EXPECT_THROW(maximin_select(line_space(), candidates, 5), UsageError);
}

TEST(Maximin, PermutationInvariantWithoutTies) {
    const DesignSpace space = DesignSpace::defaults();
    RandomStream rng(5);
    auto candidates = lhs_sample(space, 200, rng);
    auto as_set = [](std::vector<DesignPoint> v) {
        std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.numeric < b.numeric; });
        return v;
    };
    const auto first = as_set(maximin_select(space, candidates, 20));
    std::reverse(candidates.begin(), candidates.end());
    EXPECT_EQ(as_set(maximin_select(space, candidates, 20)), first);
}

TEST(Maximin, BeatsRandomSubsets) {
    const DesignSpace space = DesignSpace::defaults();
    RandomStream rng(17);
    const auto candidates = lhs_sample(space, 400, rng);
    const double chosen = min_pairwise_distance(space, maximin_select(space, candidates, 20));
    int beaten = 0;
    const int trials = 200;
    for (int t = 0; t < trials; ++t) {
        std::vector<std::size_t> idx(candidates.size());
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        std::shuffle(idx.begin(), idx.end(), rng);
        std::vector<DesignPoint> random_subset;
        for (std::size_t j = 0; j < 20; ++j) random_subset.push_back(candidates[idx[j]]);
        beaten += chosen >= min_pairwise_distance(space, random_subset);
    }
    EXPECT_EQ(beaten, trials);
}

TEST(BuildDesigns, CountsSeedsAndDerivedMargins) {
    const DesignSpace space = DesignSpace::defaults();
    SimulationConfig base = testing::small_experiment();
    base.config_id = "";
    RandomStream rng(8);
    const auto configs = build_designs(space, 8, {}, base, rng);
    ASSERT_EQ(configs.size(), 48u);
    std::set<std::string> ids;
    std::set<std::uint64_t> seeds;
    for (const auto& cfg : configs) {
        EXPECT_NO_THROW(validate(cfg));
        ids.insert(cfg.config_id);
        seeds.insert(cfg.seed);
        const double mc_hm = cfg.econ.mc[PolicyKind::H] + cfg.econ.mc[PolicyKind::M] - 1.0;
        EXPECT_NEAR(cfg.econ.mc[PolicyKind::HM], mc_hm, 1e-12);
        EXPECT_GE(cfg.econ.mc[PolicyKind::HM], 0.1 - 1e-12);
        EXPECT_LE(cfg.econ.mc[PolicyKind::HM], 0.5 + 1e-12);
        EXPECT_EQ(cfg.econ.delta[PolicyKind::H], 0.0);
        EXPECT_EQ(cfg.econ.delta[PolicyKind::M], 0.0);
        EXPECT_EQ(cfg.n_runs, base.n_runs);
    }
    EXPECT_EQ(ids.size(), 48u);
    EXPECT_EQ(seeds.size(), 48u);
    EXPECT_EQ(configs.front().config_id, "s0000");

    std::set<std::pair<InteractionKind, std::string>> grid;
    for (const auto& cfg : configs) grid.insert({cfg.interaction, std::string(curve_name(cfg.curve))});
    EXPECT_EQ(grid.size(), 6u);
}

TEST(BuildDesigns, DerivedHmMargin) {
    DesignSpace space;
    space.numeric = {{"mc_H", 0.4, 0.6}};
    space.interactions = {InteractionKind::Mean};
    space.curves = {LogisticCurve{5}};
    SimulationConfig cfg = testing::small_experiment();
    cfg.econ.mc[PolicyKind::M] = 0.7;
    apply_point(space, DesignPoint{{0.5}}, cfg);
    EXPECT_EQ(cfg.econ.mc[PolicyKind::H], 0.5);
    EXPECT_NEAR(cfg.econ.mc[PolicyKind::HM], 0.2, 1e-12);
}

TEST(BuildDesigns, DeterministicAndMaximin) {
    const DesignSpace space = DesignSpace::defaults();
    const SimulationConfig base = testing::small_experiment();
    RandomStream a(3), b(3);
    EXPECT_EQ(build_designs(space, 5, {DesignMethod::Maximin, 0}, base, a),
              build_designs(space, 5, {DesignMethod::Maximin, 0}, base, b));
    RandomStream c(3);
    EXPECT_THROW(build_designs(space, 5, {DesignMethod::Maximin, 4}, base, c), UsageError);
}

TEST(DesignSpace, Validation) {
    DesignSpace s = DesignSpace::defaults();
    EXPECT_NO_THROW(s.validate());
    s.numeric.push_back({"gamma_hm", 1.0, 3.0});
    EXPECT_THROW(s.validate(), ConfigError);
    s = DesignSpace::defaults();
    s.numeric[0].hi = s.numeric[0].lo;
    EXPECT_THROW(s.validate(), ConfigError);
    s = DesignSpace::defaults();
    s.numeric.push_back({"warp_factor", 0.0, 1.0});
    EXPECT_THROW(s.validate(), ConfigError);
}

} // namespace
} // namespace skillsim
