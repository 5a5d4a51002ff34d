#ifndef SKILLSIM_TESTS_ORACLES_HPP
#define SKILLSIM_TESTS_ORACLES_HPP

// Independent reference implementations and frozen reference values.

#include "skillsim/analytics.hpp"
#include "skillsim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

namespace skillsim::oracle {

struct BruteStats {
    long double mu = 0, sigma = 0, rho = 0, iqr = 0;
    std::optional<long double> sk;
};

// Textbook definitions in long double, quantiles straight from the sorted list.
inline BruteStats brute_summarize(const std::vector<double>& xs) {
    std::vector<long double> v(xs.begin(), xs.end());
    std::sort(v.begin(), v.end());
    const auto n = static_cast<long double>(v.size());
    BruteStats s;
    long double sum = 0;
    for (auto x : v) sum += x;
    s.mu = sum / n;
    long double m2 = 0, m3 = 0;
    for (auto x : v) {
        m2 += (x - s.mu) * (x - s.mu);
        m3 += (x - s.mu) * (x - s.mu) * (x - s.mu);
    }
    m2 /= n;
    m3 /= n;
    s.sigma = std::sqrt(m2);
    s.rho = v.back() - v.front();
    auto q = [&](long double p) {
        const long double h = (n - 1) * p;
        const auto lo = static_cast<std::size_t>(std::floor(h));
        const std::size_t hi = std::min(lo + 1, v.size() - 1);
        return v[lo] + (h - static_cast<long double>(lo)) * (v[hi] - v[lo]);
    };
    s.iqr = q(0.75L) - q(0.25L);
    if (v.size() >= 3 && s.rho > 0) s.sk = std::sqrt(n * (n - 1)) / (n - 2) * m3 / std::pow(m2, 1.5L);
    return s;
}

/// Largest absolute difference between summarize() and the oracle; sk
/// presence must agree or the result is infinite.
inline double max_summary_error(const std::vector<double>& xs) {
    const SummaryStats got = summarize(xs);
    const BruteStats want = brute_summarize(xs);
    if (got.sk.has_value() != want.sk.has_value()) return INFINITY;
    double err = 0.0;
    auto track = [&](double a, long double b) { err = std::max(err, static_cast<double>(std::fabs(a - b))); };
    track(got.mu, want.mu);
    track(got.sigma, want.sigma);
    track(got.rho, want.rho);
    track(got.iqr, want.iqr);
    if (got.sk) track(*got.sk, *want.sk);
    return err;
}

inline MetricRecord u_record(PolicyKind c, InteractionKind a, Difficulty d, double u) {
    MetricRecord r;
    r.policy = c;
    r.interaction = a;
    r.difficulty = d;
    r.u = u;
    r.v = u;
    r.theta = u;
    r.y = u;
    return r;
}

/// Two frames, twenty records, only u meaningful.
inline std::vector<MetricFrame> hmg_fixture() {
    using enum PolicyKind;
    constexpr auto Ind = InteractionKind::Individual, Mean = InteractionKind::Mean,
                   Col = InteractionKind::Collaborate, Sup = InteractionKind::Superpower;
    constexpr auto Low = Difficulty::Low, Med = Difficulty::Med, High = Difficulty::High;
    MetricFrame f1{"f1", {u_record(H, Ind, Low, 0.4), u_record(H, Ind, Low, 0.6), u_record(M, Ind, Low, 0.3),
                          u_record(M, Ind, High, 0.1), u_record(HM, Mean, Low, 0.5), u_record(HM, Mean, High, 0.3),
                          u_record(HM, Sup, Low, 0.9), u_record(H, Ind, High, 0.2), u_record(HM, Col, Med, 0.7),
                          u_record(H, Ind, Med, 0.5)},
                   {}, std::nullopt};
    MetricFrame f2{"f2", {u_record(H, Ind, Low, 0.2), u_record(H, Ind, Med, 0.3), u_record(H, Ind, High, -0.1),
                          u_record(M, Ind, Low, 0.5), u_record(M, Ind, Med, 0.6), u_record(M, Ind, High, -0.2),
                          u_record(HM, Mean, Low, 0.4), u_record(HM, Mean, High, 0.1), u_record(HM, Col, Med, 0.8),
                          u_record(HM, Sup, Low, 0.7)},
                   {}, std::nullopt};
    return {f1, f2};
}

struct ExpectedGain {
    PolicyKind c0;
    std::optional<Difficulty> d;
    InteractionKind a0;
    double hm_bar;
    double baseline_bar;
    double gain_pct;
};

/// HMG(mu, u) over hmg_fixture(), computed with exact rational arithmetic.
inline std::vector<ExpectedGain> hmg_fixture_expected() {
    using enum PolicyKind;
    constexpr auto Mean = InteractionKind::Mean, Col = InteractionKind::Collaborate, Sup = InteractionKind::Superpower;
    constexpr std::optional<Difficulty> all{}, Low{Difficulty::Low}, Med{Difficulty::Med}, High{Difficulty::High};
    return {
        {H, all, Mean, 0.325, 0.27916666666666667, 16.417910447761194},
        {H, all, Col, 0.75, 0.27916666666666667, 168.65671641791045},
        {H, all, Sup, 0.8, 0.27916666666666667, 186.56716417910448},
        {H, Low, Mean, 0.45, 0.35, 28.571428571428573},
        {H, Low, Sup, 0.8, 0.35, 128.57142857142858},
        {H, Med, Col, 0.75, 0.4, 87.5},
        {H, High, Mean, 0.2, 0.05, 300.0},
        {M, all, Mean, 0.325, 0.25, 30.0},
        {M, all, Col, 0.75, 0.25, 200.0},
        {M, all, Sup, 0.8, 0.25, 220.0},
        {M, Low, Mean, 0.45, 0.4, 12.5},
        {M, Low, Sup, 0.8, 0.4, 100.0},
        {M, Med, Col, 0.75, 0.6, 25.0},
        {M, High, Mean, 0.2, -0.05, 500.0},
    };
}

inline constexpr std::size_t kHmgFixtureOmitted = 10;

/// Empty string when the table matches the frozen values within tol.
inline std::string compare_hmg_fixture(const HmgTable& table, double tol) {
    const auto expected = hmg_fixture_expected();
    if (table.entries.size() != expected.size())
        return "entry count " + std::to_string(table.entries.size()) + " != " + std::to_string(expected.size());
    if (table.diagnostics.size() != kHmgFixtureOmitted)
        return "omitted count " + std::to_string(table.diagnostics.size());
    for (const auto& want : expected) {
        auto it = std::find_if(table.entries.begin(), table.entries.end(), [&](const HmgEntry& e) {
            return e.baseline == want.c0 && e.difficulty == want.d && e.a0 == want.a0;
        });
        const std::string tag = std::string(to_string(want.c0)) + "/" +
                                (want.d ? std::string(to_string(*want.d)) : "all") + "/" +
                                std::string(to_string(want.a0));
        if (it == table.entries.end()) return "missing " + tag;
        if (std::fabs(it->hm_bar - want.hm_bar) > tol || std::fabs(it->baseline_bar - want.baseline_bar) > tol ||
            !it->gain_pct || std::fabs(*it->gain_pct - want.gain_pct) > tol)
            return "mismatch at " + tag;
    }
    return {};
}

} // namespace skillsim::oracle

#endif // SKILLSIM_TESTS_ORACLES_HPP
