#ifndef SKILLSIM_ENGINE_HPP
#define SKILLSIM_ENGINE_HPP

#include "skillsim/detail/parallel.hpp"
#include "skillsim/model.hpp"
#include "skillsim/random.hpp"
#include "skillsim/types.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace skillsim {

/// One task execution: coordinates (i, c, a, d, e, k) and the five metrics.
struct MetricRecord {
    int firm = 0;
    PolicyKind policy = PolicyKind::H;
    InteractionKind interaction = InteractionKind::Individual;
    Difficulty difficulty = Difficulty::Low;
    int epoch = 0;
    int run = 1;  ///< 1-based
    double theta = 0.0;
    double y = 0.0;
    double v = 0.0;
    double err = 0.0;
    double u = 0.0;

    bool operator==(const MetricRecord&) const = default;
};

/// The paired human/machine draws behind a record (debug mode only).
struct SkillDraws {
    double theta_h = 0.0;
    double theta_m = 0.0;
    bool operator==(const SkillDraws&) const = default;
};

/// All records of one simulation, ordered by (run, epoch, firm).
struct MetricFrame {
    std::string config_id;
    std::vector<MetricRecord> records;
    std::vector<SkillDraws> draws;            ///< parallel to records when debug mode was on, else empty
    std::optional<SimulationConfig> config;   ///< the producing config, when known
};

struct RunOptions {
    bool debug = false;    ///< keep theta_H / theta_M per record
    unsigned threads = 1;  ///< workers over runs k; does not affect results
};

/// One policy per firm, drawn independently from p_policy.
inline std::vector<PolicyKind> assign_policies(int n_firms, const PerPolicy<double>& p_policy, RandomStream& rng) {
    std::vector<PolicyKind> out;
    out.reserve(static_cast<std::size_t>(std::max(0, n_firms)));
    for (int i = 0; i < n_firms; ++i)
        out.push_back(random_choice(std::span<const PolicyKind>(kPolicies), std::span<const double>(p_policy.values), rng));
    return out;
}

/// Beta parameters of (c, d) at epoch e, each shape interpolated independently.
inline BetaParams epoch_beta(const SkillSchedule& schedule, PolicyKind c, Difficulty d, long e, long n_epochs) {
    if (c == PolicyKind::HM) throw UsageError("epoch_beta: HM has no skill schedule");
    const BetaRamp& r = schedule.at(c, d);
    return {interpolate(r.start.alpha, r.end.alpha, e, n_epochs), interpolate(r.start.beta, r.end.beta, e, n_epochs)};
}

namespace detail {

/// Fills the E*N records of run k (1-based) starting at `out`.
/// Draw order: N policies, then per (e, i): difficulty, theta_H, theta_M.
inline void simulate_run(const SimulationConfig& cfg, int k, std::span<MetricRecord> out, std::span<SkillDraws> draws) {
    RandomStream rng = RandomStream::for_run(cfg.seed, static_cast<std::uint64_t>(k));
    const std::vector<PolicyKind> policies = assign_policies(cfg.n_firms, cfg.p_policy, rng);
    const std::span<const Difficulty> difficulties(kDifficulties);
    const std::span<const double> p_difficulty(cfg.p_difficulty.values);

    std::size_t slot = 0;
    for (int e = 0; e < cfg.n_epochs; ++e) {
        PerPolicy<double> margin;
        for (PolicyKind c : kPolicies) margin[c] = margin_factor(cfg.econ.delta[c], e, cfg.n_epochs);

        for (int i = 0; i < cfg.n_firms; ++i, ++slot) {
            const PolicyKind c = policies[static_cast<std::size_t>(i)];
            const Difficulty d = random_choice(difficulties, p_difficulty, rng);
            const double theta_h = sample_beta(epoch_beta(cfg.schedule, PolicyKind::H, d, e, cfg.n_epochs), rng);
            const double theta_m = sample_beta(epoch_beta(cfg.schedule, PolicyKind::M, d, e, cfg.n_epochs), rng);

            MetricRecord& r = out[slot];
            r.firm = i;
            r.policy = c;
            r.difficulty = d;
            r.epoch = e;
            r.run = k;
            switch (c) {
            case PolicyKind::H:
                r.theta = theta_h;
                r.interaction = InteractionKind::Individual;
                break;
            case PolicyKind::M:
                r.theta = theta_m;
                r.interaction = InteractionKind::Individual;
                break;
            case PolicyKind::HM:
                r.theta = combine_skills(cfg.interaction, theta_h, theta_m, cfg.gamma_hm);
                r.interaction = cfg.interaction;
                break;
            }
            r.y = quality_output(cfg.curve, r.theta);
            r.v = value(r.y, cfg.econ.mc[c], margin[c]);
            r.err = error_cost(r.theta, cfg.econ.t_err, cfg.econ.c_err);
            r.u = utility(r.v, r.err);
            if (!draws.empty()) draws[slot] = {theta_h, theta_m};
        }
    }
}

} // namespace detail

/// Runs the K x E x N Monte Carlo loop. Each run k draws from its own
/// stream derived from (seed, k), so the frame does not depend on `threads`.
inline MetricFrame run_simulation(const SimulationConfig& cfg, const RunOptions& opts = {}) {
    validate(cfg);
    const std::size_t per_run = static_cast<std::size_t>(cfg.n_epochs) * static_cast<std::size_t>(cfg.n_firms);
    const std::size_t total = per_run * static_cast<std::size_t>(cfg.n_runs);

    MetricFrame frame;
    frame.config_id = cfg.config_id;
    frame.config = cfg;
    frame.records.resize(total);
    if (opts.debug) frame.draws.resize(total);

    std::span<MetricRecord> records(frame.records);
    std::span<SkillDraws> draws(frame.draws);
    detail::parallel_for(static_cast<std::size_t>(cfg.n_runs), opts.threads, [&](std::size_t r) {
        const std::size_t offset = r * per_run;
        detail::simulate_run(cfg, static_cast<int>(r) + 1, records.subspan(offset, per_run),
                             draws.empty() ? std::span<SkillDraws>{} : draws.subspan(offset, per_run));
    });
    return frame;
}

/// Outcome of one config in a batch: a frame, or the reason it failed.
struct BatchResult {
    std::string config_id;
    std::optional<MetricFrame> frame;
    std::string error;

    bool ok() const { return frame.has_value(); }
};

/// Runs configs concurrently; output order follows input order and a failing
/// config does not stop the others.
inline std::vector<BatchResult> run_batch(std::span<const SimulationConfig> configs, unsigned parallelism,
                                          bool debug = false) {
    if (parallelism < 1) throw UsageError("run_batch: parallelism must be >= 1");
    std::vector<BatchResult> results(configs.size());
    detail::parallel_for(configs.size(), parallelism, [&](std::size_t j) {
        results[j].config_id = configs[j].config_id;
        try {
            results[j].frame = run_simulation(configs[j], RunOptions{debug, 1});
        } catch (const std::exception& ex) {
            results[j].error = ex.what();
        }
    });
    return results;
}

} // namespace skillsim

#endif // SKILLSIM_ENGINE_HPP
