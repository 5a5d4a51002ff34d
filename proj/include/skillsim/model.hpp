#ifndef SKILLSIM_MODEL_HPP
#define SKILLSIM_MODEL_HPP

#include "skillsim/detail/overloaded.hpp"
#include "skillsim/types.hpp"

#include <algorithm>
#include <cmath>

namespace skillsim {

/// Linear interpolation between `start` (step 0) and `end` (step tot_steps-1).
/// Degenerate schedules (tot_steps <= 1) stay at `start`.
constexpr double interpolate(double start, double end, long cur_step, long tot_steps) {
    if (tot_steps <= 1) return start;
    if (cur_step == tot_steps - 1) return end;
    return start + (end - start) * static_cast<double>(cur_step) / static_cast<double>(tot_steps - 1);
}

/// Performance of the human-machine policy from paired human and machine draws.
inline double combine_skills(InteractionKind kind, double theta_h, double theta_m, double gamma) {
    switch (kind) {
    case InteractionKind::Min: return std::min(theta_h, theta_m);
    case InteractionKind::Max: return std::max(theta_h, theta_m);
    case InteractionKind::Mean: return 0.5 * (theta_h + theta_m);
    case InteractionKind::Collaborate: return std::min(1.0, 0.5 * (theta_h + theta_m) * gamma);
    case InteractionKind::Superpower: return std::min(1.0, std::max(theta_h, theta_m) * gamma);
    case InteractionKind::Individual: break;
    }
    throw UsageError("combine_skills: Individual does not define a combination");
}

inline constexpr double kLogitEpsilon = 1e-9;

/// Quality-adjusted output y = g'(theta), clipped to [0, 1].
inline double quality_output(const OutputCurve& curve, double theta) {
    const double y = std::visit(
        detail::overloaded{
            [&](const LinearCurve& c) { return c.slope * theta + c.intercept; },
            [&](const LogisticCurve& c) { return 1.0 / (1.0 + std::exp(-c.k * (2.0 * theta - 1.0))); },
            [&](const InverseLogisticCurve& c) {
                const double t = std::clamp(theta, kLogitEpsilon, 1.0 - kLogitEpsilon);
                return (c.k + std::log(t / (1.0 - t))) / (2.0 * c.k);
            },
            [&](const ExponentialCurve& c) {
                if (c.base <= 0.0 || c.base == 1.0) throw ConfigError("exponential curve: base must be > 0 and != 1");
                return (std::pow(c.base, theta) - 1.0) / (c.base - 1.0);
            },
            [&](const PowerCurve& c) { return std::pow(theta, c.exponent); },
            [&](const LogarithmicCurve& c) {
                if (!(c.log_base > 1.0)) throw ConfigError("logarithmic curve: log_base must be > 1");
                return std::log1p(theta * (c.log_base - 1.0)) / std::log(c.log_base);
            },
        },
        curve);
    return std::clamp(y, 0.0, 1.0);
}

/// Margin multiplier at epoch e: 1 at e = 0, 1 + delta_c at e = E-1.
constexpr double margin_factor(double delta_c, long e, long n_epochs) {
    return interpolate(1.0, 1.0 + delta_c, e, n_epochs);
}

inline double value(double y, double mc, double delta_ce) { return std::max(0.0, std::min(1.0, y * mc * delta_ce)); }

/// Penalty (1 - theta) * c_err once the shortfall reaches t_err (closed comparison).
constexpr double error_cost(double theta, double t_err, double c_err) {
    const double shortfall = 1.0 - theta;
    return shortfall >= t_err ? shortfall * c_err : 0.0;
}

constexpr double utility(double v, double err) { return v - err; }

inline double normalize_loss(double loss, double lo, double hi) {
    if (!(lo < hi)) throw ConfigError("normalize_loss: requires lo < hi");
    return (loss - lo) / (hi - lo);
}

constexpr double theta_from_loss(double normalized_loss) { return 1.0 - normalized_loss; }

} // namespace skillsim

#endif // SKILLSIM_MODEL_HPP
