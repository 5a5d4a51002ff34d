#ifndef SKILLSIM_TYPES_HPP
#define SKILLSIM_TYPES_HPP

#include <array>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace skillsim {

/// Invalid parameters or configuration content.
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A function was called outside its contract (e.g. HM skill schedule lookup).
class UsageError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

enum class PolicyKind : std::uint8_t { H = 0, HM = 1, M = 2 };
enum class Difficulty : std::uint8_t { Low = 0, Med = 1, High = 2 };
enum class InteractionKind : std::uint8_t { Min, Max, Mean, Collaborate, Superpower, Individual };

inline constexpr std::array<PolicyKind, 3> kPolicies{PolicyKind::H, PolicyKind::HM, PolicyKind::M};
inline constexpr std::array<Difficulty, 3> kDifficulties{Difficulty::Low, Difficulty::Med, Difficulty::High};
inline constexpr std::array<InteractionKind, 6> kInteractions{
    InteractionKind::Min,         InteractionKind::Max,        InteractionKind::Mean,
    InteractionKind::Collaborate, InteractionKind::Superpower, InteractionKind::Individual};

constexpr std::size_t index(PolicyKind c) { return static_cast<std::size_t>(c); }
constexpr std::size_t index(Difficulty d) { return static_cast<std::size_t>(d); }
constexpr std::size_t index(InteractionKind a) { return static_cast<std::size_t>(a); }

constexpr std::string_view to_string(PolicyKind c) {
    switch (c) {
    case PolicyKind::H: return "H";
    case PolicyKind::HM: return "HM";
    case PolicyKind::M: return "M";
    }
    return "?";
}

constexpr std::string_view to_string(Difficulty d) {
    switch (d) {
    case Difficulty::Low: return "Low";
    case Difficulty::Med: return "Med";
    case Difficulty::High: return "High";
    }
    return "?";
}

constexpr std::string_view to_string(InteractionKind a) {
    switch (a) {
    case InteractionKind::Min: return "Min";
    case InteractionKind::Max: return "Max";
    case InteractionKind::Mean: return "Mean";
    case InteractionKind::Collaborate: return "Collaborate";
    case InteractionKind::Superpower: return "Superpower";
    case InteractionKind::Individual: return "Individual";
    }
    return "?";
}

namespace detail {

inline bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (std::tolower(static_cast<unsigned char>(a[i])) != std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    }
    return true;
}

template <typename Enum, std::size_t N>
std::optional<Enum> parse_enum(std::string_view text, const std::array<Enum, N>& values) {
    for (Enum v : values) {
        if (iequals(text, to_string(v))) return v;
    }
    return std::nullopt;
}

} // namespace detail

inline std::optional<PolicyKind> parse_policy(std::string_view s) { return detail::parse_enum(s, kPolicies); }
inline std::optional<Difficulty> parse_difficulty(std::string_view s) { return detail::parse_enum(s, kDifficulties); }
inline std::optional<InteractionKind> parse_interaction(std::string_view s) {
    return detail::parse_enum(s, kInteractions);
}

/// Value indexed by skill policy, in (H, HM, M) order.
template <typename T>
struct PerPolicy {
    std::array<T, 3> values{};

    T& operator[](PolicyKind c) { return values[index(c)]; }
    const T& operator[](PolicyKind c) const { return values[index(c)]; }
    bool operator==(const PerPolicy&) const = default;
};

/// Value indexed by task difficulty, in (Low, Med, High) order.
template <typename T>
struct PerDifficulty {
    std::array<T, 3> values{};

    T& operator[](Difficulty d) { return values[index(d)]; }
    const T& operator[](Difficulty d) const { return values[index(d)]; }
    bool operator==(const PerDifficulty&) const = default;
};

struct BetaParams {
    double alpha = 1.0;
    double beta = 1.0;

    bool valid() const { return std::isfinite(alpha) && std::isfinite(beta) && alpha > 0.0 && beta > 0.0; }
    double mean() const { return alpha / (alpha + beta); }
    bool operator==(const BetaParams&) const = default;
};

/// Beta parameters at the first (e = 0) and last (e = E-1) epoch.
struct BetaRamp {
    BetaParams start;
    BetaParams end;
    bool operator==(const BetaRamp&) const = default;
};

/// Per-(policy, difficulty) performance distributions. HM has none: its
/// performance is derived from H and M draws.
class SkillSchedule {
public:
    SkillSchedule() = default;

    BetaRamp& at(PolicyKind c, Difficulty d) { return cells_[slot(c)][index(d)]; }
    const BetaRamp& at(PolicyKind c, Difficulty d) const { return cells_[slot(c)][index(d)]; }

    /// Same ramp for every cell; handy for tests.
    static SkillSchedule uniform(BetaRamp ramp) {
        SkillSchedule s;
        for (auto& row : s.cells_) row.fill(ramp);
        return s;
    }

    bool operator==(const SkillSchedule&) const = default;

private:
    static std::size_t slot(PolicyKind c) {
        switch (c) {
        case PolicyKind::H: return 0;
        case PolicyKind::M: return 1;
        case PolicyKind::HM: break;
        }
        throw UsageError("skill schedule has no HM cell; HM performance is derived from H and M");
    }

    std::array<std::array<BetaRamp, 3>, 2> cells_{};
};

// Output curves g': theta -> y. Every evaluation is clipped to [0, 1].

struct LinearCurve {
    double slope = 1.0;
    double intercept = 0.0;
    bool operator==(const LinearCurve&) const = default;
};
struct LogisticCurve {
    double k = 5.0;
    bool operator==(const LogisticCurve&) const = default;
};
struct InverseLogisticCurve {
    double k = 5.0;
    bool operator==(const InverseLogisticCurve&) const = default;
};
struct ExponentialCurve {
    double base = 10.0;
    bool operator==(const ExponentialCurve&) const = default;
};
struct PowerCurve {
    double exponent = 2.0;
    bool operator==(const PowerCurve&) const = default;
};
struct LogarithmicCurve {
    double log_base = 10.0;
    bool operator==(const LogarithmicCurve&) const = default;
};

using OutputCurve =
    std::variant<LinearCurve, LogisticCurve, InverseLogisticCurve, ExponentialCurve, PowerCurve, LogarithmicCurve>;

inline std::string_view curve_name(const OutputCurve& curve) {
    static constexpr std::array<std::string_view, 6> names{"linear",      "logistic", "inverse_logistic",
                                                           "exponential", "power",    "logarithmic"};
    return names[curve.index()];
}

struct EconParams {
    PerPolicy<double> mc{};     ///< unit margin of contribution, each in [0,1]
    PerPolicy<double> delta{};  ///< margin growth over the epoch range, each >= -1
    double t_err = 0.0;         ///< error trigger threshold on (1 - theta)
    double c_err = 0.0;         ///< unit error cost fraction
    bool operator==(const EconParams&) const = default;
};

struct SimulationConfig {
    std::string config_id;
    int n_firms = 1;
    int n_epochs = 1;
    int n_runs = 1;
    PerPolicy<double> p_policy{{1.0 / 3, 1.0 / 3, 1.0 / 3}};
    PerDifficulty<double> p_difficulty{{1.0 / 3, 1.0 / 3, 1.0 / 3}};
    SkillSchedule schedule;
    InteractionKind interaction = InteractionKind::Mean;
    double gamma_hm = 1.0;
    OutputCurve curve = LogisticCurve{};
    EconParams econ;
    std::uint64_t seed = 0;

    bool operator==(const SimulationConfig&) const = default;
};

inline constexpr double kProbabilityTolerance = 1e-9;

/// Throws ConfigError naming `what` unless `probs` is a nonnegative vector summing to 1.
template <typename Range>
void validate_probabilities(const Range& probs, std::string_view what) {
    double sum = 0.0;
    for (double p : probs) {
        if (!std::isfinite(p) || p < 0.0) throw ConfigError(std::string(what) + ": probabilities must be nonnegative");
        sum += p;
    }
    if (std::abs(sum - 1.0) > kProbabilityTolerance)
        throw ConfigError(std::string(what) + ": probabilities must sum to 1 (got " + std::to_string(sum) + ")");
}

inline void validate_curve(const OutputCurve& curve) {
    auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };
    switch (curve.index()) {
    case 0: {
        const auto& c = std::get<LinearCurve>(curve);
        if (!std::isfinite(c.slope) || !std::isfinite(c.intercept))
            throw ConfigError("curve.params: linear slope/intercept must be finite");
        break;
    }
    case 1:
        if (!positive(std::get<LogisticCurve>(curve).k)) throw ConfigError("curve.params.k: must be > 0");
        break;
    case 2:
        if (!positive(std::get<InverseLogisticCurve>(curve).k)) throw ConfigError("curve.params.k: must be > 0");
        break;
    case 3: {
        double b = std::get<ExponentialCurve>(curve).base;
        if (!positive(b) || b == 1.0) throw ConfigError("curve.params.base: must be > 0 and != 1");
        break;
    }
    case 4:
        if (!positive(std::get<PowerCurve>(curve).exponent)) throw ConfigError("curve.params.exponent: must be > 0");
        break;
    case 5: {
        double b = std::get<LogarithmicCurve>(curve).log_base;
        if (!std::isfinite(b) || b <= 1.0) throw ConfigError("curve.params.log_base: must be > 1");
        break;
    }
    default: break;
    }
}

/// Throws ConfigError with a field path on the first violated invariant.
inline void validate(const SimulationConfig& cfg) {
    auto unit = [](double x) { return std::isfinite(x) && x >= 0.0 && x <= 1.0; };
    if (cfg.n_firms < 1) throw ConfigError("n_firms: must be a positive integer");
    if (cfg.n_epochs < 1) throw ConfigError("n_epochs: must be a positive integer");
    if (cfg.n_runs < 1) throw ConfigError("n_runs: must be a positive integer");
    validate_probabilities(cfg.p_policy.values, "p_policy");
    validate_probabilities(cfg.p_difficulty.values, "p_difficulty");
    for (PolicyKind c : {PolicyKind::H, PolicyKind::M}) {
        for (Difficulty d : kDifficulties) {
            const BetaRamp& r = cfg.schedule.at(c, d);
            if (!r.start.valid() || !r.end.valid())
                throw ConfigError("schedule." + std::string(to_string(c)) + "." + std::string(to_string(d)) +
                                  ": beta shapes must be > 0");
        }
    }
    if (cfg.interaction == InteractionKind::Individual)
        throw ConfigError("interaction: Individual is a reporting label, not a combination rule");
    if (!std::isfinite(cfg.gamma_hm) || cfg.gamma_hm < 1.0) throw ConfigError("gamma_hm: must be >= 1");
    validate_curve(cfg.curve);
    for (PolicyKind c : kPolicies) {
        if (!unit(cfg.econ.mc[c])) throw ConfigError("econ.mc." + std::string(to_string(c)) + ": must be in [0,1]");
        double dl = cfg.econ.delta[c];
        if (!std::isfinite(dl) || dl < -1.0)
            throw ConfigError("econ.delta." + std::string(to_string(c)) + ": must be >= -1");
    }
    if (!unit(cfg.econ.t_err)) throw ConfigError("econ.t_err: must be in [0,1]");
    if (!unit(cfg.econ.c_err)) throw ConfigError("econ.c_err: must be in [0,1]");
}

} // namespace skillsim

#endif // SKILLSIM_TYPES_HPP
