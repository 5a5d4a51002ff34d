#ifndef SKILLSIM_ANALYTICS_HPP
#define SKILLSIM_ANALYTICS_HPP

#include "skillsim/engine.hpp"
#include "skillsim/types.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <compare>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace skillsim {

enum class Metric : std::uint8_t { Theta, Y, V, Err, U };
enum class Omega : std::uint8_t { Mu, Sigma, Rho, Iqr, Sk };

inline constexpr std::array<Metric, 5> kMetrics{Metric::Theta, Metric::Y, Metric::V, Metric::Err, Metric::U};
inline constexpr std::array<Omega, 5> kOmegas{Omega::Mu, Omega::Sigma, Omega::Rho, Omega::Iqr, Omega::Sk};

constexpr std::string_view to_string(Metric m) {
    switch (m) {
    case Metric::Theta: return "theta";
    case Metric::Y: return "y";
    case Metric::V: return "v";
    case Metric::Err: return "err";
    case Metric::U: return "u";
    }
    return "?";
}

constexpr std::string_view to_string(Omega w) {
    switch (w) {
    case Omega::Mu: return "mu";
    case Omega::Sigma: return "sigma";
    case Omega::Rho: return "rho";
    case Omega::Iqr: return "iqr";
    case Omega::Sk: return "sk";
    }
    return "?";
}

inline std::optional<Metric> parse_metric(std::string_view s) { return detail::parse_enum(s, kMetrics); }
inline std::optional<Omega> parse_omega(std::string_view s) { return detail::parse_enum(s, kOmegas); }

constexpr double metric_value(const MetricRecord& r, Metric m) {
    switch (m) {
    case Metric::Theta: return r.theta;
    case Metric::Y: return r.y;
    case Metric::V: return r.v;
    case Metric::Err: return r.err;
    case Metric::U: return r.u;
    }
    return 0.0;
}

namespace detail {

/// Neumaier-compensated sum.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) comp_ += (sum_ - t) + x;
        else comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace detail

/// Linear-interpolation ("type 7") quantile of an ascending range.
inline double sorted_quantile(std::span<const double> sorted, double p) {
    const double h = static_cast<double>(sorted.size() - 1) * p;
    const auto lo = static_cast<std::size_t>(std::floor(h));
    if (lo + 1 >= sorted.size()) return sorted.back();
    return sorted[lo] + (h - static_cast<double>(lo)) * (sorted[lo + 1] - sorted[lo]);
}

/// The five descriptors of a value set.
struct SummaryStats {
    double mu = 0.0;
    double sigma = 0.0;  ///< population (divisor n)
    double rho = 0.0;    ///< max - min
    double iqr = 0.0;
    std::optional<double> sk;  ///< adjusted Fisher-Pearson; absent when n < 3 or the set is constant

    std::optional<double> get(Omega w) const {
        switch (w) {
        case Omega::Mu: return mu;
        case Omega::Sigma: return sigma;
        case Omega::Rho: return rho;
        case Omega::Iqr: return iqr;
        case Omega::Sk: return sk;
        }
        return std::nullopt;
    }
};

inline SummaryStats summarize(std::span<const double> values) {
    if (values.empty()) throw UsageError("summarize: empty value set");
    const auto n = static_cast<double>(values.size());
    std::vector<double> sorted(values.begin(), values.end());
    std::sort(sorted.begin(), sorted.end());

    SummaryStats s;
    s.rho = sorted.back() - sorted.front();
    detail::CompensatedSum total;
    for (double x : values) total.add(x);
    s.mu = std::clamp(total.value() / n, sorted.front(), sorted.back());
    if (s.rho == 0.0) return s;  // constant: sigma = iqr = 0, sk undefined

    detail::CompensatedSum sq, cube;
    for (double x : values) {
        const double dev = x - s.mu;
        sq.add(dev * dev);
        cube.add(dev * dev * dev);
    }
    const double m2 = sq.value() / n;
    const double m3 = cube.value() / n;
    s.sigma = std::sqrt(m2);
    s.iqr = sorted_quantile(sorted, 0.75) - sorted_quantile(sorted, 0.25);
    if (values.size() >= 3 && m2 > 0.0) s.sk = std::sqrt(n * (n - 1.0)) / (n - 2.0) * m3 / std::pow(m2, 1.5);
    return s;
}

/// Selects a metric over the records matching every present filter.
/// Nesting mirrors the sets: a difficulty filter needs a policy filter.
struct SubsetKey {
    Metric metric = Metric::U;
    std::optional<PolicyKind> policy;
    std::optional<Difficulty> difficulty;
    std::optional<InteractionKind> interaction;

    void validate() const {
        if (difficulty && !policy) throw UsageError("subset key: a difficulty filter requires a policy filter");
    }

    bool matches(const MetricRecord& r) const {
        return (!policy || r.policy == *policy) && (!difficulty || r.difficulty == *difficulty) &&
               (!interaction || r.interaction == *interaction);
    }

    auto operator<=>(const SubsetKey&) const = default;
};

inline std::vector<double> subset(std::span<const MetricFrame> frames, const SubsetKey& key) {
    key.validate();
    std::vector<double> out;
    for (const MetricFrame& f : frames)
        for (const MetricRecord& r : f.records)
            if (key.matches(r)) out.push_back(metric_value(r, key.metric));
    return out;
}

inline std::vector<double> subset(const MetricFrame& frame, const SubsetKey& key) {
    return subset(std::span<const MetricFrame>(&frame, 1), key);
}

struct SimulationStats {
    std::string config_id;
    SummaryStats stats;
};

struct PerSimulationStats {
    std::vector<SimulationStats> entries;
    std::size_t skipped = 0;  ///< frames whose subset was empty
};

inline PerSimulationStats per_simulation_stats(std::span<const MetricFrame> frames, const SubsetKey& key) {
    PerSimulationStats out;
    for (const MetricFrame& f : frames) {
        const std::vector<double> values = subset(f, key);
        if (values.empty()) {
            ++out.skipped;
            continue;
        }
        out.entries.push_back({f.config_id, summarize(values)});
    }
    return out;
}

/// Mean of one descriptor across simulations, each simulation weighted equally.
struct CentralTendency {
    std::optional<double> value;  ///< absent when no simulation carries the descriptor
    std::size_t used = 0;
    std::size_t missing = 0;
};

inline CentralTendency central_tendency(std::span<const std::optional<double>> values) {
    CentralTendency ct;
    detail::CompensatedSum sum;
    for (const auto& v : values) {
        if (v) {
            sum.add(*v);
            ++ct.used;
        } else {
            ++ct.missing;
        }
    }
    if (ct.used > 0) ct.value = sum.value() / static_cast<double>(ct.used);
    return ct;
}

inline CentralTendency central_tendency(std::span<const SummaryStats> entries, Omega omega) {
    std::vector<std::optional<double>> values;
    values.reserve(entries.size());
    for (const auto& e : entries) values.push_back(e.get(omega));
    return central_tendency(values);
}

/// Relative gain (%) of the HM central value over a baseline; sign-adjusted
/// so an improvement reads positive for negative baselines, absent at 0.
inline std::optional<double> hmg(double hm_bar, double baseline_bar) {
    if (baseline_bar > 0.0) return (hm_bar - baseline_bar) / baseline_bar * 100.0;
    if (baseline_bar < 0.0) return -(hm_bar - baseline_bar) / baseline_bar * 100.0;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Per-simulation cell tables

/// Config inputs carried alongside per-simulation statistics.
struct DesignFeatures {
    double gamma_hm = 1.0;
    std::string curve_kind;
    PerPolicy<double> mc{};
    PerPolicy<double> delta{};
    double t_err = 0.0;
    double c_err = 0.0;

    static DesignFeatures from(const SimulationConfig& cfg) {
        return {cfg.gamma_hm, std::string(curve_name(cfg.curve)), cfg.econ.mc, cfg.econ.delta, cfg.econ.t_err,
                cfg.econ.c_err};
    }
    bool operator==(const DesignFeatures&) const = default;
};

/// Which subsets of each frame get their own cell. The unfiltered set and
/// the per-policy sets are always produced.
struct Grouping {
    bool difficulty = false;
    bool interaction = false;
};

/// Descriptors of one subset of one simulation.
struct SimulationCell {
    std::string config_id;
    SubsetKey key;
    std::size_t n = 0;
    std::array<std::optional<double>, 5> omega{};
    std::optional<DesignFeatures> features;

    std::optional<double> get(Omega w) const { return omega[static_cast<std::size_t>(w)]; }
};

inline std::array<std::optional<double>, 5> omega_values(const SummaryStats& s) {
    std::array<std::optional<double>, 5> out{};
    for (Omega w : kOmegas) out[static_cast<std::size_t>(w)] = s.get(w);
    return out;
}

/// Cells for every frame: the unfiltered set, one per policy (split by
/// interaction if requested), and one per (policy, difficulty) if requested.
/// The "all difficulties" cells pool raw values.
inline std::vector<SimulationCell> summarize_frames(std::span<const MetricFrame> frames, Grouping grouping,
                                                    std::span<const Metric> metrics) {
    constexpr std::size_t kA = 7;  // six interactions + "unsplit"
    constexpr std::size_t kD = 4;  // three difficulties + "pooled"
    auto bucket = [&](std::size_t c, std::size_t a, std::size_t d) { return (c * kA + a) * kD + d; };

    std::vector<SimulationCell> cells;
    for (const MetricFrame& f : frames) {
        std::optional<DesignFeatures> features;
        if (f.config) features = DesignFeatures::from(*f.config);

        for (Metric m : metrics) {
            std::vector<double> all;
            std::array<std::vector<double>, 3 * kA * kD> buckets;
            all.reserve(f.records.size());
            for (const MetricRecord& r : f.records) {
                const double x = metric_value(r, m);
                all.push_back(x);
                const std::size_t c = index(r.policy);
                const std::size_t a = grouping.interaction ? index(r.interaction) : kA - 1;
                buckets[bucket(c, a, kD - 1)].push_back(x);
                if (grouping.difficulty) buckets[bucket(c, a, index(r.difficulty))].push_back(x);
            }
            if (all.empty()) continue;

            std::vector<std::pair<SubsetKey, const std::vector<double>*>> found;
            found.push_back({SubsetKey{m, std::nullopt, std::nullopt, std::nullopt}, &all});
            for (std::size_t c = 0; c < 3; ++c) {
                for (std::size_t a = 0; a < kA; ++a) {
                    for (std::size_t d = 0; d < kD; ++d) {
                        const auto& vals = buckets[bucket(c, a, d)];
                        if (vals.empty()) continue;
                        SubsetKey key{m, kPolicies[c], std::nullopt, std::nullopt};
                        if (d + 1 < kD) key.difficulty = kDifficulties[d];
                        if (a + 1 < kA) key.interaction = kInteractions[a];
                        found.push_back({key, &vals});
                    }
                }
            }
            std::sort(found.begin(), found.end(),
                      [](const auto& lhs, const auto& rhs) { return lhs.first < rhs.first; });
            for (const auto& [key, vals] : found)
                cells.push_back({f.config_id, key, vals->size(), omega_values(summarize(*vals)), features});
        }
    }
    return cells;
}

/// Central tendency of one descriptor over the simulations sharing a subset key.
struct AggregateCell {
    SubsetKey key;
    Omega omega = Omega::Mu;
    CentralTendency central;
};

inline std::vector<AggregateCell> aggregate(std::span<const SimulationCell> cells, std::span<const Omega> omegas) {
    std::map<SubsetKey, std::vector<const SimulationCell*>> groups;
    for (const auto& c : cells) groups[c.key].push_back(&c);
    std::vector<AggregateCell> out;
    for (const auto& [key, members] : groups) {
        for (Omega w : omegas) {
            std::vector<std::optional<double>> vals;
            vals.reserve(members.size());
            for (const auto* c : members) vals.push_back(c->get(w));
            out.push_back({key, w, central_tendency(vals)});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// HM gain tables

struct HmgEntry {
    Omega omega = Omega::Mu;
    Metric metric = Metric::U;
    PolicyKind baseline = PolicyKind::H;
    std::optional<Difficulty> difficulty;  ///< absent: all difficulties pooled
    InteractionKind a0 = InteractionKind::Mean;
    double hm_bar = 0.0;
    double baseline_bar = 0.0;
    std::optional<double> gain_pct;  ///< absent: Not Defined
};

struct HmgTable {
    std::vector<HmgEntry> entries;
    std::vector<std::string> diagnostics;  ///< one line per omitted entry
};

inline constexpr std::array<InteractionKind, 3> kAugmentingRules{InteractionKind::Mean, InteractionKind::Collaborate,
                                                                 InteractionKind::Superpower};

/// HMG for every (c0, d, a0), from cells grouped by policy, difficulty and interaction.
inline HmgTable hmg_from_cells(std::span<const SimulationCell> cells, Omega omega, Metric metric) {
    std::map<SubsetKey, std::vector<std::optional<double>>> groups;
    for (const auto& c : cells)
        if (c.key.metric == metric) groups[c.key].push_back(c.get(omega));

    auto central = [&](const SubsetKey& key) -> std::optional<double> {
        auto it = groups.find(key);
        if (it == groups.end()) return std::nullopt;
        return central_tendency(it->second).value;
    };
    auto describe = [](PolicyKind c, std::optional<Difficulty> d, std::optional<InteractionKind> a) {
        std::string s(to_string(c));
        s += d ? "/" + std::string(to_string(*d)) : "/all";
        if (a) s += "/" + std::string(to_string(*a));
        return s;
    };

    const std::array<std::optional<Difficulty>, 4> columns{std::nullopt, Difficulty::Low, Difficulty::Med,
                                                           Difficulty::High};
    HmgTable table;
    for (PolicyKind c0 : {PolicyKind::H, PolicyKind::M}) {
        for (const auto& d : columns) {
            const auto base = central(SubsetKey{metric, c0, d, InteractionKind::Individual});
            for (InteractionKind a0 : kAugmentingRules) {
                const auto hm = central(SubsetKey{metric, PolicyKind::HM, d, a0});
                if (!hm || !base) {
                    table.diagnostics.push_back("omitted " + describe(c0, d, std::nullopt) + " vs " +
                                                describe(PolicyKind::HM, d, a0) + ": missing " +
                                                (!base ? "baseline" : "HM") + " " + std::string(to_string(omega)) +
                                                "(" + std::string(to_string(metric)) + ")");
                    continue;
                }
                table.entries.push_back({omega, metric, c0, d, a0, *hm, *base, hmg(*hm, *base)});
            }
        }
    }
    return table;
}

inline HmgTable hmg_table(std::span<const MetricFrame> frames, Omega omega, Metric metric) {
    const std::array<Metric, 1> metrics{metric};
    return hmg_from_cells(summarize_frames(frames, {true, true}, metrics), omega, metric);
}

struct HmgBin {
    double lo = 0.0;
    double hi = 0.0;
    bool closed_right = false;  ///< only the last bin includes its upper edge
    std::size_t simulations = 0;
    HmgTable table;
};

/// HMG tables restricted to simulations whose delta_HM falls in each
/// left-closed bin [edges[j], edges[j+1]); the last bin is closed.
inline std::vector<HmgBin> hmg_by_delta(std::span<const SimulationCell> cells, Omega omega, Metric metric,
                                        std::span<const double> edges) {
    if (edges.size() < 2) throw UsageError("hmg_by_delta: need at least two bin edges");
    for (std::size_t j = 1; j < edges.size(); ++j)
        if (!(edges[j - 1] < edges[j])) throw UsageError("hmg_by_delta: bin edges must be strictly ascending");

    const std::size_t n_bins = edges.size() - 1;
    auto bin_of = [&](double x) -> std::optional<std::size_t> {
        for (std::size_t j = 0; j < n_bins; ++j) {
            const bool last = j + 1 == n_bins;
            if (x >= edges[j] && (x < edges[j + 1] || (last && x == edges[j + 1]))) return j;
        }
        return std::nullopt;
    };

    std::vector<std::vector<SimulationCell>> split(n_bins);
    std::vector<std::set<std::string>> sims(n_bins);
    for (const auto& c : cells) {
        if (!c.features)
            throw ConfigError("hmg_by_delta: delta_HM unknown for simulation '" + c.config_id + "'");
        if (auto j = bin_of(c.features->delta[PolicyKind::HM])) {
            split[*j].push_back(c);
            sims[*j].insert(c.config_id);
        }
    }
    std::vector<HmgBin> out;
    for (std::size_t j = 0; j < n_bins; ++j)
        out.push_back({edges[j], edges[j + 1], j + 1 == n_bins, sims[j].size(), hmg_from_cells(split[j], omega, metric)});
    return out;
}

inline std::vector<HmgBin> hmg_by_delta(std::span<const MetricFrame> frames, Omega omega, Metric metric,
                                        std::span<const double> edges) {
    const std::array<Metric, 1> metrics{metric};
    return hmg_by_delta(summarize_frames(frames, {true, true}, metrics), omega, metric, edges);
}

// ---------------------------------------------------------------------------
// Cost-of-error arithmetic

/// Expected error cost per period: price x sales x cost fraction x MAPE.
constexpr double expected_error_cost(double avg_price, double n_sales, double cost_fraction, double mape) {
    return avg_price * n_sales * cost_fraction * mape;
}

/// Undiscounted total over `periods`: errors and operations per period, development once.
constexpr double skill_cost_total(double error_cost_per_period, double dev_cost, double ops_cost_per_period,
                                  double periods) {
    return error_cost_per_period * periods + dev_cost + ops_cost_per_period * periods;
}

} // namespace skillsim

#endif // SKILLSIM_ANALYTICS_HPP
