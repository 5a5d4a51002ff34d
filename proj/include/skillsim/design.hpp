#ifndef SKILLSIM_DESIGN_HPP
#define SKILLSIM_DESIGN_HPP

#include "skillsim/random.hpp"
#include "skillsim/types.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace skillsim {

struct NumericRange {
    std::string name;
    double lo = 0.0;
    double hi = 1.0;
    bool operator==(const NumericRange&) const = default;
};

/// Names a numeric design axis may carry; each maps onto a config field.
inline const std::vector<std::string>& design_axis_names() {
    static const std::vector<std::string> names{"gamma_hm", "mc_H", "mc_M", "delta_HM", "t_err", "c_err"};
    return names;
}

struct DesignSpace {
    std::vector<NumericRange> numeric;
    std::vector<InteractionKind> interactions;
    std::vector<OutputCurve> curves;

    /// The constrained search space: gamma in [1,2], mc_H in [0.4,0.6],
    /// mc_M in [0.7,0.9], delta_HM in [0.1,0.9], t_err and c_err in [0,1],
    /// three interaction rules and two output curves.
    static DesignSpace defaults() {
        DesignSpace s;
        s.numeric = {{"gamma_hm", 1.0, 2.0}, {"mc_H", 0.4, 0.6},  {"mc_M", 0.7, 0.9},
                     {"delta_HM", 0.1, 0.9}, {"t_err", 0.0, 1.0}, {"c_err", 0.0, 1.0}};
        s.interactions = {InteractionKind::Mean, InteractionKind::Collaborate, InteractionKind::Superpower};
        s.curves = {LogisticCurve{5.0}, InverseLogisticCurve{5.0}};
        return s;
    }

    std::size_t dims() const { return numeric.size(); }

    std::optional<std::size_t> find(std::string_view name) const {
        for (std::size_t j = 0; j < numeric.size(); ++j)
            if (numeric[j].name == name) return j;
        return std::nullopt;
    }

    void validate() const {
        std::set<std::string> seen;
        const auto& known = design_axis_names();
        for (const auto& r : numeric) {
            if (std::find(known.begin(), known.end(), r.name) == known.end())
                throw ConfigError("numeric." + r.name + ": unknown design axis");
            if (!seen.insert(r.name).second) throw ConfigError("numeric." + r.name + ": duplicate axis");
            if (!std::isfinite(r.lo) || !std::isfinite(r.hi) || !(r.lo < r.hi))
                throw ConfigError("numeric." + r.name + ": requires lo < hi");
        }
        for (InteractionKind a : interactions)
            if (a == InteractionKind::Individual) throw ConfigError("interactions: Individual is not a combination rule");
        for (const auto& c : curves) validate_curve(c);
    }
};

/// Numeric coordinates of one sampled configuration, aligned with DesignSpace::numeric.
struct DesignPoint {
    std::vector<double> numeric;
    bool operator==(const DesignPoint&) const = default;
};

/// Latin hypercube: per dimension, each of n equal-width strata holds exactly
/// one value, jittered uniformly inside it; strata are permuted independently.
inline std::vector<DesignPoint> lhs_sample(const DesignSpace& space, std::size_t n, RandomStream& rng) {
    if (n < 1) throw UsageError("lhs_sample: n must be >= 1");
    std::vector<DesignPoint> points(n, DesignPoint{std::vector<double>(space.dims())});
    std::vector<std::size_t> strata(n);
    for (std::size_t j = 0; j < space.dims(); ++j) {
        std::iota(strata.begin(), strata.end(), std::size_t{0});
        // Fisher-Yates with our own uniform so the permutation is toolchain independent.
        for (std::size_t i = n; i > 1; --i) {
            auto pick = static_cast<std::size_t>(rng.uniform() * static_cast<double>(i));
            std::swap(strata[i - 1], strata[std::min(pick, i - 1)]);
        }
        const NumericRange& r = space.numeric[j];
        const double width = (r.hi - r.lo) / static_cast<double>(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double x = r.lo + (static_cast<double>(strata[i]) + rng.uniform()) * width;
            points[i].numeric[j] = std::min(x, r.hi);
        }
    }
    return points;
}

/// Euclidean distance on range-normalized coordinates.
inline double normalized_distance(const DesignSpace& space, const DesignPoint& a, const DesignPoint& b) {
    double sum = 0.0;
    for (std::size_t j = 0; j < space.dims(); ++j) {
        const double span = space.numeric[j].hi - space.numeric[j].lo;
        const double diff = (a.numeric[j] - b.numeric[j]) / span;
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

/// Smallest pairwise normalized distance of a point set (infinity below two points).
inline double min_pairwise_distance(const DesignSpace& space, const std::vector<DesignPoint>& pts) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = a + 1; b < pts.size(); ++b) best = std::min(best, normalized_distance(space, pts[a], pts[b]));
    return best;
}

/// Greedy maximin subset: seed with the farthest pair, then repeatedly add
/// the candidate whose nearest selected point is farthest. Ties go to the
/// lowest candidate index. Output is in selection order. Approximate: no
/// exchange pass.
inline std::vector<DesignPoint> maximin_select(const DesignSpace& space, const std::vector<DesignPoint>& candidates,
                                               std::size_t n) {
    if (n > candidates.size())
        throw UsageError("maximin_select: requested " + std::to_string(n) + " points from " +
                         std::to_string(candidates.size()) + " candidates");
    if (n == 0) return {};
    if (n == 1) return {candidates.front()};

    const std::size_t m = candidates.size();
    std::size_t first = 0, second = 1;
    double widest = -1.0;
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            const double dist = normalized_distance(space, candidates[a], candidates[b]);
            if (dist > widest) {
                widest = dist;
                first = a;
                second = b;
            }
        }
    }

    std::vector<bool> taken(m, false);
    std::vector<double> nearest(m, std::numeric_limits<double>::infinity());
    std::vector<DesignPoint> selected;
    selected.reserve(n);
    auto take = [&](std::size_t idx) {
        taken[idx] = true;
        selected.push_back(candidates[idx]);
        for (std::size_t c = 0; c < m; ++c)
            if (!taken[c]) nearest[c] = std::min(nearest[c], normalized_distance(space, candidates[c], candidates[idx]));
    };
    take(first);
    take(second);
    while (selected.size() < n) {
        std::size_t best = m;
        for (std::size_t c = 0; c < m; ++c)
            if (!taken[c] && (best == m || nearest[c] > nearest[best])) best = c;
        take(best);
    }
    return selected;
}

enum class DesignMethod { Lhs, Maximin };

struct DesignOptions {
    DesignMethod method = DesignMethod::Lhs;
    std::size_t pool_size = 0;  ///< maximin candidate pool; 0 means 20 * n_numeric
};

inline constexpr std::size_t kDefaultNumericPoints = 250;
inline constexpr std::size_t kDefaultPoolFactor = 20;

/// Writes the numeric coordinates of `point` into `cfg` and re-derives
/// mc_HM = mc_H + mc_M - 1 with delta_H = delta_M = 0.
inline void apply_point(const DesignSpace& space, const DesignPoint& point, SimulationConfig& cfg) {
    for (std::size_t j = 0; j < space.dims(); ++j) {
        const std::string& name = space.numeric[j].name;
        const double x = point.numeric[j];
        if (name == "gamma_hm") cfg.gamma_hm = x;
        else if (name == "mc_H") cfg.econ.mc[PolicyKind::H] = x;
        else if (name == "mc_M") cfg.econ.mc[PolicyKind::M] = x;
        else if (name == "delta_HM") cfg.econ.delta[PolicyKind::HM] = x;
        else if (name == "t_err") cfg.econ.t_err = x;
        else if (name == "c_err") cfg.econ.c_err = x;
        else throw ConfigError("numeric." + name + ": unknown design axis");
    }
    cfg.econ.mc[PolicyKind::HM] = cfg.econ.mc[PolicyKind::H] + cfg.econ.mc[PolicyKind::M] - 1.0;
    cfg.econ.delta[PolicyKind::H] = 0.0;
    cfg.econ.delta[PolicyKind::M] = 0.0;
}

/// Crosses `n_numeric` sampled points with the interaction x curve grid.
/// Config j gets seed derive_seed(base.seed, j) and id "<prefix><j>".
inline std::vector<SimulationConfig> build_designs(const DesignSpace& space, std::size_t n_numeric,
                                                   const DesignOptions& opts, const SimulationConfig& base,
                                                   RandomStream& rng) {
    space.validate();
    if (space.interactions.empty() || space.curves.empty())
        throw ConfigError("design space needs at least one interaction and one curve");

    std::vector<DesignPoint> points;
    if (opts.method == DesignMethod::Lhs) {
        points = lhs_sample(space, n_numeric, rng);
    } else {
        const std::size_t pool = opts.pool_size == 0 ? kDefaultPoolFactor * n_numeric : opts.pool_size;
        if (pool < n_numeric)
            throw UsageError("maximin pool of " + std::to_string(pool) + " is smaller than n = " +
                             std::to_string(n_numeric));
        points = maximin_select(space, lhs_sample(space, pool, rng), n_numeric);
    }

    const std::string prefix = base.config_id.empty() ? std::string("s") : base.config_id + "_";
    std::vector<SimulationConfig> out;
    out.reserve(points.size() * space.interactions.size() * space.curves.size());
    for (const DesignPoint& p : points) {
        for (InteractionKind a : space.interactions) {
            for (const OutputCurve& curve : space.curves) {
                SimulationConfig cfg = base;
                apply_point(space, p, cfg);
                cfg.interaction = a;
                cfg.curve = curve;
                const std::size_t j = out.size();
                cfg.seed = derive_seed(base.seed, j);
                char id[32];
                std::snprintf(id, sizeof id, "%04zu", j);
                cfg.config_id = prefix + id;
                validate(cfg);
                out.push_back(std::move(cfg));
            }
        }
    }
    return out;
}

} // namespace skillsim

#endif // SKILLSIM_DESIGN_HPP
