#ifndef SKILLSIM_RANDOM_HPP
#define SKILLSIM_RANDOM_HPP

#include "skillsim/types.hpp"

#include <boost/random/beta_distribution.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <span>

namespace skillsim {

/// SplitMix64 finalizer. Used to derive independent sub-seeds.
constexpr std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Deterministic sub-seed for stream `index` under `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return mix64(mix64(seed) ^ mix64(index ^ 0xD1B54A32D192ED03ULL));
}

/// A seeded 64-bit random stream. Satisfies UniformRandomBitGenerator.
///
/// Wraps std::mt19937_64, whose output sequence is fixed by the standard, so a
/// given seed yields the same draws on every conforming toolchain.
class RandomStream {
public:
    using result_type = std::uint64_t;

    explicit RandomStream(std::uint64_t seed) : engine_(seed) {}

    /// The stream owned by Monte Carlo run `run` of a simulation seeded with `seed`.
    static RandomStream for_run(std::uint64_t seed, std::uint64_t run) { return RandomStream(derive_seed(seed, run)); }

    static constexpr result_type min() { return std::mt19937_64::min(); }
    static constexpr result_type max() { return std::mt19937_64::max(); }
    result_type operator()() { return engine_(); }

    /// Uniform double in [0, 1) from the top 53 bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

private:
    std::mt19937_64 engine_;
};

/// Pick one of `items` with probability `probs[j]` (one uniform draw).
template <typename T>
const T& random_choice(std::span<const T> items, std::span<const double> probs, RandomStream& rng) {
    if (items.empty() || items.size() != probs.size())
        throw ConfigError("random_choice: items and probabilities must be non-empty and of equal length");
    validate_probabilities(probs, "random_choice");
    const double u = rng.uniform();
    double cumulative = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t j = 0; j < probs.size(); ++j) {
        if (probs[j] <= 0.0) continue;
        cumulative += probs[j];
        last_positive = j;
        if (u < cumulative) return items[j];
    }
    // u landed in the rounding gap above the cumulative sum.
    return items[last_positive];
}

/// One draw from Beta(alpha, beta) via two gamma variates.
inline double sample_beta(const BetaParams& p, RandomStream& rng) {
    if (!p.valid()) throw ConfigError("sample_beta: shape parameters must be > 0");
    boost::random::beta_distribution<double> dist(p.alpha, p.beta);
    for (;;) {
        double x = dist(rng);
        // Both gamma draws can underflow to zero for tiny shapes, giving 0/0.
        if (std::isfinite(x)) return std::clamp(x, 0.0, 1.0);
    }
}

} // namespace skillsim

#endif // SKILLSIM_RANDOM_HPP
