#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "plc/models.hpp"
#include "plc/series.hpp"

namespace plc {

struct ProcessConfig {
    ParetoLevyModel model = ParetoLevyModel::reference();
    std::array<double, 2> brownian_variances{0.0, 0.0};  // diagonal Σ
    std::array<double, 2> drift{0.0, 0.0};
    double eps = 1e-4;  // jumps with both coordinates below eps are dropped
    double horizon = 1.0;
    std::uint64_t seed = 0;

    /// ParameterError on eps ≤ 0, horizon ≤ 0 or negative variances.
    void validate() const;
};

struct Jump {
    double time;
    double x1;
    double x2;
};

/// Jumps on (0, horizon] of the truncated process, sorted by time.
///
/// Construction in Pareto coordinates w_i = 1/U_i(x_i), where the Lévy
/// measure has margins 1/w and joint tail Γ:
///  1. every jump with x₁ ≥ eps: Poisson(horizon·U₁(eps)) many, x₁ drawn from
///     the normalized tail U₁(x)/U₁(eps), its companion w₂ drawn from
///     P(W₂ ≥ w | W₁ = w₁) = -w₁² ∂₁Γ(w₁, w);
///  2. every jump with x₂ ≥ eps and x₁ < eps: drawn symmetrically from the
///     component-2 side and kept only when its companion has x₁ < eps.
/// The union is exact on {x₁ ≥ eps} ∪ {x₂ ≥ eps}; both margins and the joint
/// tail are exact above eps.
std::vector<Jump> simulate_jumps(const ProcessConfig& config, std::uint64_t replication = 0);

/// Increment of component i over (s, t]: a_i(t-s) + N(0, σ_i²(t-s)) + the
/// jumps in (s, t]. ParameterError when the scheme runs past the horizon.
IncrementSeries sample_path_increments(const ProcessConfig& config, const SamplingScheme& scheme,
                                       std::uint64_t replication = 0);

/// Same, reusing an already simulated jump set.
IncrementSeries aggregate_increments(std::span<const Jump> jumps, const ProcessConfig& config,
                                     const SamplingScheme& scheme, std::uint64_t replication = 0);

struct TruncationEntry {
    Point x;
    ExtReal difference;  // U_eps(x) - U(x)
    bool flagged;        // some finite coordinate lies below eps
};

/// Exact distortion of the tail integral caused by dropping jumps with both
/// coordinates below eps.
std::vector<TruncationEntry> truncation_bias_probe(const ProcessConfig& config, std::span<const Point> grid);

}  // namespace plc
