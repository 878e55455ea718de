#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "plc/models.hpp"

namespace plc {

struct Equidistant {
    std::size_t n = 0;
    double delta = 0.0;
};

struct Irregular {
    std::vector<double> times;  // t_1 < ... < t_m, t_0 = 0 implicit
};

struct Asynchronous {
    std::vector<double> r;  // observation times of component 1
    std::vector<double> s;  // observation times of component 2
};

/// Observation times of a bivariate path. All increments are taken over
/// half-open intervals (t_{j-1}, t_j] with t_0 = 0.
class SamplingScheme {
public:
    using Variant = std::variant<Equidistant, Irregular, Asynchronous>;

    /// Validates: times strictly increasing and > 0, at least one
    /// observation, and coinciding endpoints for asynchronous schemes.
    /// ContractError otherwise.
    explicit SamplingScheme(Variant v);

    static SamplingScheme equidistant(std::size_t n, double delta) {
        return SamplingScheme(Equidistant{n, delta});
    }
    static SamplingScheme irregular(std::vector<double> times) {
        return SamplingScheme(Irregular{std::move(times)});
    }
    static SamplingScheme asynchronous(std::vector<double> r, std::vector<double> s) {
        return SamplingScheme(Asynchronous{std::move(r), std::move(s)});
    }

    const Variant& variant() const noexcept { return v_; }
    bool is_synchronous() const noexcept { return !std::holds_alternative<Asynchronous>(v_); }

    /// k_n: nΔ_n for equidistant schemes, the final observation time otherwise.
    double horizon() const;

    /// Observation times t_1 < ... < t_m of one component (t_0 = 0 omitted).
    std::vector<double> times(Axis component) const;

    std::size_t size(Axis component) const;

private:
    Variant v_;
};

struct SchemeDiagnostics {
    double k_n = 0.0;
    double mesh = 0.0;                          // π_n, max over components
    std::size_t m1 = 0;                         // observation counts
    std::size_t m2 = 0;
    std::optional<double> sqrt_k_delta;         // √k_n Δ_n (equidistant)
    double irregular_stat = 0.0;                // Σ (Δt)² / √k_n, max over components
    std::optional<double> async_stat;           // Σ (Δt)^p / √k_n with p = (β+2)/(β+1) or 3/2 − δ
    std::optional<double> semimartingale_stat;  // √k_n Δ_n^(1/2−δ) or Σ (Δt)^(3/2−δ) / √k_n
};

/// The finite-n statistics whose convergence to zero the limit theorems
/// require. beta selects the asynchronous branch (β > 1 uses exponent
/// (β+2)/(β+1), β ≤ 1 uses 3/2 − δ and then needs delta_exp). delta_exp also
/// enables the semimartingale statistic. The asynchronous statistic is only
/// reported when beta is supplied.
SchemeDiagnostics diagnostics(const SamplingScheme& scheme, std::optional<double> beta = {},
                              std::optional<double> delta_exp = {});

/// Index pairs (j, ℓ), 0-based, whose half-open intervals (r_{j-1}, r_j] and
/// (s_{ℓ-1}, s_ℓ] intersect, via a linear two-pointer sweep. Sorted
/// lexicographically.
std::vector<std::pair<std::size_t, std::size_t>> overlap_pairs(const Asynchronous& scheme);

}  // namespace plc
