#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <string_view>
#include <vector>

#include "plc/dominance.hpp"
#include "plc/models.hpp"
#include "plc/series.hpp"

namespace plc {

/// Empirical bivariate tail integral
///
///   U_n(x) = (1/k_n) · #{ joint observations with Δ⁽¹⁾ ≥ x₁ and Δ⁽²⁾ ≥ x₂ }
///
/// together with its marginal step tails. For synchronous data the joint
/// observations are the increment pairs (this is U_n, and V_n for irregular
/// grids); for asynchronous data they are the pairs of increments over
/// overlapping intervals (W_n). Marginals always count each component's own
/// increments once. Immutable after construction.
class EmpiricalTail {
public:
    EmpiricalTail(std::span<const double> joint1, std::span<const double> joint2, std::vector<double> marginal1,
                  std::vector<double> marginal2, double k_n);

    /// Evaluation on ℍ. -∞ coordinates impose no constraint, +∞ yields 0,
    /// and U_n(-∞,-∞) = (number of joint observations)/k_n.
    double operator()(ExtReal x1, ExtReal x2) const;
    double operator()(const Point& x) const { return (*this)(x.x1, x.x2); }

    /// U_{n,i}(x) = (1/k_n) #{j : Δ_j X⁽ⁱ⁾ ≥ x}.
    double marginal(Axis c, ExtReal x) const;

    /// Generalized inverse of U_{n,i} computed from the order statistics:
    /// with m the largest count satisfying m/k_n ≤ z, the result is the
    /// (m+1)-th largest increment, or 0 when at most m increments are
    /// positive. U_{n,i}⁻(0) = ∞.
    ExtReal marginal_inverse(Axis c, ExtReal z) const;

    /// U_{n,i} in plateau form.
    StepFunction marginal_step(Axis c) const;

    std::size_t joint_count(double x1, double x2) const { return joint_.count(x1, x2); }
    std::size_t n_obs() const noexcept { return joint_.size(); }
    std::size_t marginal_size(Axis c) const noexcept { return sorted(c).size(); }
    double k_n() const noexcept { return k_n_; }

private:
    const std::vector<double>& sorted(Axis c) const noexcept { return marginals_[c == Axis::first ? 0 : 1]; }

    DominanceCounter joint_;
    std::array<std::vector<double>, 2> marginals_;  // ascending
    double k_n_;
};

/// U_n (equidistant) or V_n (irregular) from a synchronous series, with
/// k_n taken from the scheme. ContractError for asynchronous schemes.
EmpiricalTail empirical_tail(const IncrementSeries& series);

/// W_n from an asynchronous series, pairing increments over overlapping
/// intervals. A synchronous series is accepted as the degenerate case.
EmpiricalTail empirical_tail_async(const IncrementSeries& series);

/// ā = a for a > 0 and -∞ for a = 0.
ExtReal bar(ExtReal a);

/// Γ̂_n(u) = U_n( bar(U_{n,1}⁻(1/u₁)), bar(U_{n,2}⁻(1/u₂)) ).
double empirical_plc(const EmpiricalTail& tail, ExtReal u1, ExtReal u2);
inline double empirical_plc(const EmpiricalTail& tail, const Point& u) { return empirical_plc(tail, u.x1, u.x2); }

/// Γ̃_n(u) = U_n( U₁⁻(1/u₁), U₂⁻(1/u₂) ) with the true marginal tails.
double oracle_plc(const EmpiricalTail& tail, const std::array<StableTail, 2>& margins, ExtReal u1, ExtReal u2);
inline double oracle_plc(const EmpiricalTail& tail, const std::array<StableTail, 2>& margins, const Point& u) {
    return oracle_plc(tail, margins, u.x1, u.x2);
}

enum class Quadrant { pp, pm, mp, mm };

/// "++", "+-", "-+", "--". ParameterError on anything else.
Quadrant parse_quadrant(std::string_view s);
std::string_view to_string(Quadrant q);

/// Negates the components flagged by the quadrant, so that the estimators
/// measure dependence between jumps of the chosen signs.
IncrementSeries quadrant_transform(IncrementSeries series, Quadrant q);

using Field = std::function<double(const Point&)>;

inline double standardize(double estimate, double target, double k_n) {
    return std::sqrt(k_n) * (estimate - target);
}

/// x ↦ √k_n (estimate(x) - target(x)).
Field standardized_process(Field estimate, Field target, double k_n);

}  // namespace plc
