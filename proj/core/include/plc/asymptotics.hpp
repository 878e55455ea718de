#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "plc/models.hpp"

namespace plc {

// Covariance kernels of the Gaussian limits of
//   √k_n (U_n - U)      → B,   E[B(x)B(y)]   = U(x ∨ y)
//   √k_n (Γ̃_n - Γ)      → G̃,   E[G̃(u)G̃(v)]  = Γ(u ∨ v),  Γ(u,-∞) = 1/u
//   √k_n (Γ̂_n - Γ)      → G = G̃(u) + u₁²∂₁Γ(u) G̃(u₁,-∞) + u₂²∂₂Γ(u) G̃(-∞,u₂)
// Coordinatewise maxima treat -∞ as neutral.

double cov_B(const ParetoLevyModel& model, const Point& x, const Point& y);

double cov_Gtilde(const ParetoLevyModel& model, const Point& u, const Point& v);

/// Expands the definition of G into nine G̃ covariances. Points must lie in
/// (0, ∞]²; a point with an infinite coordinate has G = 0 almost surely.
/// UnsupportedModelError when the copula has no derivative at u or v.
double cov_G(const ParetoLevyModel& model, const Point& u, const Point& v);

/// Var G(u) / Var G̃(u): efficiency of Γ̂_n relative to the oracle Γ̃_n.
double relative_efficiency(const ParetoLevyModel& model, const Point& u);

struct EfficiencyCheck {
    Point u;
    double first = 0.0;   // u₁ ∂₁Γ(u) + Γ(u)
    double second = 0.0;  // u₂ ∂₂Γ(u) + Γ(u)
    bool ok() const { return first >= 0.0 && second >= 0.0; }
};

/// Evaluates the derivative form of the monotonicity condition under which
/// Var G ≤ Var G̃ holds.
std::vector<EfficiencyCheck> check_efficiency_condition(const ParetoLevyModel& model, std::span<const Point> grid);

enum class LimitProcess { B, Gtilde, G };

class LimitCovariance {
public:
    LimitCovariance(ParetoLevyModel model, LimitProcess kind) : model_(std::move(model)), kind_(kind) {}

    double operator()(const Point& a, const Point& b) const;

    /// Row-major covariance matrix over the points.
    std::vector<double> matrix(std::span<const Point> points) const;

    LimitProcess kind() const noexcept { return kind_; }
    const ParetoLevyModel& model() const noexcept { return model_; }

private:
    ParetoLevyModel model_;
    LimitProcess kind_;
};

/// Smallest eigenvalue of a symmetric row-major n×n matrix.
double min_eigenvalue(std::span<const double> matrix, std::size_t n);

}  // namespace plc
