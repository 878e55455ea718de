#pragma once

#include <cstddef>
#include <span>

namespace plc {

/// Standard normal CDF.
double normal_cdf(double x);

/// Standard normal quantile Φ⁻¹(p) for p ∈ (0,1): Acklam's rational
/// approximation followed by one Halley step against erfc, which brings the
/// error down to the level of double rounding.
double normal_quantile(double p);

/// sup_x |F_n(x) - Φ(x)| for the empirical CDF of `sorted` (ascending).
double ks_distance_normal(std::span<const double> sorted);

/// Asymptotic two-sided Kolmogorov–Smirnov critical value c(α)/√n, with
/// c(0.05) = 1.3581.
double ks_critical_value(std::size_t n, double alpha = 0.05);

}  // namespace plc
