#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "plc/ext_real.hpp"

namespace plc {

enum class Axis { first, second };

inline Axis other(Axis a) noexcept { return a == Axis::first ? Axis::second : Axis::first; }

// ---------------------------------------------------------------------------
// Marginal tails
// ---------------------------------------------------------------------------

/// Tail integral U(x) = scale · x^(-alpha) of an alpha-stable subordinator.
/// The ½-stable subordinator has alpha = ½ and scale = π^(-1/2).
struct StableTail {
    double alpha = 0.5;
    double scale = 0.0;

    StableTail(double alpha, double scale);

    static StableTail half_stable();

    /// U(x) on [0, ∞]; U(0) = ∞ and U(∞) = 0.
    ExtReal operator()(ExtReal x) const;

    /// Generalized inverse inf{x > 0 : U(x) ≤ z}, with U⁻(0) = ∞.
    ExtReal inverse(ExtReal z) const;
};

/// scale · x^(-alpha) for finite x > 0. DomainError otherwise.
double stable_tail(double x, double alpha, double scale);

// ---------------------------------------------------------------------------
// Pareto–Lévy copulas
// ---------------------------------------------------------------------------

struct Clayton {
    double theta;
};
struct Comonotone {};
struct Independence {};

enum class FrechetKind { independence, comonotone };

/// A parametric Pareto–Lévy copula Γ on [0,∞]² \ {(0,0)}.
///
/// Arguments may also be -∞, in which case the stripe convention
/// Γ(u, -∞) = Γ(-∞, u) = 1/u applies (it coincides with the Pareto margin).
class ParetoLevyCopula {
public:
    using Family = std::variant<Clayton, Comonotone, Independence>;

    explicit ParetoLevyCopula(Family family);

    static ParetoLevyCopula clayton(double theta) { return ParetoLevyCopula(Clayton{theta}); }
    static ParetoLevyCopula comonotone() { return ParetoLevyCopula(Comonotone{}); }
    static ParetoLevyCopula independence() { return ParetoLevyCopula(Independence{}); }

    const Family& family() const noexcept { return family_; }
    std::string name() const;

    double operator()(ExtReal u1, ExtReal u2) const;
    double operator()(const Point& u) const { return (*this)(u.x1, u.x2); }

    /// ∂Γ/∂u_axis at an interior point (both coordinates finite and > 0).
    /// Throws DomainError on the boundary (see boundary_partial) and
    /// UnsupportedModelError where the family has no derivative (the
    /// comonotone copula on its diagonal).
    double partial(Axis axis, ExtReal u1, ExtReal u2) const;

    /// P(W_other ≥ w_other | W_given = w_given) for the Lévy measure written
    /// in Pareto coordinates w_i = 1/U_i(x_i); equals -w_given² ∂_given Γ.
    double conditional_survival(Axis given, double w_given, ExtReal w_other) const;

    /// Draws the companion coordinate of a jump whose `given` Pareto
    /// coordinate is w_given, by inverting conditional_survival at the
    /// uniform variate v ∈ (0,1). 0 means "no jump in the other component".
    ExtReal companion(Axis given, double w_given, double v) const;

private:
    Family family_;
};

double clayton_gamma(ExtReal u1, ExtReal u2, double theta);
double frechet_gamma(ExtReal u1, ExtReal u2, FrechetKind kind);

/// Interior Clayton partial derivative
/// ∂_i Γ = -(u₁^θ + u₂^θ)^(-1/θ-1) · u_i^(θ-1).
double clayton_partial(ExtReal u1, ExtReal u2, double theta, Axis axis);

/// Which boundary the *other* coordinate sits on.
enum class PartialBoundary { other_zero, other_infinite };

/// Boundary values of ∂_i Γ valid for every Pareto–Lévy copula:
/// ∂₁Γ(u₁, 0) = -u₁⁻² and ∂₁Γ(u₁, ∞) = 0 (and symmetrically).
double boundary_partial(ExtReal u_axis, PartialBoundary where);

// ---------------------------------------------------------------------------
// Models and tail integrals
// ---------------------------------------------------------------------------

/// Copula plus marginal tail integrals: a full description of the Lévy
/// measure of a spectrally positive bivariate Lévy process.
struct ParetoLevyModel {
    ParetoLevyCopula copula;
    std::array<StableTail, 2> margins;

    const StableTail& margin(Axis a) const { return margins[a == Axis::first ? 0 : 1]; }

    /// Clayton θ = ½ with two ½-stable margins.
    static ParetoLevyModel reference();
};

/// U(x) = Γ(1/U₁(x₁), 1/U₂(x₂)) on ℍ; on a stripe through -∞ the marginal
/// tail of the other coordinate.
double tail_from_copula(const ParetoLevyModel& model, const Point& x);

/// Γ(u) = U(U₁⁻(1/u₁), U₂⁻(1/u₂)) recomputed from the tail integral.
double copula_from_tail(const ParetoLevyModel& model, const Point& u);

// ---------------------------------------------------------------------------
// Generalized inverses
// ---------------------------------------------------------------------------

/// A nonincreasing, left-continuous step function on (0, ∞] in plateau form:
/// value v₀ on (0, b₁], v_i on (b_i, b_{i+1}], and v_m on (b_m, ∞).
class StepFunction {
public:
    /// Requires strictly increasing positive breakpoints, values.size() ==
    /// breakpoints.size() + 1, nonincreasing values ending in 0. ContractError
    /// otherwise.
    StepFunction(std::vector<double> breakpoints, std::vector<double> values);

    double operator()(ExtReal x) const;
    ExtReal inverse(ExtReal z) const;

    std::span<const double> breakpoints() const noexcept { return breaks_; }
    std::span<const double> values() const noexcept { return values_; }

private:
    std::vector<double> breaks_;
    std::vector<double> values_;
};

/// f⁻(z) = inf{x > 0 : f(x) ≤ z} with f⁻(0) = ∞, for a nonincreasing
/// function f on (0, ∞). Solved by bracketing and bisection to relative
/// precision ~1e-15.
ExtReal generalized_inverse(const std::function<double(double)>& f, double z);

inline ExtReal generalized_inverse(const StepFunction& f, ExtReal z) { return f.inverse(z); }

// ---------------------------------------------------------------------------
// Structural checks
// ---------------------------------------------------------------------------

using CopulaFunction = std::function<double(ExtReal, ExtReal)>;

struct TwoIncreasingReport {
    bool ok = true;
    double min_mass = 0.0;
    std::size_t i = 0;  // lower-left corner of the worst rectangle
    std::size_t j = 0;
};

/// Checks that every adjacent grid rectangle carries nonnegative Γ-mass,
/// with tolerance 1e-12 · max |Γ| over the grid.
TwoIncreasingReport check_two_increasing(const CopulaFunction& gamma,
                                         std::span<const ExtReal> grid1,
                                         std::span<const ExtReal> grid2);

}  // namespace plc
