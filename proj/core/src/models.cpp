#include "plc/models.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "plc/errors.hpp"

namespace plc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Stripe convention: -∞ behaves like 0, since Γ(u, -∞) = Γ(u, 0) = 1/u.
ExtReal stripe_to_zero(ExtReal u) { return u.is_neg_inf() ? ExtReal(0.0) : u; }

void check_copula_args(ExtReal& u1, ExtReal& u2) {
    u1 = stripe_to_zero(u1);
    u2 = stripe_to_zero(u2);
    if (u1 < 0.0 || u2 < 0.0) throw DomainError("Pareto–Lévy copula: negative argument");
    if (u1 == 0.0 && u2 == 0.0) throw DomainError("Pareto–Lévy copula: Γ(0,0) is undefined");
}

void check_theta(double theta) {
    if (!(theta > 0.0) || !std::isfinite(theta))
        throw ParameterError("Clayton: theta must be finite and > 0");
}

bool interior(ExtReal u) { return u.is_finite() && u > 0.0; }

double clayton_value(double u1, double u2, double theta) {
    // hi⁻¹ · (1 + (lo/hi)^θ)^(-1/θ), stable for very unequal arguments.
    const double hi = std::max(u1, u2);
    const double lo = std::min(u1, u2);
    return std::pow(1.0 + std::pow(lo / hi, theta), -1.0 / theta) / hi;
}

}  // namespace

// ---------------------------------------------------------------------------

StableTail::StableTail(double a, double s) : alpha(a), scale(s) {
    if (!(alpha > 0.0 && alpha < 2.0)) throw ParameterError("StableTail: alpha must lie in (0,2)");
    if (!(scale > 0.0) || !std::isfinite(scale)) throw ParameterError("StableTail: scale must be > 0");
}

StableTail StableTail::half_stable() { return StableTail(0.5, 1.0 / std::sqrt(std::numbers::pi)); }

ExtReal StableTail::operator()(ExtReal x) const {
    if (x < 0.0) throw DomainError("StableTail: negative argument");
    if (x == 0.0) return kInf;
    if (x.is_pos_inf()) return 0.0;
    return scale * std::pow(x.value(), -alpha);
}

ExtReal StableTail::inverse(ExtReal z) const {
    if (z < 0.0) throw DomainError("StableTail::inverse: negative level");
    if (z == 0.0) return kInf;
    if (z.is_pos_inf()) return 0.0;
    return std::pow(scale / z.value(), 1.0 / alpha);
}

double stable_tail(double x, double alpha, double scale) {
    if (!(x > 0.0) || !std::isfinite(x)) throw DomainError("stable_tail: x must be finite and > 0");
    return StableTail(alpha, scale)(x).value();
}

// ---------------------------------------------------------------------------

ParetoLevyCopula::ParetoLevyCopula(Family family) : family_(family) {
    if (const auto* c = std::get_if<Clayton>(&family_)) check_theta(c->theta);
}

std::string ParetoLevyCopula::name() const {
    return std::visit(overloaded{
                          [](const Clayton& c) { return "clayton(theta=" + ExtReal(c.theta).to_string() + ")"; },
                          [](const Comonotone&) { return std::string("comonotone"); },
                          [](const Independence&) { return std::string("independence"); },
                      },
                      family_);
}

double ParetoLevyCopula::operator()(ExtReal u1, ExtReal u2) const {
    return std::visit(overloaded{
                          [&](const Clayton& c) { return clayton_gamma(u1, u2, c.theta); },
                          [&](const Comonotone&) { return frechet_gamma(u1, u2, FrechetKind::comonotone); },
                          [&](const Independence&) { return frechet_gamma(u1, u2, FrechetKind::independence); },
                      },
                      family_);
}

double ParetoLevyCopula::partial(Axis axis, ExtReal u1, ExtReal u2) const {
    if (!interior(u1) || !interior(u2))
        throw DomainError("partial: interior point required; use boundary_partial on the boundary");
    return std::visit(overloaded{
                          [&](const Clayton& c) { return clayton_partial(u1, u2, c.theta, axis); },
                          [&](const Comonotone&) -> double {
                              // Γ = 1/max(u₁,u₂): only the larger coordinate matters.
                              const double a = (axis == Axis::first ? u1 : u2).value();
                              const double b = (axis == Axis::first ? u2 : u1).value();
                              if (a == b)
                                  throw UnsupportedModelError("comonotone copula: no derivative on the diagonal");
                              return a > b ? -1.0 / (a * a) : 0.0;
                          },
                          [&](const Independence&) { return 0.0; },
                      },
                      family_);
}

double ParetoLevyCopula::conditional_survival(Axis given, double w_given, ExtReal w_other) const {
    if (!(w_given > 0.0) || !std::isfinite(w_given))
        throw DomainError("conditional_survival: w_given must be finite and > 0");
    if (w_other < 0.0) throw DomainError("conditional_survival: negative w_other");
    if (w_other == 0.0) return 1.0;
    if (w_other.is_pos_inf()) return 0.0;
    (void)given;  // all built-in families are exchangeable
    const double r = w_other.value() / w_given;
    return std::visit(overloaded{
                          [&](const Clayton& c) {
                              return std::pow(1.0 + std::pow(r, c.theta), -(1.0 + c.theta) / c.theta);
                          },
                          [&](const Comonotone&) { return r <= 1.0 ? 1.0 : 0.0; },
                          [&](const Independence&) { return 0.0; },
                      },
                      family_);
}

ExtReal ParetoLevyCopula::companion(Axis given, double w_given, double v) const {
    if (!(v > 0.0 && v < 1.0)) throw DomainError("companion: v must lie in (0,1)");
    (void)given;
    return std::visit(overloaded{
                          [&](const Clayton& c) -> ExtReal {
                              const double t = std::pow(v, -c.theta / (1.0 + c.theta)) - 1.0;
                              return w_given * std::pow(t, 1.0 / c.theta);
                          },
                          [&](const Comonotone&) -> ExtReal { return w_given; },
                          [&](const Independence&) -> ExtReal { return 0.0; },
                      },
                      family_);
}

double clayton_gamma(ExtReal u1, ExtReal u2, double theta) {
    check_theta(theta);
    check_copula_args(u1, u2);
    if (u1.is_pos_inf() || u2.is_pos_inf()) return 0.0;  // grounded
    if (u2 == 0.0) return 1.0 / u1.value();               // Pareto margins
    if (u1 == 0.0) return 1.0 / u2.value();
    return clayton_value(u1.value(), u2.value(), theta);
}

double frechet_gamma(ExtReal u1, ExtReal u2, FrechetKind kind) {
    check_copula_args(u1, u2);
    switch (kind) {
        case FrechetKind::comonotone:
            return max(u1, u2).reciprocal().value();
        case FrechetKind::independence:
            if (u2 == 0.0) return u1.reciprocal().value();
            if (u1 == 0.0) return u2.reciprocal().value();
            return 0.0;
    }
    return 0.0;
}

double clayton_partial(ExtReal u1, ExtReal u2, double theta, Axis axis) {
    check_theta(theta);
    if (!interior(u1) || !interior(u2))
        throw DomainError("clayton_partial: coordinates must be finite and > 0");
    const double a = u1.value();
    const double b = u2.value();
    const double hi = std::max(a, b);
    const double lo = std::min(a, b);
    const double ui = axis == Axis::first ? a : b;
    // log of (u₁^θ + u₂^θ) = θ log hi + log1p((lo/hi)^θ)
    const double log_sum = theta * std::log(hi) + std::log1p(std::pow(lo / hi, theta));
    return -std::exp((-1.0 / theta - 1.0) * log_sum + (theta - 1.0) * std::log(ui));
}

double boundary_partial(ExtReal u_axis, PartialBoundary where) {
    if (!interior(u_axis)) throw DomainError("boundary_partial: coordinate must be finite and > 0");
    if (where == PartialBoundary::other_infinite) return 0.0;
    const double u = u_axis.value();
    return -1.0 / (u * u);
}

// ---------------------------------------------------------------------------

ParetoLevyModel ParetoLevyModel::reference() {
    return ParetoLevyModel{ParetoLevyCopula::clayton(0.5), {StableTail::half_stable(), StableTail::half_stable()}};
}

double tail_from_copula(const ParetoLevyModel& model, const Point& x) {
    if (x.x1.is_neg_inf() && x.x2.is_neg_inf())
        throw DomainError("tail integral at (-∞,-∞) has infinite mass");
    if (x.x1 < 0.0 && !x.x1.is_neg_inf()) throw DomainError("tail integral: negative threshold");
    if (x.x2 < 0.0 && !x.x2.is_neg_inf()) throw DomainError("tail integral: negative threshold");
    if (x.x1.is_neg_inf() || x.x2.is_neg_inf()) {
        const Axis a = x.x1.is_neg_inf() ? Axis::second : Axis::first;
        const ExtReal v = model.margin(a)(a == Axis::first ? x.x1 : x.x2);
        if (!v.is_finite()) throw DomainError("tail integral: infinite marginal mass at 0");
        return v.value();
    }
    const ExtReal w1 = model.margins[0](x.x1).reciprocal();
    const ExtReal w2 = model.margins[1](x.x2).reciprocal();
    return model.copula(w1, w2);
}

double copula_from_tail(const ParetoLevyModel& model, const Point& u) {
    const ExtReal a1 = model.margins[0].inverse(stripe_to_zero(u.x1).reciprocal());
    const ExtReal a2 = model.margins[1].inverse(stripe_to_zero(u.x2).reciprocal());
    if (a1 == 0.0 && a2 == 0.0) throw DomainError("copula_from_tail: Γ(0,0) is undefined");
    return tail_from_copula(model, {a1, a2});
}

// ---------------------------------------------------------------------------

StepFunction::StepFunction(std::vector<double> breakpoints, std::vector<double> values)
    : breaks_(std::move(breakpoints)), values_(std::move(values)) {
    if (values_.size() != breaks_.size() + 1)
        throw ContractError("StepFunction: need exactly one more value than breakpoints");
    for (std::size_t i = 0; i < breaks_.size(); ++i) {
        if (!(breaks_[i] > 0.0) || !std::isfinite(breaks_[i]))
            throw ContractError("StepFunction: breakpoints must be finite and > 0");
        if (i > 0 && !(breaks_[i] > breaks_[i - 1]))
            throw ContractError("StepFunction: breakpoints must be strictly increasing");
    }
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (std::isnan(values_[i]) || values_[i] < 0.0)
            throw ContractError("StepFunction: values must be nonnegative");
        if (i > 0 && values_[i] > values_[i - 1])
            throw ContractError("StepFunction: function is not nonincreasing");
    }
    if (values_.back() != 0.0) throw ContractError("StepFunction: f(∞) must be 0");
}

double StepFunction::operator()(ExtReal x) const {
    if (!(x > 0.0)) throw DomainError("StepFunction: argument must be > 0");
    if (x.is_pos_inf()) return 0.0;
    const auto idx = std::lower_bound(breaks_.begin(), breaks_.end(), x.value()) - breaks_.begin();
    return values_[static_cast<std::size_t>(idx)];
}

ExtReal StepFunction::inverse(ExtReal z) const {
    if (z < 0.0) throw DomainError("StepFunction::inverse: negative level");
    if (z == 0.0) return kInf;
    // First plateau whose value is ≤ z; values are nonincreasing.
    const auto it = std::partition_point(values_.begin(), values_.end(),
                                         [&](double v) { return v > z.value(); });
    const auto idx = static_cast<std::size_t>(it - values_.begin());
    if (idx == 0) return 0.0;
    return breaks_[idx - 1];
}

ExtReal generalized_inverse(const std::function<double(double)>& f, double z) {
    if (std::isnan(z) || z < 0.0) throw DomainError("generalized_inverse: negative level");
    if (z == 0.0) return kInf;
    double hi = 1.0;
    while (f(hi) > z) {
        hi *= 2.0;
        if (hi > 1e300) return kInf;
    }
    double lo = hi / 2.0;
    while (f(lo) <= z) {
        lo /= 2.0;
        if (lo < 1e-300) return 0.0;
    }
    // Invariant: f(lo) > z ≥ f(hi).
    for (int it = 0; it < 2000; ++it) {
        const double mid = lo + (hi - lo) / 2.0;
        if (mid <= lo || mid >= hi) break;
        (f(mid) > z ? lo : hi) = mid;
    }
    return hi;
}

TwoIncreasingReport check_two_increasing(const CopulaFunction& gamma, std::span<const ExtReal> grid1,
                                         std::span<const ExtReal> grid2) {
    if (grid1.size() < 2 || grid2.size() < 2)
        throw ParameterError("check_two_increasing: need at least two grid points per axis");
    auto validate = [](std::span<const ExtReal> g) {
        for (std::size_t i = 0; i < g.size(); ++i) {
            if (!(g[i] > 0.0)) throw ParameterError("check_two_increasing: grid points must lie in (0,∞]");
            if (i > 0 && !(g[i] > g[i - 1])) throw ParameterError("check_two_increasing: grid must ascend");
        }
    };
    validate(grid1);
    validate(grid2);

    const std::size_t n1 = grid1.size();
    const std::size_t n2 = grid2.size();
    std::vector<double> values(n1 * n2);
    double scale = 0.0;
    for (std::size_t i = 0; i < n1; ++i)
        for (std::size_t j = 0; j < n2; ++j) {
            values[i * n2 + j] = gamma(grid1[i], grid2[j]);
            scale = std::max(scale, std::abs(values[i * n2 + j]));
        }
    const double tol = 1e-12 * scale;

    TwoIncreasingReport report;
    report.min_mass = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < n1; ++i)
        for (std::size_t j = 0; j + 1 < n2; ++j) {
            const double mass = values[i * n2 + j] - values[i * n2 + j + 1] - values[(i + 1) * n2 + j] +
                                values[(i + 1) * n2 + j + 1];
            if (mass < report.min_mass) {
                report.min_mass = mass;
                report.i = i;
                report.j = j;
            }
        }
    report.ok = report.min_mass >= -tol;
    return report;
}

}  // namespace plc
