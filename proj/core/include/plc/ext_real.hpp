#pragma once

#include <compare>
#include <limits>
#include <ostream>
#include <string>

namespace plc {

/// A value of the extended real line [-∞, +∞].
///
/// The domain of the bivariate tail integral contains stripes through -∞,
/// and Pareto–Lévy copulas are evaluated at +∞, so infinities are ordinary
/// values here. NaN is never representable. Arithmetic that has no extended
/// meaning (∞ - ∞, 0 · ∞) throws ContractError.
class ExtReal {
public:
    constexpr ExtReal() noexcept = default;
    // Implicit on purpose: finite doubles and ±HUGE_VAL are valid values.
    ExtReal(double v);  // NOLINT(google-explicit-constructor)

    static constexpr ExtReal infinity() noexcept { return ExtReal(Raw{}, kInf); }
    static constexpr ExtReal neg_infinity() noexcept { return ExtReal(Raw{}, -kInf); }

    constexpr double value() const noexcept { return v_; }
    constexpr bool is_finite() const noexcept { return v_ != kInf && v_ != -kInf; }
    constexpr bool is_pos_inf() const noexcept { return v_ == kInf; }
    constexpr bool is_neg_inf() const noexcept { return v_ == -kInf; }

    /// 1/x on [0, ∞] with 1/0 = ∞ and 1/∞ = 0. Negative input is a contract
    /// violation.
    ExtReal reciprocal() const;

    friend constexpr bool operator==(ExtReal a, ExtReal b) noexcept { return a.v_ == b.v_; }
    friend constexpr std::partial_ordering operator<=>(ExtReal a, ExtReal b) noexcept {
        return a.v_ <=> b.v_;
    }

    friend ExtReal operator+(ExtReal a, ExtReal b);
    friend ExtReal operator-(ExtReal a, ExtReal b);
    friend ExtReal operator*(ExtReal a, ExtReal b);
    friend constexpr ExtReal operator-(ExtReal a) noexcept { return ExtReal(Raw{}, -a.v_); }

    std::string to_string() const;

private:
    static constexpr double kInf = std::numeric_limits<double>::infinity();
    struct Raw {};
    constexpr ExtReal(Raw, double v) noexcept : v_(v) {}

    double v_ = 0.0;
};

inline ExtReal max(ExtReal a, ExtReal b) noexcept { return a < b ? b : a; }
inline ExtReal min(ExtReal a, ExtReal b) noexcept { return b < a ? b : a; }

std::ostream& operator<<(std::ostream& os, ExtReal x);

/// A point of the extended plane; used both for tail-integral arguments x
/// and copula arguments u.
struct Point {
    ExtReal x1;
    ExtReal x2;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Coordinatewise maximum. -∞ is the neutral element.
inline Point coord_max(const Point& a, const Point& b) noexcept {
    return {max(a.x1, b.x1), max(a.x2, b.x2)};
}

inline constexpr ExtReal kInf = ExtReal::infinity();
inline constexpr ExtReal kNegInf = ExtReal::neg_infinity();

}  // namespace plc
