#include "plc/ext_real.hpp"

#include <charconv>
#include <cmath>

#include "plc/errors.hpp"

namespace plc {

ExtReal::ExtReal(double v) : v_(v) {
    if (std::isnan(v)) throw ContractError("ExtReal: NaN is not an extended real");
}

ExtReal ExtReal::reciprocal() const {
    if (v_ < 0.0) throw ContractError("ExtReal::reciprocal: negative argument");
    if (v_ == 0.0) return infinity();
    if (v_ == kInf) return ExtReal(Raw{}, 0.0);
    return ExtReal(Raw{}, 1.0 / v_);
}

ExtReal operator+(ExtReal a, ExtReal b) {
    if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf()))
        throw ContractError("ExtReal: ∞ - ∞ is undefined");
    return ExtReal(ExtReal::Raw{}, a.v_ + b.v_);
}

ExtReal operator-(ExtReal a, ExtReal b) { return a + (-b); }

ExtReal operator*(ExtReal a, ExtReal b) {
    if ((!a.is_finite() && b.v_ == 0.0) || (!b.is_finite() && a.v_ == 0.0))
        throw ContractError("ExtReal: 0 · ∞ is undefined");
    return ExtReal(ExtReal::Raw{}, a.v_ * b.v_);
}

std::string ExtReal::to_string() const {
    if (is_pos_inf()) return "inf";
    if (is_neg_inf()) return "-inf";
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v_);
    (void)ec;
    return std::string(buf, end);
}

std::ostream& operator<<(std::ostream& os, ExtReal x) { return os << x.to_string(); }

}  // namespace plc
