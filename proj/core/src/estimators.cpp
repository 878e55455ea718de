#include "plc/estimators.hpp"

#include <algorithm>
#include <cmath>

#include "plc/errors.hpp"

namespace plc {

EmpiricalTail::EmpiricalTail(std::span<const double> joint1, std::span<const double> joint2,
                             std::vector<double> marginal1, std::vector<double> marginal2, double k_n)
    : joint_(joint1, joint2), marginals_{std::move(marginal1), std::move(marginal2)}, k_n_(k_n) {
    if (!(k_n > 0.0) || !std::isfinite(k_n)) throw ParameterError("EmpiricalTail: k_n must be finite and > 0");
    for (auto& m : marginals_) {
        for (double v : m)
            if (std::isnan(v)) throw ContractError("EmpiricalTail: NaN increment");
        std::sort(m.begin(), m.end());
    }
}

double EmpiricalTail::marginal(Axis c, ExtReal x) const {
    const auto& v = sorted(c);
    if (x.is_pos_inf()) return 0.0;
    if (x.is_neg_inf()) return static_cast<double>(v.size()) / k_n_;
    const auto first = std::lower_bound(v.begin(), v.end(), x.value());
    return static_cast<double>(v.end() - first) / k_n_;
}

double EmpiricalTail::operator()(ExtReal x1, ExtReal x2) const {
    if (x1.is_pos_inf() || x2.is_pos_inf()) return 0.0;
    if (x1.is_neg_inf() && x2.is_neg_inf()) return static_cast<double>(n_obs()) / k_n_;
    if (x2.is_neg_inf()) return marginal(Axis::first, x1);
    if (x1.is_neg_inf()) return marginal(Axis::second, x2);
    return static_cast<double>(joint_.count(x1.value(), x2.value())) / k_n_;
}

ExtReal EmpiricalTail::marginal_inverse(Axis c, ExtReal z) const {
    if (z < 0.0) throw DomainError("marginal_inverse: negative level");
    if (z == 0.0) return kInf;
    if (z.is_pos_inf()) return 0.0;
    const auto& v = sorted(c);
    const std::size_t n = v.size();
    const std::size_t positive =
        static_cast<std::size_t>(v.end() - std::upper_bound(v.begin(), v.end(), 0.0));

    // Largest m ≤ n with m / k_n ≤ z, judged in the same arithmetic as the
    // evaluation of U_{n,i}.
    const double guess = std::floor(z.value() * k_n_);
    std::size_t m = guess >= static_cast<double>(n) ? n : static_cast<std::size_t>(std::max(guess, 0.0));
    while (m < n && static_cast<double>(m + 1) / k_n_ <= z.value()) ++m;
    while (m > 0 && static_cast<double>(m) / k_n_ > z.value()) --m;

    if (m >= positive) return 0.0;
    return v[n - 1 - m];
}

StepFunction EmpiricalTail::marginal_step(Axis c) const {
    const auto& v = sorted(c);
    std::vector<double> breaks;
    std::vector<double> values;
    auto first_positive = std::upper_bound(v.begin(), v.end(), 0.0);
    values.push_back(static_cast<double>(v.end() - first_positive) / k_n_);
    for (auto it = first_positive; it != v.end();) {
        const double b = *it;
        it = std::upper_bound(it, v.end(), b);
        breaks.push_back(b);
        values.push_back(static_cast<double>(v.end() - it) / k_n_);
    }
    return StepFunction(std::move(breaks), std::move(values));
}

EmpiricalTail empirical_tail(const IncrementSeries& series) {
    if (!series.scheme.is_synchronous())
        throw ContractError("empirical_tail: asynchronous scheme; use empirical_tail_async");
    const auto& a = series.values(Axis::first);
    const auto& b = series.values(Axis::second);
    return EmpiricalTail(a, b, a, b, series.scheme.horizon());
}

EmpiricalTail empirical_tail_async(const IncrementSeries& series) {
    if (series.scheme.is_synchronous()) return empirical_tail(series);
    const auto& async = std::get<Asynchronous>(series.scheme.variant());
    const auto pairs = overlap_pairs(async);
    const auto& a = series.values(Axis::first);
    const auto& b = series.values(Axis::second);
    std::vector<double> ja(pairs.size());
    std::vector<double> jb(pairs.size());
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        ja[p] = a[pairs[p].first];
        jb[p] = b[pairs[p].second];
    }
    return EmpiricalTail(ja, jb, a, b, series.scheme.horizon());
}

ExtReal bar(ExtReal a) {
    if (a < 0.0) throw DomainError("bar: argument must lie in [0, ∞]");
    return a == 0.0 ? kNegInf : a;
}

namespace {

void check_plc_args(ExtReal u1, ExtReal u2) {
    if (u1 < 0.0 || u2 < 0.0) throw DomainError("Pareto–Lévy copula estimator: negative argument");
    if (u1 == 0.0 && u2 == 0.0) throw DomainError("Pareto–Lévy copula estimator: (0,0) is excluded");
}

}  // namespace

double empirical_plc(const EmpiricalTail& tail, ExtReal u1, ExtReal u2) {
    check_plc_args(u1, u2);
    const ExtReal a1 = bar(tail.marginal_inverse(Axis::first, u1.reciprocal()));
    const ExtReal a2 = bar(tail.marginal_inverse(Axis::second, u2.reciprocal()));
    return tail(a1, a2);
}

double oracle_plc(const EmpiricalTail& tail, const std::array<StableTail, 2>& margins, ExtReal u1, ExtReal u2) {
    check_plc_args(u1, u2);
    return tail(margins[0].inverse(u1.reciprocal()), margins[1].inverse(u2.reciprocal()));
}

Quadrant parse_quadrant(std::string_view s) {
    if (s == "++") return Quadrant::pp;
    if (s == "+-") return Quadrant::pm;
    if (s == "-+") return Quadrant::mp;
    if (s == "--") return Quadrant::mm;
    throw ParameterError("unknown quadrant '" + std::string(s) + "' (expected ++, +-, -+ or --)");
}

std::string_view to_string(Quadrant q) {
    switch (q) {
        case Quadrant::pp: return "++";
        case Quadrant::pm: return "+-";
        case Quadrant::mp: return "-+";
        case Quadrant::mm: return "--";
    }
    return "??";
}

IncrementSeries quadrant_transform(IncrementSeries series, Quadrant q) {
    const bool flip1 = q == Quadrant::mp || q == Quadrant::mm;
    const bool flip2 = q == Quadrant::pm || q == Quadrant::mm;
    if (flip1)
        for (double& v : series.values(Axis::first)) v = -v;
    if (flip2)
        for (double& v : series.values(Axis::second)) v = -v;
    return series;
}

Field standardized_process(Field estimate, Field target, double k_n) {
    if (!(k_n > 0.0)) throw ParameterError("standardized_process: k_n must be > 0");
    return [estimate = std::move(estimate), target = std::move(target), k_n](const Point& x) {
        return standardize(estimate(x), target(x), k_n);
    };
}

}  // namespace plc
