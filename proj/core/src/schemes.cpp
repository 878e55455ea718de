#include "plc/schemes.hpp"

#include <algorithm>
#include <cmath>

#include "plc/errors.hpp"

namespace plc {

namespace {

void validate_times(const std::vector<double>& t, const char* what) {
    if (t.empty()) throw ContractError(std::string(what) + ": at least one observation time required");
    double prev = 0.0;
    for (double v : t) {
        if (!std::isfinite(v) || !(v > prev))
            throw ContractError(std::string(what) + ": times must be finite, > 0 and strictly increasing");
        prev = v;
    }
}

double power_sum(const std::vector<double>& t, double p) {
    double prev = 0.0;
    double acc = 0.0;
    for (double v : t) {
        acc += std::pow(v - prev, p);
        prev = v;
    }
    return acc;
}

double mesh_of(const std::vector<double>& t) {
    double prev = 0.0;
    double m = 0.0;
    for (double v : t) {
        m = std::max(m, v - prev);
        prev = v;
    }
    return m;
}

}  // namespace

SamplingScheme::SamplingScheme(Variant v) : v_(std::move(v)) {
    if (const auto* e = std::get_if<Equidistant>(&v_)) {
        if (e->n == 0) throw ContractError("equidistant scheme: n must be positive");
        if (!(e->delta > 0.0) || !std::isfinite(e->delta))
            throw ContractError("equidistant scheme: delta must be finite and > 0");
    } else if (const auto* i = std::get_if<Irregular>(&v_)) {
        validate_times(i->times, "irregular scheme");
    } else {
        const auto& a = std::get<Asynchronous>(v_);
        validate_times(a.r, "asynchronous scheme (component 1)");
        validate_times(a.s, "asynchronous scheme (component 2)");
        if (a.r.back() != a.s.back())
            throw ContractError("asynchronous scheme: endpoints of both components must coincide");
    }
}

double SamplingScheme::horizon() const {
    if (const auto* e = std::get_if<Equidistant>(&v_)) return static_cast<double>(e->n) * e->delta;
    if (const auto* i = std::get_if<Irregular>(&v_)) return i->times.back();
    return std::get<Asynchronous>(v_).r.back();
}

std::vector<double> SamplingScheme::times(Axis component) const {
    if (const auto* e = std::get_if<Equidistant>(&v_)) {
        std::vector<double> t(e->n);
        for (std::size_t j = 0; j < e->n; ++j) t[j] = static_cast<double>(j + 1) * e->delta;
        return t;
    }
    if (const auto* i = std::get_if<Irregular>(&v_)) return i->times;
    const auto& a = std::get<Asynchronous>(v_);
    return component == Axis::first ? a.r : a.s;
}

std::size_t SamplingScheme::size(Axis component) const {
    if (const auto* e = std::get_if<Equidistant>(&v_)) return e->n;
    if (const auto* i = std::get_if<Irregular>(&v_)) return i->times.size();
    const auto& a = std::get<Asynchronous>(v_);
    return component == Axis::first ? a.r.size() : a.s.size();
}

SchemeDiagnostics diagnostics(const SamplingScheme& scheme, std::optional<double> beta,
                              std::optional<double> delta_exp) {
    if (beta && !(*beta >= 0.0 && *beta < 2.0)) throw ParameterError("diagnostics: beta must lie in [0,2)");
    if (delta_exp && !(*delta_exp > 0.0 && *delta_exp < 0.5))
        throw ParameterError("diagnostics: delta must lie in (0,1/2)");

    SchemeDiagnostics d;
    d.k_n = scheme.horizon();
    const double root_k = std::sqrt(d.k_n);
    d.m1 = scheme.size(Axis::first);
    d.m2 = scheme.size(Axis::second);

    if (const auto* e = std::get_if<Equidistant>(&scheme.variant())) {
        // Closed forms: Σ Δ^p = n Δ^p.
        const double n = static_cast<double>(e->n);
        d.mesh = e->delta;
        d.sqrt_k_delta = root_k * e->delta;
        d.irregular_stat = n * e->delta * e->delta / root_k;
        if (beta && (*beta > 1.0 || delta_exp)) {
            const double p = *beta > 1.0 ? (*beta + 2.0) / (*beta + 1.0) : 1.5 - *delta_exp;
            d.async_stat = n * std::pow(e->delta, p) / root_k;
        }
        if (delta_exp) d.semimartingale_stat = root_k * std::pow(e->delta, 0.5 - *delta_exp);
        return d;
    }

    const std::vector<double> t1 = scheme.times(Axis::first);
    const std::vector<double> t2 = scheme.times(Axis::second);
    d.mesh = std::max(mesh_of(t1), mesh_of(t2));
    d.irregular_stat = std::max(power_sum(t1, 2.0), power_sum(t2, 2.0)) / root_k;
    if (beta && (*beta > 1.0 || delta_exp)) {
        const double p = *beta > 1.0 ? (*beta + 2.0) / (*beta + 1.0) : 1.5 - *delta_exp;
        d.async_stat = std::max(power_sum(t1, p), power_sum(t2, p)) / root_k;
    }
    if (delta_exp)
        d.semimartingale_stat =
            std::max(power_sum(t1, 1.5 - *delta_exp), power_sum(t2, 1.5 - *delta_exp)) / root_k;
    return d;
}

std::vector<std::pair<std::size_t, std::size_t>> overlap_pairs(const Asynchronous& scheme) {
    const auto& r = scheme.r;
    const auto& s = scheme.s;
    std::vector<std::pair<std::size_t, std::size_t>> out;
    out.reserve(r.size() + s.size());
    std::size_t j = 0;
    std::size_t l = 0;
    // Both current intervals start before either ends, so they overlap.
    while (j < r.size() && l < s.size()) {
        out.emplace_back(j, l);
        if (r[j] < s[l]) {
            ++j;
        } else if (s[l] < r[j]) {
            ++l;
        } else {
            ++j;
            ++l;
        }
    }
    return out;
}

}  // namespace plc
