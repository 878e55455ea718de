#include "plc/sim.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "plc/errors.hpp"
#include "plc/rng.hpp"

namespace plc {

IncrementSeries::IncrementSeries(SamplingScheme s, std::vector<double> first, std::vector<double> second)
    : scheme(std::move(s)), increments{std::move(first), std::move(second)} {
    if (increments[0].size() != scheme.size(Axis::first) || increments[1].size() != scheme.size(Axis::second))
        throw ContractError("IncrementSeries: increment count does not match the sampling scheme");
}

void ProcessConfig::validate() const {
    if (!(eps > 0.0) || !std::isfinite(eps)) throw ParameterError("ProcessConfig: eps must be finite and > 0");
    if (!(horizon > 0.0) || !std::isfinite(horizon))
        throw ParameterError("ProcessConfig: horizon must be finite and > 0");
    for (double v : brownian_variances)
        if (!(v >= 0.0) || !std::isfinite(v)) throw ParameterError("ProcessConfig: variances must be >= 0");
    for (double a : drift)
        if (!std::isfinite(a)) throw ParameterError("ProcessConfig: drift must be finite");
}

namespace {

std::uint64_t poisson_count(CounterRng& rng, double mean) {
    std::poisson_distribution<std::uint64_t> dist(mean);
    return dist(rng);
}

}  // namespace

std::vector<Jump> simulate_jumps(const ProcessConfig& config, std::uint64_t replication) {
    config.validate();
    const ParetoLevyModel& model = config.model;
    const double T = config.horizon;
    const double tail1 = model.margins[0](config.eps).value();  // U₁(eps)
    const double tail2 = model.margins[1](config.eps).value();
    const double w1_floor = 1.0 / tail1;  // x₁ ≥ eps  ⇔  w₁ ≥ w1_floor

    std::vector<Jump> jumps;

    // Jumps with x₁ ≥ eps and their component-2 companions.
    {
        CounterRng rng = make_rng(config.seed, replication, Stream::jumps_first);
        const std::uint64_t count = poisson_count(rng, T * tail1);
        jumps.reserve(static_cast<std::size_t>(count + count / 2 + 16));
        for (std::uint64_t i = 0; i < count; ++i) {
            const double t = T * rng.uniform();
            const double level = tail1 * rng.uniform();  // U₁(x₁), uniform on (0, U₁(eps))
            const double w1 = 1.0 / level;
            const ExtReal w2 = model.copula.companion(Axis::first, w1, rng.uniform());
            const double x1 = model.margins[0].inverse(level).value();
            const double x2 = model.margins[1].inverse(w2.reciprocal()).value();
            jumps.push_back({t, x1, x2});
        }
    }

    // Jumps with x₂ ≥ eps whose component-1 coordinate falls below eps.
    {
        CounterRng rng = make_rng(config.seed, replication, Stream::jumps_second);
        const std::uint64_t count = poisson_count(rng, T * tail2);
        for (std::uint64_t i = 0; i < count; ++i) {
            const double t = T * rng.uniform();
            const double level = tail2 * rng.uniform();
            const double w2 = 1.0 / level;
            const ExtReal w1 = model.copula.companion(Axis::second, w2, rng.uniform());
            if (!(w1 < w1_floor)) continue;  // already produced by the first pass
            const double x1 = model.margins[0].inverse(w1.reciprocal()).value();
            const double x2 = model.margins[1].inverse(level).value();
            jumps.push_back({t, x1, x2});
        }
    }

    std::sort(jumps.begin(), jumps.end(), [](const Jump& a, const Jump& b) { return a.time < b.time; });
    return jumps;
}

namespace {

std::vector<double> component_increments(std::span<const Jump> jumps, const std::vector<double>& times,
                                         double drift, double variance, CounterRng rng, bool first) {
    std::vector<double> inc(times.size(), 0.0);
    double prev = 0.0;
    if (variance > 0.0) {
        std::normal_distribution<double> normal(0.0, 1.0);
        for (std::size_t j = 0; j < times.size(); ++j) {
            const double dt = times[j] - prev;
            inc[j] = drift * dt + std::sqrt(variance * dt) * normal(rng);
            prev = times[j];
        }
    } else if (drift != 0.0) {
        for (std::size_t j = 0; j < times.size(); ++j) {
            inc[j] = drift * (times[j] - prev);
            prev = times[j];
        }
    }
    const double end = times.back();
    for (const Jump& jump : jumps) {
        if (jump.time > end) break;  // jumps are time-sorted
        const double size = first ? jump.x1 : jump.x2;
        if (size == 0.0) continue;
        // jump at τ lands in the interval (t_{j-1}, t_j] with t_j the first time ≥ τ
        const auto j = static_cast<std::size_t>(std::lower_bound(times.begin(), times.end(), jump.time) - times.begin());
        inc[j] += size;
    }
    return inc;
}

}  // namespace

IncrementSeries aggregate_increments(std::span<const Jump> jumps, const ProcessConfig& config,
                                     const SamplingScheme& scheme, std::uint64_t replication) {
    config.validate();
    if (scheme.horizon() > config.horizon)
        throw ParameterError("sample_path_increments: scheme horizon exceeds the simulated horizon");
    const std::vector<double> t1 = scheme.times(Axis::first);
    std::vector<double> first =
        component_increments(jumps, t1, config.drift[0], config.brownian_variances[0],
                             make_rng(config.seed, replication, Stream::brownian_first), true);
    std::vector<double> second =
        component_increments(jumps, scheme.is_synchronous() ? t1 : scheme.times(Axis::second), config.drift[1],
                             config.brownian_variances[1],
                             make_rng(config.seed, replication, Stream::brownian_second), false);
    return IncrementSeries(scheme, std::move(first), std::move(second));
}

IncrementSeries sample_path_increments(const ProcessConfig& config, const SamplingScheme& scheme,
                                       std::uint64_t replication) {
    config.validate();
    if (scheme.horizon() > config.horizon)
        throw ParameterError("sample_path_increments: scheme horizon exceeds the simulated horizon");
    const std::vector<Jump> jumps = simulate_jumps(config, replication);
    return aggregate_increments(jumps, config, scheme, replication);
}

std::vector<TruncationEntry> truncation_bias_probe(const ProcessConfig& config, std::span<const Point> grid) {
    config.validate();
    const double eps = config.eps;
    auto lower = [](ExtReal x) { return x.is_neg_inf() ? 0.0 : x.value(); };
    auto U = [&](double a, double b) { return tail_from_copula(config.model, {a, b}); };

    std::vector<TruncationEntry> out;
    out.reserve(grid.size());
    for (const Point& x : grid) {
        for (ExtReal c : {x.x1, x.x2})
            if (c < 0.0 && !c.is_neg_inf()) throw DomainError("truncation_bias_probe: negative threshold");
        const bool flagged = (x.x1.is_finite() && x.x1 < eps) || (x.x2.is_finite() && x.x2 < eps);
        const double l1 = lower(x.x1);
        const double l2 = lower(x.x2);
        ExtReal diff = 0.0;
        if (l1 < eps && l2 < eps) {
            if (l1 == 0.0 && l2 == 0.0) {
                diff = kNegInf;  // infinitely many jumps below eps in both coordinates
            } else {
                // -ν([l₁, eps) × [l₂, eps))
                diff = -(U(l1, l2) - U(eps, l2) - U(l1, eps) + U(eps, eps));
            }
        }
        out.push_back({x, diff, flagged});
    }
    return out;
}

}  // namespace plc
