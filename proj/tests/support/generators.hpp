#pragma once

// Hand-rolled random inputs for property tests. Each generator draws from a
// std::mt19937_64 so failures replay from the printed seed.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include <plc/models.hpp>

namespace gen {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
    std::size_t index(std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng_); }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

    // Log-uniform on [lo, hi].
    double log_uniform(double lo, double hi) { return std::exp(uniform(std::log(lo), std::log(hi))); }

    // A coordinate in [0, ∞]: mostly interior, sometimes 0 or ∞.
    plc::ExtReal coordinate() {
        const double p = uniform(0.0, 1.0);
        if (p < 0.08) return 0.0;
        if (p < 0.16) return plc::kInf;
        return log_uniform(0.01, 100.0);
    }

    // A point of [0,∞]² \ {(0,0)}.
    plc::Point point() {
        for (;;) {
            plc::Point p{coordinate(), coordinate()};
            if (!(p.x1 == 0.0 && p.x2 == 0.0)) return p;
        }
    }

    plc::ParetoLevyCopula copula() {
        switch (index(4)) {
            case 0: return plc::ParetoLevyCopula::comonotone();
            case 1: return plc::ParetoLevyCopula::independence();
            default: return plc::ParetoLevyCopula::clayton(log_uniform(0.05, 20.0));
        }
    }

    // Ascending grid in (0, ∞], optionally ending in ∞.
    std::vector<plc::ExtReal> grid(std::size_t n, bool with_infinity) {
        std::vector<double> v;
        while (v.size() < n) {
            const double x = log_uniform(0.01, 100.0);
            if (std::find(v.begin(), v.end(), x) == v.end()) v.push_back(x);
        }
        std::sort(v.begin(), v.end());
        std::vector<plc::ExtReal> g(v.begin(), v.end());
        if (with_infinity) g.back() = plc::kInf;
        return g;
    }

    // Increments on a coarse lattice so that ties and zeros are common.
    std::vector<double> increments(std::size_t n, bool allow_negative) {
        std::vector<double> v(n);
        for (double& x : v) {
            const int lattice = static_cast<int>(index(allow_negative ? 21 : 11)) - (allow_negative ? 10 : 0);
            x = coin(0.3) ? 0.0 : 0.25 * lattice;
        }
        return v;
    }

    // Strictly increasing times in (0, end] ending exactly at `end`.
    std::vector<double> times(std::size_t m, double end) {
        std::vector<double> t;
        while (t.size() + 1 < m) {
            const double x = uniform(0.0, end);
            if (x > 0.0 && x < end && std::find(t.begin(), t.end(), x) == t.end()) t.push_back(x);
        }
        std::sort(t.begin(), t.end());
        t.push_back(end);
        return t;
    }

    // Random subset of the lattice {step, 2·step, ..., end}, always holding end.
    // Shared lattices make touching and coinciding interval endpoints common.
    std::vector<double> lattice_times(std::size_t cells, double step, double keep) {
        std::vector<double> t;
        for (std::size_t i = 1; i < cells; ++i)
            if (coin(keep)) t.push_back(step * static_cast<double>(i));
        t.push_back(step * static_cast<double>(cells));
        return t;
    }

    std::mt19937_64& engine() { return rng_; }

private:
    std::mt19937_64 rng_;
};

}  // namespace gen
