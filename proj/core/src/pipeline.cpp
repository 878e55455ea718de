#include "plc/pipeline.hpp"

#include <fstream>

#include "plc/errors.hpp"
#include "plc/tick_data.hpp"

namespace plc {

std::vector<double> linspace(double lo, double hi, std::size_t n) {
    if (n == 0) throw ParameterError("linspace: empty grid");
    if (!(lo <= hi)) throw ParameterError("linspace: lo > hi");
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = n == 1 ? lo : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
    if (n > 1) g.back() = hi;
    return g;
}

void EstimateOptions::validate() const {
    for (const auto* g : {&grid1, &grid2, &diagonal}) {
        if (g->empty()) throw ParameterError("estimate: empty grid");
        for (double u : *g)
            if (!(u > 0.0)) throw ParameterError("estimate: grid values must be positive");
    }
}

namespace {

EmpiricalTail tail_of(const IncrementSeries& s) {
    return s.scheme.is_synchronous() ? empirical_tail(s) : empirical_tail_async(s);
}

}  // namespace

EstimateResult run_estimate(const IncrementSeries& series, const EstimateOptions& options) {
    options.validate();
    EstimateResult out;
    out.k_n = series.scheme.horizon();

    for (Quadrant q : {Quadrant::pp, Quadrant::pm, Quadrant::mp, Quadrant::mm}) {
        const EmpiricalTail tail = tail_of(quadrant_transform(series, q));
        if (q == Quadrant::pp)
            for (double u1 : options.grid1)
                for (double u2 : options.grid2) out.surface.push_back({u1, u2, empirical_plc(tail, u1, u2)});
        auto& diag = out.diagonals[static_cast<std::size_t>(q)];
        for (double u : options.diagonal) diag.push_back({u, u, empirical_plc(tail, u, u)});

        // Negative-jump marginals come from the quadrant that flips both signs.
        if (q == Quadrant::pp || q == Quadrant::mm) {
            for (Axis c : {Axis::first, Axis::second}) {
                const StepFunction f = tail.marginal_step(c);
                for (std::size_t i = 0; i < f.breakpoints().size(); ++i)
                    out.marginals.push_back({c, q == Quadrant::pp, f.breakpoints()[i], f.values()[i]});
            }
        }
    }
    return out;
}

void write_estimate(const EstimateResult& result, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    auto open = [&](const char* name) {
        std::ofstream f(dir / name);
        if (!f) throw IoError("cannot write " + (dir / name).string());
        return f;
    };
    {
        auto f = open("surface.csv");
        f << "u1,u2,gamma_hat\n";
        for (const auto& p : result.surface)
            f << format_double(p.u1) << ',' << format_double(p.u2) << ',' << format_double(p.value) << '\n';
    }
    {
        auto f = open("diagonals.csv");
        f << "quadrant,u,gamma_hat\n";
        for (Quadrant q : {Quadrant::pp, Quadrant::pm, Quadrant::mp, Quadrant::mm})
            for (const auto& p : result.diagonals[static_cast<std::size_t>(q)])
                f << to_string(q) << ',' << format_double(p.u1) << ',' << format_double(p.value) << '\n';
    }
    {
        auto f = open("marginal_tails.csv");
        f << "component,sign,x,tail\n";
        for (const auto& m : result.marginals)
            f << (m.component == Axis::first ? 1 : 2) << ',' << (m.positive ? '+' : '-') << ','
              << format_double(m.x) << ',' << format_double(m.value) << '\n';
    }
}

}  // namespace plc
