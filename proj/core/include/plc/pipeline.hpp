#pragma once

#include <array>
#include <filesystem>
#include <vector>

#include "plc/estimators.hpp"
#include "plc/series.hpp"

namespace plc {

/// n equally spaced points from lo to hi inclusive. ParameterError for
/// n = 0 or lo > hi; n = 1 gives {lo}.
std::vector<double> linspace(double lo, double hi, std::size_t n);

struct EstimateOptions {
    std::vector<double> grid1 = linspace(0.05, 1.5, 30);  // Γ̂ surface, first axis
    std::vector<double> grid2 = linspace(0.05, 1.5, 30);
    std::vector<double> diagonal = linspace(0.05, 1.5, 30);  // u for Γ̂(u,u) per quadrant

    /// ParameterError on empty or non-positive grids.
    void validate() const;
};

struct SurfacePoint {
    double u1, u2, value;
};

struct MarginalPoint {
    Axis component;
    bool positive;  // tail of the positive (true) or negative jumps
    double x;
    double value;   // U_{n,i}(x) at a breakpoint of the step tail
};

struct EstimateResult {
    double k_n = 0.0;
    std::vector<SurfacePoint> surface;                 // ++ quadrant
    std::array<std::vector<SurfacePoint>, 4> diagonals;  // indexed by Quadrant
    std::vector<MarginalPoint> marginals;
};

/// Γ̂_n on the grid for positive jumps, its diagonal in all four quadrants
/// and the marginal step tails of positive and negative jumps. The series'
/// scheme horizon is k_n. Synchronous series use U_n; asynchronous ones W_n.
EstimateResult run_estimate(const IncrementSeries& series, const EstimateOptions& options);

/// surface.csv (u1,u2,gamma_hat), diagonals.csv (quadrant,u,gamma_hat) and
/// marginal_tails.csv (component,sign,x,tail) in `dir`, created if absent.
void write_estimate(const EstimateResult& result, const std::filesystem::path& dir);

}  // namespace plc
