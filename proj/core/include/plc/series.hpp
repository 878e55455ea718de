#pragma once

#include <array>
#include <vector>

#include "plc/schemes.hpp"

namespace plc {

/// Increments of an observed bivariate path under a sampling scheme:
/// increments[c][j] is X^(c)_{t_j} - X^(c)_{t_{j-1}} on component c's grid.
struct IncrementSeries {
    SamplingScheme scheme;
    std::array<std::vector<double>, 2> increments;

    /// Checks counts against the scheme. ContractError on mismatch.
    IncrementSeries(SamplingScheme scheme, std::vector<double> first, std::vector<double> second);

    const std::vector<double>& values(Axis c) const { return increments[c == Axis::first ? 0 : 1]; }
    std::vector<double>& values(Axis c) { return increments[c == Axis::first ? 0 : 1]; }
    std::vector<double> times(Axis c) const { return scheme.times(c); }
};

}  // namespace plc
