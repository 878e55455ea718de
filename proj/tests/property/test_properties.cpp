// Property suites, runnable on their own: ctest -L property
#include <gtest/gtest.h>

#include "property_checks.hpp"

namespace {

constexpr std::uint64_t kSeed = 0x5eed;

void expect_ok(const checks::Result& r) {
    EXPECT_TRUE(r.ok) << r.detail;
    EXPECT_GT(r.cases, 0u);
}

TEST(CopulaProperties, FrechetSandwich) { expect_ok(checks::frechet_sandwich(kSeed)); }
TEST(CopulaProperties, LipschitzBound) { expect_ok(checks::lipschitz_bound(kSeed)); }
TEST(CopulaProperties, MonotoneInEachArgument) { expect_ok(checks::monotone_in_each_argument(kSeed)); }
TEST(CopulaProperties, TwoIncreasingOnRandomGrids) { expect_ok(checks::two_increasing_grids(kSeed)); }
TEST(CopulaProperties, RoundTripThroughTailIntegral) { expect_ok(checks::plc_round_trip(kSeed)); }
TEST(CopulaProperties, PartialMatchesFiniteDifference) { expect_ok(checks::partial_vs_finite_difference(kSeed)); }

TEST(StepTailProperties, GeneralizedInverseLaws) { expect_ok(checks::generalized_inverse_laws(kSeed)); }

TEST(CountingProperties, DominanceCountMatchesRecount) { expect_ok(checks::counting_oracle(kSeed)); }
TEST(CountingProperties, AsynchronousCountMatchesBruteForce) { expect_ok(checks::async_counting_oracle(kSeed)); }
TEST(CountingProperties, SynchronousGridsCollapseToUn) { expect_ok(checks::synchronous_collapse(kSeed)); }

TEST(Reproducibility, SeedDeterminism) { expect_ok(checks::seed_determinism(kSeed)); }
TEST(Reproducibility, ParallelInvariance) { expect_ok(checks::parallel_invariance(kSeed)); }

// A second seed for the cheap suites, so one lucky stream cannot hide a bug.
TEST(CopulaProperties, SandwichAndLipschitzSecondSeed) {
    expect_ok(checks::frechet_sandwich(kSeed + 1));
    expect_ok(checks::lipschitz_bound(kSeed + 1));
}

}  // namespace
