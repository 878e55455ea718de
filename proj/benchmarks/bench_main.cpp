#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include <plc/dominance.hpp>
#include <plc/estimators.hpp>
#include <plc/mc.hpp>
#include <plc/sim.hpp>

namespace {

std::vector<double> draws(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 g(seed);
    std::exponential_distribution<double> e;
    std::vector<double> v(n);
    for (double& x : v) x = e(g);
    return v;
}

void BM_DominanceBuild(benchmark::State& st) {
    const auto a = draws(st.range(0), 1), b = draws(st.range(0), 2);
    for (auto _ : st) benchmark::DoNotOptimize(plc::DominanceCounter(a, b));
    st.SetComplexityN(st.range(0));
}
BENCHMARK(BM_DominanceBuild)->RangeMultiplier(4)->Range(1 << 10, 1 << 18)->Complexity();

void BM_DominanceQuery(benchmark::State& st) {
    const auto a = draws(st.range(0), 1), b = draws(st.range(0), 2);
    const plc::DominanceCounter c(a, b);
    const auto q = draws(1024, 3);
    std::size_t i = 0;
    for (auto _ : st) {
        benchmark::DoNotOptimize(c.count(q[i & 1023], q[(i + 7) & 1023]));
        ++i;
    }
}
BENCHMARK(BM_DominanceQuery)->RangeMultiplier(4)->Range(1 << 10, 1 << 18);

void BM_NaiveQuery(benchmark::State& st) {
    const auto a = draws(st.range(0), 1), b = draws(st.range(0), 2);
    const auto q = draws(1024, 3);
    std::size_t i = 0;
    for (auto _ : st) {
        const double x1 = q[i & 1023], x2 = q[(i + 7) & 1023];
        std::size_t n = 0;
        for (std::size_t j = 0; j < a.size(); ++j) n += a[j] >= x1 && b[j] >= x2;
        benchmark::DoNotOptimize(n);
        ++i;
    }
}
BENCHMARK(BM_NaiveQuery)->RangeMultiplier(4)->Range(1 << 10, 1 << 18);

void BM_SimulateJumps(benchmark::State& st) {
    plc::ProcessConfig c;
    c.horizon = 100;
    std::uint64_t rep = 0;
    for (auto _ : st) benchmark::DoNotOptimize(plc::simulate_jumps(c, rep++));
}
BENCHMARK(BM_SimulateJumps)->Unit(benchmark::kMillisecond);

void BM_EmpiricalTailBuild(benchmark::State& st) {
    plc::ProcessConfig c;
    c.horizon = 100;
    const auto s = plc::sample_path_increments(c, plc::SamplingScheme::equidistant(22500, 100.0 / 22500));
    for (auto _ : st) benchmark::DoNotOptimize(plc::empirical_tail(s));
}
BENCHMARK(BM_EmpiricalTailBuild)->Unit(benchmark::kMillisecond);

void BM_Replication(benchmark::State& st) {
    plc::ExperimentSpec s;
    s.estimator = static_cast<plc::EstimatorKind>(st.range(0));
    s.scheme = plc::default_scheme(s.estimator);
    s.eval_points = plc::standard_points();
    std::uint64_t rep = 0;
    for (auto _ : st) benchmark::DoNotOptimize(plc::run_replication(s, rep++));
}
BENCHMARK(BM_Replication)
    ->Arg(static_cast<int>(plc::EstimatorKind::U_n))
    ->Arg(static_cast<int>(plc::EstimatorKind::gamma_hat))
    ->Arg(static_cast<int>(plc::EstimatorKind::W_n))
    ->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
