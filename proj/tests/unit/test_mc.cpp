#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include <plc/errors.hpp>
#include <plc/mc.hpp>
#include <plc/normal.hpp>

using namespace plc;

namespace {

ExperimentSpec small_spec(EstimatorKind e) {
    ExperimentSpec s;
    s.n = 2000;
    s.k_n = 20;
    s.reps = 40;
    s.estimator = e;
    s.scheme = default_scheme(e);
    s.eval_points = standard_points();
    s.cov_pairs = standard_pairs();
    s.master_seed = 5;
    return s;
}

}  // namespace

TEST(Normal, QuantileAccuracy) {
    EXPECT_EQ(normal_quantile(0.5), 0.0);
    EXPECT_NEAR(normal_quantile(0.975), 1.959963984540054, 1e-12);
    EXPECT_NEAR(normal_quantile(0.025), -1.959963984540054, 1e-12);
    EXPECT_NEAR(normal_quantile(1e-10), -6.361340902404056, 1e-9);
    for (double p = 1e-6; p < 1.0; p += 0.0137) EXPECT_NEAR(normal_cdf(normal_quantile(p)), p, 1e-9 * std::max(p, 1e-3));
    EXPECT_THROW(normal_quantile(0.0), DomainError);
    EXPECT_THROW(normal_quantile(1.0), DomainError);
    EXPECT_NEAR(normal_cdf(0.0), 0.5, 1e-16);
}

TEST(Normal, KsCriticalValueAndDistance) {
    EXPECT_NEAR(ks_critical_value(500), 1.3581 / std::sqrt(500.0), 1e-4);
    const std::vector<double> one{0.0};
    EXPECT_NEAR(ks_distance_normal(one), 0.5, 1e-15);
    std::mt19937_64 g(3);
    std::normal_distribution<double> z;
    std::vector<double> v(2000);
    for (double& x : v) x = z(g);
    std::sort(v.begin(), v.end());
    EXPECT_LT(ks_distance_normal(v), ks_critical_value(v.size()));
    for (double& x : v) x += 0.5;
    EXPECT_GT(ks_distance_normal(v), ks_critical_value(v.size()));
}

TEST(Mc, Names) {
    for (auto e : {EstimatorKind::U_n, EstimatorKind::gamma_hat, EstimatorKind::gamma_tilde, EstimatorKind::V_n,
                   EstimatorKind::W_n, EstimatorKind::truth})
        EXPECT_EQ(parse_estimator(to_string(e)), e);
    for (auto d : {Design::pure_subordinator, Design::subordinator_plus_brownian}) EXPECT_EQ(parse_design(to_string(d)), d);
    for (auto s : {SchemeKind::equidistant, SchemeKind::irregular, SchemeKind::asynchronous})
        EXPECT_EQ(parse_scheme_kind(to_string(s)), s);
    EXPECT_THROW(parse_estimator("nope"), ParameterError);
    EXPECT_EQ(default_scheme(EstimatorKind::V_n), SchemeKind::irregular);
    EXPECT_EQ(default_scheme(EstimatorKind::W_n), SchemeKind::asynchronous);
    EXPECT_EQ(default_scheme(EstimatorKind::gamma_hat), SchemeKind::equidistant);
}

TEST(Mc, ValidateErrors) {
    auto s = small_spec(EstimatorKind::U_n);
    s.scheme = SchemeKind::irregular;
    EXPECT_THROW(s.validate(), ContractError);
    s = small_spec(EstimatorKind::gamma_hat);
    s.scheme = SchemeKind::asynchronous;
    EXPECT_THROW(s.validate(), ContractError);
    s = small_spec(EstimatorKind::U_n);
    s.reps = 1;
    EXPECT_THROW(s.validate(), ParameterError);
    s = small_spec(EstimatorKind::U_n);
    s.cov_pairs = {{0, 3}};
    EXPECT_THROW(s.validate(), ParameterError);
    s = small_spec(EstimatorKind::gamma_hat);
    s.eval_points = {{0.0, 1.0}};
    EXPECT_THROW(s.validate(), ParameterError);
    s = small_spec(EstimatorKind::U_n);
    s.n = 0;
    EXPECT_THROW(run_experiment(s), ParameterError);
}

TEST(Mc, TruthEstimatorHasNoError) {
    auto s = small_spec(EstimatorKind::truth);
    const auto r = run_experiment(s, 1);
    for (std::size_t i = 0; i < 3; ++i) {
        EXPECT_EQ(r.bias[i], 0.0);
        EXPECT_EQ(r.variance[i], 0.0);
        EXPECT_NEAR(r.truth[i], experiment_target(s, s.eval_points[i]), 1e-15);
    }
    for (const auto& c : r.covariances) EXPECT_EQ(c.value, 0.0);
    EXPECT_THROW(qq_data(r, 0), DegenerateDataError);
}

TEST(Mc, TargetsMatchModel) {
    auto s = small_spec(EstimatorKind::U_n);
    EXPECT_NEAR(experiment_target(s, {1, 1}), tail_from_copula(s.model, {1, 1}), 1e-15);
    s = small_spec(EstimatorKind::gamma_hat);
    EXPECT_NEAR(experiment_target(s, {1, 1}), 0.25, 1e-15);
}

TEST(Mc, IrregularSchemeSpacings) {
    const auto s = small_spec(EstimatorKind::V_n);
    const double d = s.delta();
    for (std::uint64_t r = 0; r < 5; ++r) {
        const auto t = experiment_scheme(s, r).times(Axis::first);
        EXPECT_EQ(t.back(), s.k_n);
        for (std::size_t j = 0; j + 1 < t.size(); ++j) {
            const double gap = t[j] - (j ? t[j - 1] : 0.0);
            EXPECT_GT(gap, d / 2 - 1e-12);
            EXPECT_LT(gap, 1.5 * d + 1e-12);
        }
    }
    const auto a = experiment_scheme(small_spec(EstimatorKind::W_n), 0);
    EXPECT_FALSE(a.is_synchronous());
    EXPECT_NE(a.times(Axis::first), a.times(Axis::second));
}

TEST(Mc, ReportShapeAndMoments) {
    const auto s = small_spec(EstimatorKind::U_n);
    const auto r = run_experiment(s, 2);
    ASSERT_EQ(r.replicates.size(), 3u);
    ASSERT_EQ(r.covariances.size(), 3u);
    for (std::size_t i = 0; i < 3; ++i) {
        ASSERT_EQ(r.replicates[i].size(), s.reps);
        double m = 0;
        for (double x : r.replicates[i]) m += x;
        EXPECT_NEAR(r.bias[i], m / s.reps, 1e-12);
        EXPECT_NEAR(r.variance[i], sample_covariance(r.replicates[i], r.replicates[i]), 1e-12);
        EXPECT_NEAR(r.bias_se[i], std::sqrt(r.variance[i] / s.reps), 1e-12);
    }
    const auto& c = r.covariances[1];
    EXPECT_NEAR(c.value, sample_covariance(r.replicates[c.first], r.replicates[c.second]), 1e-12);
    // replicates are √k (estimate - truth)
    const auto est = run_replication(s, 7);
    for (std::size_t i = 0; i < 3; ++i)
        EXPECT_NEAR(r.replicates[i][7], std::sqrt(s.k_n) * (est[i] - r.truth[i]), 1e-12);
}

TEST(Mc, SampleCovarianceErrors) {
    const std::vector<double> a{1, 2, 3}, b{1, 2};
    EXPECT_THROW(sample_covariance(a, b), ContractError);
    EXPECT_THROW(sample_covariance(std::vector<double>{1}, std::vector<double>{1}), ParameterError);
    EXPECT_DOUBLE_EQ(sample_covariance(a, a), 1.0);
}

TEST(Qq, StandardizedAndPairedWithQuantiles) {
    std::mt19937_64 g(8);
    std::normal_distribution<double> z(3.0, 2.0);
    std::vector<double> v(400);
    for (double& x : v) x = z(g);
    const auto q = qq_data(v);
    ASSERT_EQ(q.pairs.size(), v.size());
    double m = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        EXPECT_NEAR(q.pairs[i].first, normal_quantile((i + 0.5) / v.size()), 1e-12);
        if (i) {
            EXPECT_LE(q.pairs[i - 1].second, q.pairs[i].second);
        }
        m += q.pairs[i].second;
    }
    EXPECT_NEAR(m, 0.0, 1e-9);
    EXPECT_LT(q.ks_distance, ks_critical_value(v.size()));
    EXPECT_THROW(qq_data(std::vector<double>(29, 1.0)), ParameterError);
    EXPECT_THROW(qq_data(std::vector<double>(30, 1.0)), DegenerateDataError);
}

TEST(Presets, Tables) {
    const auto t1 = table_preset(1, 10, 4);
    ASSERT_EQ(t1.size(), 10u);
    EXPECT_EQ(t1[0].block, "pure-subordinator");
    EXPECT_EQ(t1[5].block, "subordinator-plus-brownian");
    EXPECT_EQ(t1[2].key, 100.0);
    EXPECT_EQ(t1[2].spec.n, 22500u);
    EXPECT_EQ(t1[2].spec.reps, 10u);
    EXPECT_EQ(t1[2].spec.master_seed, 4u);
    EXPECT_EQ(table_preset(2, 10, 4)[0].spec.estimator, EstimatorKind::gamma_hat);
    const auto t3 = table_preset(3, 10, 4);
    ASSERT_EQ(t3.size(), 16u);
    EXPECT_EQ(t3[5].block, "k_n=100");
    EXPECT_EQ(t3[5].key, 100.0);
    EXPECT_EQ(t3[5].spec.n, 10000u);
    EXPECT_NEAR(t3[5].spec.delta(), 0.01, 1e-15);
    for (const auto& r : t3) EXPECT_NO_THROW(r.spec.validate());
    EXPECT_THROW(table_preset(4, 10, 4), ParameterError);
}
