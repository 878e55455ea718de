#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "plc/models.hpp"
#include "plc/schemes.hpp"

namespace plc {

enum class Design { pure_subordinator, subordinator_plus_brownian };

/// `truth` plugs the analytic tail integral in as the estimate; it exists to
/// check the harness itself and must give zero bias and variance.
enum class EstimatorKind { U_n, gamma_hat, gamma_tilde, V_n, W_n, truth };

/// equidistant: n points with Δ = k_n/n.
/// irregular: i.i.d. Uniform(Δ/2, 3Δ/2) spacings, truncated at k_n.
/// asynchronous: two independent irregular grids of the same kind.
enum class SchemeKind { equidistant, irregular, asynchronous };

std::string_view to_string(Design d);
std::string_view to_string(EstimatorKind e);
std::string_view to_string(SchemeKind s);
Design parse_design(std::string_view s);
EstimatorKind parse_estimator(std::string_view s);
SchemeKind parse_scheme_kind(std::string_view s);

/// The scheme an estimator is naturally paired with.
SchemeKind default_scheme(EstimatorKind e);

struct ExperimentSpec {
    Design design = Design::pure_subordinator;
    std::size_t n = 22500;
    double k_n = 100.0;
    std::size_t reps = 500;
    std::vector<Point> eval_points;
    EstimatorKind estimator = EstimatorKind::U_n;
    SchemeKind scheme = SchemeKind::equidistant;
    std::uint64_t master_seed = 1;
    ParetoLevyModel model = ParetoLevyModel::reference();
    double brownian_variance = 0.5;  // per unit time, used by the Brownian design
    double eps = 1e-4;               // simulation truncation
    std::vector<std::pair<std::size_t, std::size_t>> cov_pairs;  // indices into eval_points

    double delta() const { return k_n / static_cast<double>(n); }

    /// ParameterError for invalid sizes, reps < 2, points outside the
    /// estimand's domain or bad pair indices. ContractError when the
    /// estimator cannot be applied to the scheme.
    void validate() const;
};

/// The estimand at x: U(x) for the tail estimators and Γ(x) for the copula
/// estimators.
double experiment_target(const ExperimentSpec& spec, const Point& x);

/// The observation scheme of one replication.
SamplingScheme experiment_scheme(const ExperimentSpec& spec, std::uint64_t replication);

/// Estimates at every evaluation point for one replication, unscaled.
std::vector<double> run_replication(const ExperimentSpec& spec, std::uint64_t replication);

struct PairCovariance {
    std::size_t first;
    std::size_t second;
    double value;
};

struct McReport {
    ExperimentSpec spec;
    std::vector<double> truth;
    // Moments of √k_n (estimate − truth), one entry per evaluation point.
    std::vector<double> bias;
    std::vector<double> variance;  // unbiased, divisor reps − 1
    std::vector<double> bias_se;
    std::vector<double> variance_se;
    std::vector<PairCovariance> covariances;
    std::vector<std::vector<double>> replicates;  // [point][replication]
};

/// threads = 0 uses the hardware concurrency. The report does not depend
/// on the number of threads.
McReport run_experiment(const ExperimentSpec& spec, unsigned threads = 0);

/// Covariance of two replicate vectors, divisor size − 1.
double sample_covariance(std::span<const double> a, std::span<const double> b);

struct QqData {
    std::vector<std::pair<double, double>> pairs;  // (normal quantile, standardized order statistic)
    double ks_distance = 0.0;
};

/// Replicates centred at their sample mean and divided by their sample
/// standard deviation, sorted, and paired with Φ⁻¹((i − 0.5)/reps).
/// ParameterError when reps < 30, DegenerateDataError when the standard
/// deviation is zero.
QqData qq_data(std::span<const double> replicates);
QqData qq_data(const McReport& report, std::size_t point);

/// Evaluation points (2,2), (1,1), (0.5,0.5) with the covariance pairs
/// (2,2)&(0.5,0.5), (2,2)&(1,1), (1,1)&(0.5,0.5).
std::vector<Point> standard_points();
std::vector<std::pair<std::size_t, std::size_t>> standard_pairs();

struct PresetRow {
    std::string block;  // e.g. "pure-subordinator" or "k_n=100"
    double key;         // k_n, or Δ⁻¹ for the fixed-k_n table
    ExperimentSpec spec;
};

/// Rows of the three simulation tables:
///  1: U_n, both designs, k_n ∈ {50, 75, 100, 150, 250}, n = 22500;
///  2: Γ̂_n with the same layout;
///  3: U_n, pure subordinator, k_n × Δ⁻¹ ∈ {50, 100, 150, 200}², n = k_n Δ⁻¹.
/// ParameterError for any other table number.
std::vector<PresetRow> table_preset(int table, std::size_t reps, std::uint64_t seed);

}  // namespace plc
