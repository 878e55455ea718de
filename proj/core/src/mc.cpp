#include "plc/mc.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "plc/errors.hpp"
#include "plc/estimators.hpp"
#include "plc/normal.hpp"
#include "plc/rng.hpp"
#include "plc/sim.hpp"

namespace plc {

namespace {

template <class E, std::size_t N>
E parse_name(std::string_view s, const std::pair<E, std::string_view> (&table)[N], const char* what) {
    for (const auto& [e, name] : table)
        if (name == s) return e;
    throw ParameterError(std::string("unknown ") + what + " '" + std::string(s) + "'");
}

template <class E, std::size_t N>
std::string_view name_of(E e, const std::pair<E, std::string_view> (&table)[N]) {
    for (const auto& [v, name] : table)
        if (v == e) return name;
    return "?";
}

constexpr std::pair<Design, std::string_view> kDesigns[] = {
    {Design::pure_subordinator, "pure-subordinator"},
    {Design::subordinator_plus_brownian, "subordinator-plus-brownian"},
};
constexpr std::pair<EstimatorKind, std::string_view> kEstimators[] = {
    {EstimatorKind::U_n, "U_n"},   {EstimatorKind::gamma_hat, "gamma_hat"}, {EstimatorKind::gamma_tilde, "gamma_tilde"},
    {EstimatorKind::V_n, "V_n"},   {EstimatorKind::W_n, "W_n"},             {EstimatorKind::truth, "truth"},
};
constexpr std::pair<SchemeKind, std::string_view> kSchemes[] = {
    {SchemeKind::equidistant, "equidistant"},
    {SchemeKind::irregular, "irregular"},
    {SchemeKind::asynchronous, "asynchronous"},
};

bool is_copula_estimator(EstimatorKind e) {
    return e == EstimatorKind::gamma_hat || e == EstimatorKind::gamma_tilde;
}

// Uniform(Δ/2, 3Δ/2) spacings; the last point is pulled back to k_n.
std::vector<double> random_grid(double k_n, double delta, CounterRng rng) {
    std::vector<double> t;
    t.reserve(static_cast<std::size_t>(k_n / delta) + 2);
    double now = 0.0;
    for (;;) {
        now += delta * (0.5 + rng.uniform());
        if (now >= k_n) {
            t.push_back(k_n);
            return t;
        }
        t.push_back(now);
    }
}

}  // namespace

std::string_view to_string(Design d) { return name_of(d, kDesigns); }
std::string_view to_string(EstimatorKind e) { return name_of(e, kEstimators); }
std::string_view to_string(SchemeKind s) { return name_of(s, kSchemes); }
Design parse_design(std::string_view s) { return parse_name(s, kDesigns, "design"); }
EstimatorKind parse_estimator(std::string_view s) { return parse_name(s, kEstimators, "estimator"); }
SchemeKind parse_scheme_kind(std::string_view s) { return parse_name(s, kSchemes, "scheme"); }

SchemeKind default_scheme(EstimatorKind e) {
    switch (e) {
        case EstimatorKind::V_n: return SchemeKind::irregular;
        case EstimatorKind::W_n: return SchemeKind::asynchronous;
        default: return SchemeKind::equidistant;
    }
}

void ExperimentSpec::validate() const {
    if (n == 0) throw ParameterError("experiment: n must be positive");
    if (!(k_n > 0.0) || !std::isfinite(k_n)) throw ParameterError("experiment: k_n must be positive");
    if (reps < 2) throw ParameterError("experiment: reps must be at least 2");
    if (eval_points.empty()) throw ParameterError("experiment: no evaluation points");
    if (!(eps > 0.0)) throw ParameterError("experiment: eps must be positive");
    if (!(brownian_variance >= 0.0)) throw ParameterError("experiment: negative Brownian variance");
    for (const auto& [a, b] : cov_pairs)
        if (a >= eval_points.size() || b >= eval_points.size())
            throw ParameterError("experiment: covariance pair index out of range");

    switch (estimator) {
        case EstimatorKind::U_n:
            if (scheme != SchemeKind::equidistant) throw ContractError("U_n requires an equidistant scheme");
            break;
        case EstimatorKind::V_n:
            if (scheme != SchemeKind::irregular) throw ContractError("V_n requires an irregular scheme");
            break;
        case EstimatorKind::W_n:
            if (scheme != SchemeKind::asynchronous) throw ContractError("W_n requires an asynchronous scheme");
            break;
        case EstimatorKind::gamma_hat:
        case EstimatorKind::gamma_tilde:
            if (scheme == SchemeKind::asynchronous)
                throw ContractError("copula estimators require a synchronous scheme");
            break;
        case EstimatorKind::truth: break;
    }

    for (const Point& p : eval_points) {
        if (is_copula_estimator(estimator) && !(p.x1 > 0.0 && p.x2 > 0.0))
            throw ParameterError("experiment: copula evaluation points must lie in (0,∞]²");
        try {
            (void)experiment_target(*this, p);
        } catch (const DomainError& e) {
            throw ParameterError(std::string("experiment: evaluation point outside the domain: ") + e.what());
        }
    }
}

double experiment_target(const ExperimentSpec& spec, const Point& x) {
    return is_copula_estimator(spec.estimator) ? spec.model.copula(x) : tail_from_copula(spec.model, x);
}

SamplingScheme experiment_scheme(const ExperimentSpec& spec, std::uint64_t replication) {
    const double delta = spec.delta();
    switch (spec.scheme) {
        case SchemeKind::equidistant: return SamplingScheme::equidistant(spec.n, delta);
        case SchemeKind::irregular:
            return SamplingScheme::irregular(
                random_grid(spec.k_n, delta, make_rng(spec.master_seed, replication, Stream::scheme_first)));
        case SchemeKind::asynchronous:
            return SamplingScheme::asynchronous(
                random_grid(spec.k_n, delta, make_rng(spec.master_seed, replication, Stream::scheme_first)),
                random_grid(spec.k_n, delta, make_rng(spec.master_seed, replication, Stream::scheme_second)));
    }
    throw ContractError("experiment_scheme: unknown scheme kind");
}

std::vector<double> run_replication(const ExperimentSpec& spec, std::uint64_t replication) {
    std::vector<double> out;
    out.reserve(spec.eval_points.size());
    if (spec.estimator == EstimatorKind::truth) {
        for (const Point& p : spec.eval_points) out.push_back(experiment_target(spec, p));
        return out;
    }

    const SamplingScheme scheme = experiment_scheme(spec, replication);
    ProcessConfig config;
    config.model = spec.model;
    if (spec.design == Design::subordinator_plus_brownian)
        config.brownian_variances = {spec.brownian_variance, spec.brownian_variance};
    config.eps = spec.eps;
    config.horizon = scheme.horizon();
    config.seed = spec.master_seed;
    const IncrementSeries series = sample_path_increments(config, scheme, replication);

    const EmpiricalTail tail =
        spec.estimator == EstimatorKind::W_n ? empirical_tail_async(series) : empirical_tail(series);
    for (const Point& p : spec.eval_points) {
        switch (spec.estimator) {
            case EstimatorKind::gamma_hat: out.push_back(empirical_plc(tail, p)); break;
            case EstimatorKind::gamma_tilde: out.push_back(oracle_plc(tail, spec.model.margins, p)); break;
            default: out.push_back(tail(p)); break;
        }
    }
    return out;
}

double sample_covariance(std::span<const double> a, std::span<const double> b) {
    if (a.size() != b.size()) throw ContractError("sample_covariance: size mismatch");
    if (a.size() < 2) throw ParameterError("sample_covariance: need at least two values");
    const double n = static_cast<double>(a.size());
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= n;
    mb /= n;
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - ma) * (b[i] - mb);
    return s / (n - 1.0);
}

McReport run_experiment(const ExperimentSpec& spec, unsigned threads) {
    spec.validate();
    const std::size_t reps = spec.reps;
    const std::size_t points = spec.eval_points.size();

    McReport report;
    report.spec = spec;
    for (const Point& p : spec.eval_points) report.truth.push_back(experiment_target(spec, p));

    std::vector<std::vector<double>> by_rep(reps);
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::size_t>(threads, reps));

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (;;) {
            const std::size_t r = next.fetch_add(1);
            if (r >= reps) return;
            try {
                by_rep[r] = run_replication(spec, r);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                next.store(reps);
                return;
            }
        }
    };
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    const double root_k = std::sqrt(spec.k_n);
    const double nr = static_cast<double>(reps);
    report.replicates.assign(points, std::vector<double>(reps));
    for (std::size_t r = 0; r < reps; ++r)
        for (std::size_t i = 0; i < points; ++i)
            report.replicates[i][r] = root_k * (by_rep[r][i] - report.truth[i]);

    for (const auto& z : report.replicates) {
        double mean = 0.0;
        for (double v : z) mean += v;
        mean /= nr;
        double m2 = 0.0, m4 = 0.0;
        for (double v : z) {
            const double d = (v - mean) * (v - mean);
            m2 += d;
            m4 += d * d;
        }
        const double var = m2 / (nr - 1.0);
        report.bias.push_back(mean);
        report.variance.push_back(var);
        report.bias_se.push_back(std::sqrt(var / nr));
        const double mu2 = m2 / nr;
        report.variance_se.push_back(std::sqrt(std::max(0.0, m4 / nr - mu2 * mu2) / nr));
    }
    for (const auto& [a, b] : spec.cov_pairs)
        report.covariances.push_back({a, b, sample_covariance(report.replicates[a], report.replicates[b])});
    return report;
}

QqData qq_data(std::span<const double> replicates) {
    const std::size_t n = replicates.size();
    if (n < 30) throw ParameterError("qq_data: at least 30 replicates required");
    const double nn = static_cast<double>(n);
    double mean = 0.0;
    for (double v : replicates) mean += v;
    mean /= nn;
    double ss = 0.0;
    for (double v : replicates) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / (nn - 1.0));
    if (!(sd > 0.0)) throw DegenerateDataError("qq_data: zero sample standard deviation");

    std::vector<double> z(replicates.begin(), replicates.end());
    for (double& v : z) v = (v - mean) / sd;
    std::sort(z.begin(), z.end());

    QqData out;
    out.pairs.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        out.pairs.emplace_back(normal_quantile((static_cast<double>(i) + 0.5) / nn), z[i]);
    out.ks_distance = ks_distance_normal(z);
    return out;
}

QqData qq_data(const McReport& report, std::size_t point) {
    if (point >= report.replicates.size()) throw ParameterError("qq_data: evaluation point index out of range");
    return qq_data(report.replicates[point]);
}

std::vector<Point> standard_points() { return {{2.0, 2.0}, {1.0, 1.0}, {0.5, 0.5}}; }

std::vector<std::pair<std::size_t, std::size_t>> standard_pairs() { return {{0, 2}, {0, 1}, {1, 2}}; }

std::vector<PresetRow> table_preset(int table, std::size_t reps, std::uint64_t seed) {
    auto base = [&](EstimatorKind e, Design d, std::size_t n, double k_n) {
        ExperimentSpec s;
        s.design = d;
        s.n = n;
        s.k_n = k_n;
        s.reps = reps;
        s.eval_points = standard_points();
        s.cov_pairs = standard_pairs();
        s.estimator = e;
        s.scheme = default_scheme(e);
        s.master_seed = seed;
        return s;
    };

    std::vector<PresetRow> rows;
    switch (table) {
        case 1:
        case 2: {
            const EstimatorKind e = table == 1 ? EstimatorKind::U_n : EstimatorKind::gamma_hat;
            for (Design d : {Design::pure_subordinator, Design::subordinator_plus_brownian})
                for (double k : {50.0, 75.0, 100.0, 150.0, 250.0})
                    rows.push_back({std::string(to_string(d)), k, base(e, d, 22500, k)});
            break;
        }
        case 3:
            for (int k : {50, 100, 150, 200})
                for (int inv_delta : {50, 100, 150, 200})
                    rows.push_back({"k_n=" + std::to_string(k), static_cast<double>(inv_delta),
                                    base(EstimatorKind::U_n, Design::pure_subordinator,
                                         static_cast<std::size_t>(k * inv_delta), static_cast<double>(k))});
            break;
        default: throw ParameterError("table_preset: table must be 1, 2 or 3");
    }
    return rows;
}

}  // namespace plc
