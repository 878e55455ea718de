// plc: simulate, estimate and run Monte Carlo checks for Pareto–Lévy copula
// estimators from the command line. Every command is a thin wrapper around
// the plc::core library.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <plc/asymptotics.hpp>
#include <plc/errors.hpp>
#include <plc/mc.hpp>
#include <plc/normal.hpp>
#include <plc/pipeline.hpp>
#include <plc/serialize.hpp>
#include <plc/sim.hpp>
#include <plc/tick_data.hpp>

namespace fs = std::filesystem;

namespace {

constexpr int kUsage = 2;

struct Globals {
    std::uint64_t seed = 1;
    unsigned threads = 0;
    std::string out_dir = ".";
};

fs::path out_path(const Globals& g, const std::string& name) {
    fs::create_directories(g.out_dir);
    return fs::path(g.out_dir) / name;
}

std::ofstream open_out(const fs::path& p) {
    std::ofstream f(p);
    if (!f) throw plc::IoError("cannot write " + p.string());
    return f;
}

plc::ParetoLevyModel make_model(const std::string& copula, double theta) {
    plc::ParetoLevyModel m = plc::ParetoLevyModel::reference();
    if (copula == "clayton")
        m.copula = plc::ParetoLevyCopula::clayton(theta);
    else if (copula == "comonotone")
        m.copula = plc::ParetoLevyCopula::comonotone();
    else if (copula == "independence")
        m.copula = plc::ParetoLevyCopula::independence();
    else
        throw plc::ParameterError("unknown copula '" + copula + "'");
    return m;
}

std::vector<plc::Point> parse_points(const std::vector<std::string>& items) {
    std::vector<plc::Point> out;
    for (const auto& s : items) {
        const auto comma = s.find(',');
        if (comma == std::string::npos) throw plc::ParameterError("point '" + s + "' is not of the form x1,x2");
        try {
            out.push_back({std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1))});
        } catch (const std::logic_error&) {
            throw plc::ParameterError("point '" + s + "' is not numeric");
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Nonparametric estimation of Lévy tail integrals and Pareto–Lévy copulas"};
    app.require_subcommand(1);
    app.fallthrough();
    app.footer("Real data: estimate needs --k-n, the sample length in the time unit of the limit theory. "
               "For one-minute prices k_n = 62 days has worked as a bias/variance trade-off; treat it as a "
               "starting point, not a default.");
    Globals g;
    app.add_option("--seed", g.seed, "Master seed")->capture_default_str();
    app.add_option("--threads", g.threads, "Worker threads for Monte Carlo (0 = all cores)")->capture_default_str();
    app.add_option("--out-dir", g.out_dir, "Directory for output files")->capture_default_str();

    // simulate
    auto* sim = app.add_subcommand("simulate", "Simulate a bivariate path and write log prices as CSV");
    std::size_t sim_n = 22500;
    double sim_k = 100.0, sim_theta = 0.5, sim_eps = 1e-4, sim_var = 0.0;
    std::string sim_scheme = "equidistant", sim_copula = "clayton", sim_file = "simulated.csv";
    std::uint64_t sim_rep = 0;
    sim->add_option("--n", sim_n, "Observations (mean count for random schemes)")->capture_default_str();
    sim->add_option("--k-n", sim_k, "Time horizon k_n")->capture_default_str();
    sim->add_option("--scheme", sim_scheme, "equidistant | irregular | asynchronous")->capture_default_str();
    sim->add_option("--copula", sim_copula, "clayton | comonotone | independence")->capture_default_str();
    sim->add_option("--theta", sim_theta, "Clayton parameter")->capture_default_str();
    sim->add_option("--brownian-variance", sim_var, "Variance per unit time of each Brownian component")
        ->capture_default_str();
    sim->add_option("--eps", sim_eps, "Jump truncation level")->capture_default_str();
    sim->add_option("--replication", sim_rep, "Replication index")->capture_default_str();
    sim->add_option("--output", sim_file, "File name inside --out-dir")->capture_default_str();

    // estimate
    auto* est = app.add_subcommand("estimate", "Estimate the Pareto–Lévy copula from tick data");
    std::string est_input, est_mode = "sync";
    double est_k = 0.0, est_lo = 0.05, est_hi = 1.5;
    std::size_t est_points = 30;
    est->add_option("--input", est_input, "CSV with header timestamp,price1,price2")->required();
    est->add_option("--k-n", est_k,
                    "Time span in units of the limit theory (e.g. trading days). Required; on one-minute data "
                    "k_n = 62 has been a reasonable bias/variance trade-off, use it as a heuristic only")
        ->required();
    est->add_option("--mode", est_mode, "sync | async")->capture_default_str();
    est->add_option("--grid-lo", est_lo, "Lower end of the u grid")->capture_default_str();
    est->add_option("--grid-hi", est_hi, "Upper end of the u grid")->capture_default_str();
    est->add_option("--grid-points", est_points, "Grid points per axis")->capture_default_str();

    // mc-table
    auto* tab = app.add_subcommand("mc-table", "Reproduce a simulation table (1, 2 or 3)");
    int tab_id = 1;
    std::size_t tab_reps = 500;
    tab->add_option("table", tab_id, "Table number")->required()->check(CLI::IsMember({1, 2, 3}));
    tab->add_option("--reps", tab_reps, "Replications per row")->capture_default_str();

    // qq
    auto* qq = app.add_subcommand("qq", "QQ data and KS distance of standardized replicates");
    std::string qq_est = "gamma_hat", qq_design = "pure-subordinator";
    std::size_t qq_n = 22500, qq_reps = 500;
    double qq_k = 75.0;
    std::vector<std::string> qq_points;
    qq->add_option("--estimator", qq_est, "U_n | gamma_hat | gamma_tilde | V_n | W_n")->capture_default_str();
    qq->add_option("--design", qq_design, "pure-subordinator | subordinator-plus-brownian")->capture_default_str();
    qq->add_option("--n", qq_n)->capture_default_str();
    qq->add_option("--k-n", qq_k)->capture_default_str();
    qq->add_option("--reps", qq_reps)->capture_default_str();
    qq->add_option("--point", qq_points, "Evaluation point x1,x2 (repeatable; default 2,2 1,1 0.5,0.5)");

    // efficiency
    auto* eff = app.add_subcommand("efficiency", "Var G / Var G~ and the efficiency condition on a grid");
    double eff_theta = 0.5, eff_lo = 0.05, eff_hi = 1.5;
    std::size_t eff_points = 30;
    eff->add_option("--theta", eff_theta, "Clayton parameter")->capture_default_str();
    eff->add_option("--grid-lo", eff_lo)->capture_default_str();
    eff->add_option("--grid-hi", eff_hi)->capture_default_str();
    eff->add_option("--grid-points", eff_points)->capture_default_str();

    // diagnose-scheme
    auto* diag = app.add_subcommand("diagnose-scheme", "Finite-n statistics of a sampling scheme (JSON on stdout)");
    std::string diag_file;
    std::size_t diag_n = 22500;
    double diag_k = 100.0;
    std::optional<double> diag_beta, diag_delta;
    diag->add_option("--scheme", diag_file, "Scheme JSON file; default is an equidistant grid");
    diag->add_option("--n", diag_n)->capture_default_str();
    diag->add_option("--k-n", diag_k)->capture_default_str();
    diag->add_option("--beta", diag_beta, "Jump activity index for the asynchronous statistic");
    diag->add_option("--delta", diag_delta, "Exponent slack δ");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsage;
    }

    try {
        if (*sim) {
            plc::ExperimentSpec spec;
            spec.n = sim_n;
            spec.k_n = sim_k;
            spec.scheme = plc::parse_scheme_kind(sim_scheme);
            spec.master_seed = g.seed;
            if (!(sim_k > 0.0) || sim_n == 0) throw plc::ParameterError("simulate: n and k_n must be positive");
            const plc::SamplingScheme scheme = plc::experiment_scheme(spec, sim_rep);
            plc::ProcessConfig config;
            config.model = make_model(sim_copula, sim_theta);
            config.brownian_variances = {sim_var, sim_var};
            config.eps = sim_eps;
            config.horizon = scheme.horizon();
            config.seed = g.seed;
            const auto series = plc::sample_path_increments(config, scheme, sim_rep);
            const fs::path p = out_path(g, sim_file);
            plc::write_table(p, plc::series_to_table(series));
            std::cout << p.string() << '\n';
        } else if (*est) {
            if (!(est_k > 0.0)) throw plc::ParameterError("estimate: k_n must be positive");
            if (est_mode != "sync" && est_mode != "async")
                throw plc::ParameterError("estimate: mode must be sync or async");
            plc::EstimateOptions opt;
            opt.grid1 = opt.grid2 = opt.diagonal = plc::linspace(est_lo, est_hi, est_points);
            opt.validate();
            const auto in = plc::ingest(fs::path(est_input));
            std::cerr << "cleaning: " << in.report.summary() << '\n';
            const auto series = plc::to_increments(
                in.table, est_mode == "sync" ? plc::IncrementMode::synchronous : plc::IncrementMode::asynchronous,
                est_k);
            plc::write_estimate(plc::run_estimate(series, opt), g.out_dir);
        } else if (*tab) {
            const auto rows = plc::table_preset(tab_id, tab_reps, g.seed);
            std::vector<plc::McReport> reports;
            nlohmann::json all = nlohmann::json::array();
            for (const auto& row : rows) {
                reports.push_back(plc::run_experiment(row.spec, g.threads));
                nlohmann::json j = plc::report_to_json(reports.back());
                j["block"] = row.block;
                j["key"] = row.key;
                all.push_back(std::move(j));
                std::cerr << row.block << ' ' << row.key << " done\n";
            }
            const std::string stem = "table" + std::to_string(tab_id);
            {
                auto f = open_out(out_path(g, stem + ".csv"));
                plc::write_table_csv(f, rows, reports);
            }
            auto f = open_out(out_path(g, stem + ".json"));
            f << all.dump(2) << '\n';
        } else if (*qq) {
            plc::ExperimentSpec spec;
            spec.estimator = plc::parse_estimator(qq_est);
            spec.scheme = plc::default_scheme(spec.estimator);
            spec.design = plc::parse_design(qq_design);
            spec.n = qq_n;
            spec.k_n = qq_k;
            spec.reps = qq_reps;
            spec.master_seed = g.seed;
            spec.eval_points = qq_points.empty() ? plc::standard_points() : parse_points(qq_points);
            const auto report = plc::run_experiment(spec, g.threads);
            std::cout << "point,ks_distance,critical_0.05\n";
            for (std::size_t i = 0; i < spec.eval_points.size(); ++i) {
                const auto data = plc::qq_data(report, i);
                auto f = open_out(out_path(g, "qq_" + std::to_string(i) + ".csv"));
                plc::write_qq_csv(f, data);
                const auto& p = spec.eval_points[i];
                std::cout << p.x1.to_string() << ';' << p.x2.to_string() << ',' << plc::format_double(data.ks_distance)
                          << ',' << plc::format_double(plc::ks_critical_value(spec.reps)) << '\n';
            }
        } else if (*eff) {
            if (!(eff_theta > 0.0)) throw plc::ParameterError("efficiency: theta must be positive");
            if (!(eff_lo > 0.0)) throw plc::ParameterError("efficiency: grid must be positive");
            const auto grid = plc::linspace(eff_lo, eff_hi, eff_points);
            const plc::ParetoLevyModel model = make_model("clayton", eff_theta);
            auto f = open_out(out_path(g, "efficiency.csv"));
            f << "u1,u2,var_G,var_Gtilde,ratio,condition\n";
            for (double a : grid)
                for (double b : grid) {
                    const plc::Point u{a, b};
                    const double vg = plc::cov_G(model, u, u);
                    const double vt = plc::cov_Gtilde(model, u, u);
                    const plc::Point one[] = {u};
                    const bool ok = plc::check_efficiency_condition(model, one).front().ok();
                    f << plc::format_double(a) << ',' << plc::format_double(b) << ',' << plc::format_double(vg) << ','
                      << plc::format_double(vt) << ',' << plc::format_double(vg / vt) << ',' << (ok ? 1 : 0) << '\n';
                }
        } else if (*diag) {
            std::optional<plc::SamplingScheme> scheme;
            if (!diag_file.empty()) {
                std::ifstream f(diag_file);
                if (!f) throw plc::IoError("cannot open " + diag_file);
                nlohmann::json j;
                try {
                    f >> j;
                } catch (const nlohmann::json::parse_error& e) {
                    throw plc::IoError(std::string("invalid JSON: ") + e.what());
                }
                scheme = plc::scheme_from_json(j);
            } else {
                if (!(diag_k > 0.0) || diag_n == 0) throw plc::ParameterError("diagnose-scheme: n and k_n must be positive");
                scheme = plc::SamplingScheme::equidistant(diag_n, diag_k / static_cast<double>(diag_n));
            }
            std::cout << plc::diagnostics_to_json(plc::diagnostics(*scheme, diag_beta, diag_delta)).dump(2) << '\n';
        }
    } catch (const plc::ParameterError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
