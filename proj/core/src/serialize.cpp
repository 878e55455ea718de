#include "plc/serialize.hpp"

#include <ostream>

#include "plc/errors.hpp"
#include "plc/tick_data.hpp"

namespace plc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

std::vector<double> number_array(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) throw ParameterError(std::string("scheme: missing array '") + key + "'");
    std::vector<double> out;
    for (const auto& v : j.at(key)) {
        if (!v.is_number()) throw ParameterError(std::string("scheme: non-numeric entry in '") + key + "'");
        out.push_back(v.get<double>());
    }
    return out;
}

nlohmann::json ext(ExtReal v) {
    if (v.is_finite()) return v.value();
    return v.to_string();
}

std::string point_label(const Point& p) { return p.x1.to_string() + ";" + p.x2.to_string(); }

}  // namespace

nlohmann::json scheme_to_json(const SamplingScheme& scheme) {
    return std::visit(overloaded{
                          [](const Equidistant& e) {
                              return nlohmann::json{{"type", "equidistant"}, {"n", e.n}, {"delta", e.delta}};
                          },
                          [](const Irregular& i) { return nlohmann::json{{"type", "irregular"}, {"times", i.times}}; },
                          [](const Asynchronous& a) {
                              return nlohmann::json{{"type", "asynchronous"}, {"r", a.r}, {"s", a.s}};
                          },
                      },
                      scheme.variant());
}

SamplingScheme scheme_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("type") || !j.at("type").is_string())
        throw ParameterError("scheme: expected an object with a string 'type'");
    const std::string type = j.at("type").get<std::string>();
    if (type == "equidistant") {
        if (!j.contains("n") || !j.at("n").is_number_unsigned() || !j.contains("delta") || !j.at("delta").is_number())
            throw ParameterError("scheme: equidistant needs unsigned 'n' and numeric 'delta'");
        return SamplingScheme::equidistant(j.at("n").get<std::size_t>(), j.at("delta").get<double>());
    }
    if (type == "irregular") return SamplingScheme::irregular(number_array(j, "times"));
    if (type == "asynchronous") return SamplingScheme::asynchronous(number_array(j, "r"), number_array(j, "s"));
    throw ParameterError("scheme: unknown type '" + type + "'");
}

nlohmann::json diagnostics_to_json(const SchemeDiagnostics& d) {
    nlohmann::json j{{"k_n", d.k_n}, {"mesh", d.mesh}, {"m1", d.m1}, {"m2", d.m2}, {"irregular_stat", d.irregular_stat}};
    j["sqrt_k_delta"] = d.sqrt_k_delta ? nlohmann::json(*d.sqrt_k_delta) : nlohmann::json(nullptr);
    j["async_stat"] = d.async_stat ? nlohmann::json(*d.async_stat) : nlohmann::json(nullptr);
    j["semimartingale_stat"] = d.semimartingale_stat ? nlohmann::json(*d.semimartingale_stat) : nlohmann::json(nullptr);
    return j;
}

nlohmann::json spec_to_json(const ExperimentSpec& spec) {
    nlohmann::json points = nlohmann::json::array();
    for (const Point& p : spec.eval_points) points.push_back({ext(p.x1), ext(p.x2)});
    nlohmann::json pairs = nlohmann::json::array();
    for (const auto& [a, b] : spec.cov_pairs) pairs.push_back({a, b});
    return {
        {"design", to_string(spec.design)},
        {"n", spec.n},
        {"k_n", spec.k_n},
        {"delta", spec.delta()},
        {"reps", spec.reps},
        {"estimator", to_string(spec.estimator)},
        {"scheme", to_string(spec.scheme)},
        {"master_seed", spec.master_seed},
        {"model", spec.model.copula.name()},
        {"brownian_variance", spec.brownian_variance},
        {"eps", spec.eps},
        {"eval_points", points},
        {"cov_pairs", pairs},
    };
}

nlohmann::json report_to_json(const McReport& report, bool with_replicates) {
    nlohmann::json points = nlohmann::json::array();
    for (std::size_t i = 0; i < report.truth.size(); ++i) {
        const Point& p = report.spec.eval_points[i];
        nlohmann::json e{
            {"point", {ext(p.x1), ext(p.x2)}},
            {"truth", report.truth[i]},
            {"bias", report.bias[i]},
            {"variance", report.variance[i]},
            {"bias_se", report.bias_se[i]},
            {"variance_se", report.variance_se[i]},
        };
        if (with_replicates) e["replicates"] = report.replicates[i];
        points.push_back(std::move(e));
    }
    nlohmann::json cov = nlohmann::json::array();
    for (const auto& c : report.covariances) cov.push_back({{"first", c.first}, {"second", c.second}, {"value", c.value}});
    return {{"spec", spec_to_json(report.spec)}, {"points", points}, {"covariances", cov}};
}

void write_table_csv(std::ostream& out, std::span<const PresetRow> rows, std::span<const McReport> reports) {
    if (rows.size() != reports.size()) throw ContractError("write_table_csv: rows and reports differ in length");
    if (rows.empty()) return;
    const ExperimentSpec& first = reports.front().spec;
    out << "block,key";
    for (const Point& p : first.eval_points) out << ",bias(" << point_label(p) << "),var(" << point_label(p) << ')';
    for (const auto& [a, b] : first.cov_pairs)
        out << ",cov(" << point_label(first.eval_points[a]) << '&' << point_label(first.eval_points[b]) << ')';
    out << '\n';
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const McReport& rep = reports[r];
        out << rows[r].block << ',' << format_double(rows[r].key);
        for (std::size_t i = 0; i < rep.bias.size(); ++i)
            out << ',' << format_double(rep.bias[i]) << ',' << format_double(rep.variance[i]);
        for (const auto& c : rep.covariances) out << ',' << format_double(c.value);
        out << '\n';
    }
}

void write_qq_csv(std::ostream& out, const QqData& qq) {
    out << "theoretical,sample\n";
    for (const auto& [t, s] : qq.pairs) out << format_double(t) << ',' << format_double(s) << '\n';
}

}  // namespace plc
