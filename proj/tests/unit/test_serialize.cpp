#include <gtest/gtest.h>

#include <sstream>

#include <plc/errors.hpp>
#include <plc/serialize.hpp>

using namespace plc;
using nlohmann::json;

TEST(SchemeJson, RoundTrip) {
    for (const auto& s : {SamplingScheme::equidistant(10, 0.25), SamplingScheme::irregular({0.1, 0.7, 2.0}),
                          SamplingScheme::asynchronous({1, 2}, {0.5, 1.5, 2})}) {
        const json j = scheme_to_json(s);
        const auto back = scheme_from_json(json::parse(j.dump()));
        EXPECT_EQ(back.times(Axis::first), s.times(Axis::first));
        EXPECT_EQ(back.times(Axis::second), s.times(Axis::second));
        EXPECT_EQ(back.variant().index(), s.variant().index());
    }
    EXPECT_EQ(scheme_to_json(SamplingScheme::equidistant(10, 0.25))["type"], "equidistant");
}

TEST(SchemeJson, MalformedDocuments) {
    EXPECT_THROW(scheme_from_json(json::array()), ParameterError);
    EXPECT_THROW(scheme_from_json(json{{"type", "spiral"}}), ParameterError);
    EXPECT_THROW(scheme_from_json(json{{"type", "equidistant"}, {"n", -3}, {"delta", 1}}), ParameterError);
    EXPECT_THROW(scheme_from_json(json{{"type", "irregular"}, {"times", {1, "x"}}}), ParameterError);
    EXPECT_THROW(scheme_from_json(json{{"type", "asynchronous"}, {"r", {1}}}), ParameterError);
    EXPECT_THROW(scheme_from_json(json{{"type", "irregular"}, {"times", {2, 1}}}), ContractError);
}

TEST(DiagnosticsJson, Fields) {
    const json j = diagnostics_to_json(diagnostics(SamplingScheme::irregular({1, 2, 3})));
    EXPECT_EQ(j["k_n"], 3.0);
    EXPECT_TRUE(j["sqrt_k_delta"].is_null());
    EXPECT_TRUE(j["async_stat"].is_null());
    EXPECT_EQ(j["m1"], 3);
}

TEST(ReportJson, CarriesSpecAndMoments) {
    ExperimentSpec s;
    s.n = 100;
    s.k_n = 5;
    s.reps = 4;
    s.estimator = EstimatorKind::truth;
    s.eval_points = {{1.0, kNegInf}, {2.0, 2.0}};
    s.cov_pairs = {{0, 1}};
    const auto r = run_experiment(s, 1);
    const json j = report_to_json(r, true);
    EXPECT_EQ(j["spec"]["estimator"], "truth");
    EXPECT_EQ(j["spec"]["eval_points"][0][1], "-inf");
    EXPECT_EQ(j["points"].size(), 2u);
    EXPECT_EQ(j["points"][1]["replicates"].size(), 4u);
    EXPECT_EQ(j["covariances"][0]["value"], 0.0);
    EXPECT_FALSE(report_to_json(r)["points"][0].contains("replicates"));
}

TEST(TableCsv, Layout) {
    const auto rows = table_preset(1, 2, 1);
    std::vector<McReport> reports(1);
    reports[0].spec = rows[0].spec;
    reports[0].bias = {0.5, 0.25, 0.125};
    reports[0].variance = {1, 2, 3};
    reports[0].covariances = {{0, 2, 0.1}, {0, 1, 0.2}, {1, 2, 0.3}};
    std::ostringstream out;
    write_table_csv(out, std::span(rows).first(1), reports);
    EXPECT_EQ(out.str(),
              "block,key,bias(2;2),var(2;2),bias(1;1),var(1;1),bias(0.5;0.5),var(0.5;0.5),"
              "cov(2;2&0.5;0.5),cov(2;2&1;1),cov(1;1&0.5;0.5)\n"
              "pure-subordinator,50,0.5,1,0.25,2,0.125,3,0.1,0.2,0.3\n");
    EXPECT_THROW(write_table_csv(out, rows, reports), ContractError);
}

TEST(QqCsv, Layout) {
    QqData q;
    q.pairs = {{-1.5, -1.25}, {0.0, 0.5}};
    std::ostringstream out;
    write_qq_csv(out, q);
    EXPECT_EQ(out.str(), "theoretical,sample\n-1.5,-1.25\n0,0.5\n");
}
