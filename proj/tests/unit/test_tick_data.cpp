#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <sstream>

#include <plc/errors.hpp>
#include <plc/pipeline.hpp>
#include <plc/sim.hpp>
#include <plc/tick_data.hpp>

using namespace plc;

namespace {

IngestResult ingest_text(const std::string& s) {
    std::istringstream in(s);
    return ingest(in);
}

std::size_t error_line(const std::string& s) {
    try {
        ingest_text(s);
    } catch (const IoError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST(Ingest, CleanFileUntouched) {
    const auto r = ingest_text("timestamp,price1,price2\n1,10,20\n2,11,21\n3,12,22\n");
    EXPECT_EQ(r.table.size(), 3u);
    EXPECT_TRUE(r.report.empty());
    EXPECT_EQ(r.table.kind, PriceKind::price);
    EXPECT_EQ(r.table.column(Axis::second)[2], 22.0);
}

TEST(Ingest, CleaningRules) {
    const auto r = ingest_text(
        "\xEF\xBB\xBFtimestamp,price1,price2\n"
        "1,10,20\n"
        "3,0,21\n"    // price 0
        "4,,\n"       // nothing observed
        "5,12,22\n"
        "5,13,23\n"   // duplicate keeps this one
        "2,10.5,\n"   // out of order, missing second component
        "\n"
        "6,-1,24\n");
    const auto& rep = r.report;
    EXPECT_EQ(rep.rows_in, 7u);
    EXPECT_EQ(rep.nonpositive_price, 2u);
    EXPECT_EQ(rep.missing_both, 1u);
    EXPECT_EQ(rep.duplicate_time, 1u);
    EXPECT_TRUE(rep.reordered);
    EXPECT_EQ(rep.rows_out, 3u);
    EXPECT_FALSE(rep.empty());
    EXPECT_FALSE(rep.summary().empty());
    EXPECT_EQ(r.table.time, (std::vector<double>{1, 2, 5}));
    EXPECT_FALSE(r.table.column(Axis::second)[1].has_value());
    EXPECT_EQ(r.table.column(Axis::first)[2], 13.0);
    EXPECT_EQ(r.table.observed(Axis::second), 2u);
}

TEST(Ingest, LogPricesAllowNonPositive) {
    const auto r = ingest_text("timestamp,logprice1,logprice2\n1,-0.5,0\n2,0,1\n");
    EXPECT_EQ(r.table.kind, PriceKind::log_price);
    EXPECT_TRUE(r.report.empty());
}

TEST(Ingest, ErrorsCarryLineNumbers) {
    EXPECT_EQ(error_line("time,a,b\n1,2,3\n"), 1u);
    EXPECT_EQ(error_line("timestamp,price1,price2\n1,2,3\n2,3\n"), 3u);
    EXPECT_EQ(error_line("timestamp,price1,price2\n1,2,3\n\n2,abc,3\n"), 4u);
    EXPECT_EQ(error_line("timestamp,price1,price2\nyesterday,2,3\n"), 2u);
    EXPECT_EQ(error_line("timestamp,price1,price2\n1,inf,3\n"), 2u);
    EXPECT_THROW(ingest_text(""), IoError);
    EXPECT_THROW(ingest_text("timestamp,price1,price2\n1,2,3\n"), InsufficientDataError);
    EXPECT_THROW(ingest_text("timestamp,price1,price2\n1,2,3\n1,2,4\n"), InsufficientDataError);
    EXPECT_THROW(ingest(std::filesystem::path("/nonexistent/file.csv")), IoError);
}

TEST(Timestamps, NumericAndIso) {
    EXPECT_EQ(parse_timestamp("12.5"), 12.5);
    EXPECT_EQ(parse_timestamp("1970-01-01T00:00:00"), 0.0);
    EXPECT_EQ(parse_timestamp("1970-01-02 00:01:00Z"), 86460.0);
    EXPECT_EQ(parse_timestamp("2000-03-01T00:00:00"), 951868800.0);
    EXPECT_NEAR(parse_timestamp("1970-01-01T00:00:01.250"), 1.25, 1e-12);
    EXPECT_THROW(parse_timestamp("2001-02-30T00:00:00"), ParameterError);
    EXPECT_THROW(parse_timestamp("12:00"), ParameterError);
    const auto r = ingest_text("timestamp,price1,price2\n2024-01-02T09:30:00,1,1\n2024-01-02T09:31:00,2,2\n");
    EXPECT_EQ(r.table.time[1] - r.table.time[0], 60.0);
}

TEST(ToIncrements, LogDifference) {
    TickTable t;
    t.push_back(0, 100, 5);
    t.push_back(1, 100 * std::exp(1.0), 5);
    const auto s = to_increments(t, IncrementMode::synchronous);
    EXPECT_NEAR(s.values(Axis::first)[0], 1.0, 1e-15);
    EXPECT_EQ(s.values(Axis::second)[0], 0.0);
    EXPECT_EQ(s.scheme.horizon(), 1.0);
}

TEST(ToIncrements, SynchronousSkipsPartialRowsAndRescales) {
    TickTable t;
    t.push_back(10, 1, 1);
    t.push_back(11, 2, std::nullopt);
    t.push_back(12, 4, 3);
    t.push_back(14, 8, 9);
    const auto s = to_increments(t, IncrementMode::synchronous, 8.0);
    EXPECT_EQ(s.times(Axis::first), (std::vector<double>{4, 8}));
    EXPECT_NEAR(s.values(Axis::first)[0], std::log(4.0), 1e-15);
    EXPECT_NEAR(s.values(Axis::second)[1], std::log(3.0), 1e-15);
    EXPECT_THROW(to_increments(t, IncrementMode::synchronous, 0.0), ParameterError);
    TickTable bad;
    bad.push_back(0, -1, 1);
    bad.push_back(1, 1, 1);
    EXPECT_THROW(to_increments(bad, IncrementMode::synchronous), ContractError);
    TickTable thin;
    thin.push_back(0, 1, std::nullopt);
    thin.push_back(1, std::nullopt, 1);
    EXPECT_THROW(to_increments(thin, IncrementMode::synchronous), InsufficientDataError);
}

// Ten rows, components observed at disjoint times. Window [2, 9] of length 7:
//   component 1 at 1→2, 3, 5, 7, 9 with log prices 0, 1, 1, 3, 3
//   component 2 at 2, 4, 6, 8, 10→9 with log prices 0, 0, 2, 2, 5
// increments (1, 0, 2, 0) and (0, 2, 0, 3) over (0,1],(1,3],(3,5],(5,7]
// and (0,2],(2,4],(4,6],(6,7]: seven overlapping pairs, one joint exceedance.
TEST(ToIncrements, AsynchronousDisjointHandCount) {
    const auto r = ingest_text(
        "timestamp,logprice1,logprice2\n"
        "1,0,\n2,,0\n3,1,\n4,,0\n5,1,\n6,,2\n7,3,\n8,,2\n9,3,\n10,,5\n");
    const auto s = to_increments(r.table, IncrementMode::asynchronous);
    EXPECT_EQ(s.times(Axis::first), (std::vector<double>{1, 3, 5, 7}));
    EXPECT_EQ(s.times(Axis::second), (std::vector<double>{2, 4, 6, 7}));
    EXPECT_EQ(s.values(Axis::first), (std::vector<double>{1, 0, 2, 0}));
    EXPECT_EQ(s.values(Axis::second), (std::vector<double>{0, 2, 0, 3}));
    const auto w = empirical_tail_async(s);
    EXPECT_EQ(w.n_obs(), 7u);
    EXPECT_DOUBLE_EQ(w(0.5, 0.5), 1.0 / 7);
    EXPECT_DOUBLE_EQ(w(0.5, kNegInf), 2.0 / 7);
    EXPECT_DOUBLE_EQ(w(kNegInf, 0.5), 2.0 / 7);
    EXPECT_DOUBLE_EQ(w(kNegInf, kNegInf), 1.0);
}

TEST(ToIncrements, AsynchronousWithoutOverlap) {
    TickTable t;
    t.push_back(0, 1, std::nullopt);
    t.push_back(1, 2, std::nullopt);
    t.push_back(2, std::nullopt, 1);
    t.push_back(3, std::nullopt, 2);
    EXPECT_THROW(to_increments(t, IncrementMode::asynchronous), InsufficientDataError);
}

TEST(RoundTrip, CsvIsBitExact) {
    ProcessConfig c;
    c.horizon = 50;
    c.seed = 12;
    c.brownian_variances = {0.01, 0.02};
    for (const auto& scheme : {SamplingScheme::equidistant(500, 0.1),
                               SamplingScheme::asynchronous({10, 20.5, 33, 50}, {3, 7, 41, 50})}) {
        const auto series = sample_path_increments(c, scheme);
        const TickTable table = series_to_table(series);
        std::stringstream csv;
        write_table(csv, table);
        const auto back = ingest(csv);
        EXPECT_TRUE(back.report.empty());
        const auto mode = scheme.is_synchronous() ? IncrementMode::synchronous : IncrementMode::asynchronous;
        const auto a = to_increments(table, mode, 50.0);
        const auto b = to_increments(back.table, mode, 50.0);
        ASSERT_EQ(a.increments, b.increments);
        EXPECT_EQ(a.times(Axis::first), b.times(Axis::first));
        EXPECT_EQ(a.times(Axis::second), b.times(Axis::second));
        // the path reproduces the simulated increments up to summation rounding
        for (int i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < a.increments[i].size(); ++j)
                EXPECT_NEAR(a.increments[i][j], series.increments[i][j], 1e-9);

        EstimateOptions o;
        o.grid1 = o.grid2 = o.diagonal = linspace(0.1, 1.5, 8);
        const auto ea = run_estimate(a, o);
        const auto eb = run_estimate(b, o);
        ASSERT_EQ(ea.surface.size(), eb.surface.size());
        for (std::size_t i = 0; i < ea.surface.size(); ++i) EXPECT_EQ(ea.surface[i].value, eb.surface[i].value);
        for (int q = 0; q < 4; ++q)
            for (std::size_t i = 0; i < ea.diagonals[q].size(); ++i)
                EXPECT_EQ(ea.diagonals[q][i].value, eb.diagonals[q][i].value);
    }
}

TEST(FormatDouble, ShortestRoundTrip) {
    for (double v : {0.1, 1.0 / 3, -2.5e-300, 123456789.125, 0.0}) EXPECT_EQ(std::stod(format_double(v)), v);
    EXPECT_EQ(format_double(0.1), "0.1");
}

TEST(Pipeline, Linspace) {
    EXPECT_EQ(linspace(1, 2, 3), (std::vector<double>{1, 1.5, 2}));
    EXPECT_EQ(linspace(1, 2, 1), (std::vector<double>{1}));
    EXPECT_THROW(linspace(2, 1, 3), ParameterError);
    EXPECT_THROW(linspace(1, 2, 0), ParameterError);
    EstimateOptions o;
    o.grid1 = {};
    EXPECT_THROW(o.validate(), ParameterError);
    o = EstimateOptions{};
    o.diagonal = {0.0, 1.0};
    EXPECT_THROW(o.validate(), ParameterError);
}

TEST(Pipeline, DiagonalSanity) {
    ProcessConfig c;
    c.horizon = 400;
    c.seed = 31;
    EstimateOptions o;
    o.grid1 = o.grid2 = {1.0};
    o.diagonal = {0.5, 1.0};
    const auto scheme = SamplingScheme::equidistant(40000, 0.01);

    c.model.copula = ParetoLevyCopula::independence();
    auto r = run_estimate(sample_path_increments(c, scheme), o);
    for (const auto& p : r.diagonals[0]) EXPECT_LT(p.value, 0.1) << "u " << p.u1;
    EXPECT_EQ(r.k_n, 400.0);

    c.model.copula = ParetoLevyCopula::comonotone();
    r = run_estimate(sample_path_increments(c, scheme), o);
    for (const auto& p : r.diagonals[0]) EXPECT_NEAR(p.value, 1 / p.u1, 0.15 / p.u1) << "u " << p.u1;
    ASSERT_FALSE(r.marginals.empty());
    for (const auto& m : r.marginals) EXPECT_GT(m.value, 0.0);
}
