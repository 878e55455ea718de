#include "plc/tick_data.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "plc/errors.hpp"

namespace plc {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::optional<double> parse_number(std::string_view s) {
    double v = 0.0;
    const char* end = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc() || ptr != end || !std::isfinite(v)) return std::nullopt;
    return v;
}

template <class Int>
bool parse_int(std::string_view s, Int& out) {
    if (s.empty()) return false;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc() && ptr == s.data() + s.size();
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = line.find(',', start);
        out.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) return out;
        start = comma + 1;
    }
}

struct RawRow {
    double time;
    std::optional<double> v1, v2;
};

}  // namespace

std::size_t TickTable::observed(Axis c) const {
    const auto& col = column(c);
    return static_cast<std::size_t>(std::count_if(col.begin(), col.end(), [](const auto& v) { return v.has_value(); }));
}

void TickTable::push_back(double t, std::optional<double> v1, std::optional<double> v2) {
    time.push_back(t);
    value[0].push_back(v1);
    value[1].push_back(v2);
}

std::string CleaningReport::summary() const {
    std::ostringstream os;
    os << "rows in " << rows_in << ", rows out " << rows_out;
    if (nonpositive_price) os << "; dropped " << nonpositive_price << " with non-positive price";
    if (missing_both) os << "; dropped " << missing_both << " with no price";
    if (duplicate_time) os << "; dropped " << duplicate_time << " duplicate timestamps (kept last)";
    if (reordered) os << "; rows sorted by time";
    return os.str();
}

double parse_timestamp(std::string_view s) {
    s = trim(s);
    if (auto v = parse_number(s)) return *v;

    // YYYY-MM-DD[T ]hh:mm:ss[.fff][Z]
    if (s.size() >= 19 && s[4] == '-' && s[7] == '-' && (s[10] == 'T' || s[10] == ' ') && s[13] == ':' &&
        s[16] == ':') {
        int y = 0;
        unsigned mo = 0, d = 0, h = 0, mi = 0, se = 0;
        if (parse_int(s.substr(0, 4), y) && parse_int(s.substr(5, 2), mo) && parse_int(s.substr(8, 2), d) &&
            parse_int(s.substr(11, 2), h) && parse_int(s.substr(14, 2), mi) && parse_int(s.substr(17, 2), se) &&
            h < 24 && mi < 60 && se < 61) {
            std::string_view rest = s.substr(19);
            if (!rest.empty() && rest.back() == 'Z') rest.remove_suffix(1);
            double frac = 0.0;
            bool ok = true;
            if (!rest.empty()) {
                ok = rest.front() == '.' && rest.size() > 1 &&
                     std::all_of(rest.begin() + 1, rest.end(), [](char c) { return c >= '0' && c <= '9'; });
                if (ok) frac = *parse_number(std::string("0") + std::string(rest));
            }
            const std::chrono::year_month_day ymd{std::chrono::year{y}, std::chrono::month{mo}, std::chrono::day{d}};
            if (ok && ymd.ok()) {
                const auto days = std::chrono::sys_days{ymd}.time_since_epoch().count();
                return static_cast<double>(days) * 86400.0 + h * 3600.0 + mi * 60.0 + se + frac;
            }
        }
    }
    throw ParameterError("unparseable timestamp '" + std::string(s) + "'");
}

IngestResult ingest(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return ingest(in);
}

IngestResult ingest(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    if (!std::getline(in, line)) throw IoError("empty input", 1);
    ++lineno;
    std::string_view header = line;
    if (header.starts_with("\xEF\xBB\xBF")) header.remove_prefix(3);
    const auto cols = split(header);

    IngestResult result;
    if (cols.size() == 3 && cols[0] == "timestamp" && cols[1] == "price1" && cols[2] == "price2")
        result.table.kind = PriceKind::price;
    else if (cols.size() == 3 && cols[0] == "timestamp" && cols[1] == "logprice1" && cols[2] == "logprice2")
        result.table.kind = PriceKind::log_price;
    else
        throw IoError("expected header timestamp,price1,price2", lineno);
    const bool prices = result.table.kind == PriceKind::price;

    CleaningReport& rep = result.report;
    std::vector<RawRow> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (trim(line).empty()) continue;
        const auto f = split(line);
        if (f.size() != 3) throw IoError("expected 3 fields", lineno);
        ++rep.rows_in;
        RawRow r{};
        try {
            r.time = parse_timestamp(f[0]);
        } catch (const ParameterError& e) {
            throw IoError(e.what(), lineno);
        }
        bool nonpositive = false;
        for (int c = 0; c < 2; ++c) {
            if (f[1 + c].empty()) continue;
            auto v = parse_number(f[1 + c]);
            if (!v) throw IoError("unparseable value '" + std::string(f[1 + c]) + "'", lineno);
            if (prices && !(*v > 0.0)) nonpositive = true;
            (c == 0 ? r.v1 : r.v2) = *v;
        }
        if (nonpositive) {
            ++rep.nonpositive_price;
            continue;
        }
        if (!r.v1 && !r.v2) {
            ++rep.missing_both;
            continue;
        }
        rows.push_back(r);
    }
    if (in.bad()) throw IoError("read failure", lineno);

    if (!std::is_sorted(rows.begin(), rows.end(), [](const RawRow& a, const RawRow& b) { return a.time < b.time; })) {
        rep.reordered = true;
        std::stable_sort(rows.begin(), rows.end(), [](const RawRow& a, const RawRow& b) { return a.time < b.time; });
    }
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i + 1 < rows.size() && rows[i + 1].time == rows[i].time) {
            ++rep.duplicate_time;
            continue;
        }
        result.table.push_back(rows[i].time, rows[i].v1, rows[i].v2);
    }
    rep.rows_out = result.table.size();
    if (rep.rows_out < 2) throw InsufficientDataError("fewer than two rows survive cleaning");
    return result;
}

namespace {

struct Observations {
    std::vector<double> t;
    std::vector<double> logp;
};

Observations column_observations(const TickTable& table, Axis c, bool require_both) {
    Observations o;
    const auto& col = table.column(c);
    const auto& oth = table.column(other(c));
    for (std::size_t i = 0; i < table.size(); ++i) {
        if (!col[i] || (require_both && !oth[i])) continue;
        double v = *col[i];
        if (table.kind == PriceKind::price) {
            if (!(v > 0.0)) throw ContractError("to_increments: non-positive price");
            v = std::log(v);
        }
        o.t.push_back(table.time[i]);
        o.logp.push_back(v);
    }
    return o;
}

// Restricts to the window [s, e] as documented on to_increments.
Observations window(const Observations& o, double s, double e) {
    const auto first = std::upper_bound(o.t.begin(), o.t.end(), s) - o.t.begin() - 1;
    const auto last = std::lower_bound(o.t.begin(), o.t.end(), e) - o.t.begin();
    Observations w;
    for (auto i = first; i <= last; ++i) {
        w.t.push_back(std::clamp(o.t[static_cast<std::size_t>(i)], s, e));
        w.logp.push_back(o.logp[static_cast<std::size_t>(i)]);
    }
    return w;
}

// Drops t_0 and maps the rest from [s, e] onto (0, k].
std::vector<double> rescale(const std::vector<double>& t, double s, double e, double k) {
    std::vector<double> out(t.begin() + 1, t.end());
    if (!(s == 0.0 && e == k)) {
        const double scale = k / (e - s);
        for (double& v : out) v = (v - s) * scale;
    }
    out.back() = k;
    return out;
}

std::vector<double> differences(const std::vector<double>& x) {
    std::vector<double> d(x.size() - 1);
    for (std::size_t j = 1; j < x.size(); ++j) d[j - 1] = x[j] - x[j - 1];
    return d;
}

}  // namespace

IncrementSeries to_increments(const TickTable& table, IncrementMode mode, std::optional<double> k_n) {
    if (k_n && !(*k_n > 0.0 && std::isfinite(*k_n))) throw ParameterError("to_increments: k_n must be positive");

    if (mode == IncrementMode::synchronous) {
        const Observations a = column_observations(table, Axis::first, true);
        const Observations b = column_observations(table, Axis::second, true);
        if (a.t.size() < 2) throw InsufficientDataError("to_increments: fewer than two rows with both prices");
        const double s = a.t.front(), e = a.t.back();
        const double k = k_n.value_or(e - s);
        return IncrementSeries(SamplingScheme::irregular(rescale(a.t, s, e, k)), differences(a.logp),
                               differences(b.logp));
    }

    const Observations a = column_observations(table, Axis::first, false);
    const Observations b = column_observations(table, Axis::second, false);
    if (a.t.size() < 2 || b.t.size() < 2)
        throw InsufficientDataError("to_increments: a component has fewer than two observations");
    const double s = std::max(a.t.front(), b.t.front());
    const double e = std::min(a.t.back(), b.t.back());
    if (!(s < e)) throw InsufficientDataError("to_increments: the components share no time window");
    const Observations wa = window(a, s, e);
    const Observations wb = window(b, s, e);
    const double k = k_n.value_or(e - s);
    return IncrementSeries(SamplingScheme::asynchronous(rescale(wa.t, s, e, k), rescale(wb.t, s, e, k)),
                           differences(wa.logp), differences(wb.logp));
}

TickTable series_to_table(const IncrementSeries& series) {
    TickTable table;
    table.kind = PriceKind::log_price;
    const std::vector<double> t1 = series.times(Axis::first);
    const std::vector<double> t2 = series.times(Axis::second);
    const auto& d1 = series.values(Axis::first);
    const auto& d2 = series.values(Axis::second);

    table.push_back(0.0, 0.0, 0.0);
    double x1 = 0.0, x2 = 0.0;
    std::size_t i = 0, j = 0;
    while (i < t1.size() || j < t2.size()) {
        const double t = std::min(i < t1.size() ? t1[i] : HUGE_VAL, j < t2.size() ? t2[j] : HUGE_VAL);
        std::optional<double> v1, v2;
        if (i < t1.size() && t1[i] == t) v1 = x1 += d1[i++];
        if (j < t2.size() && t2[j] == t) v2 = x2 += d2[j++];
        table.push_back(t, v1, v2);
    }
    return table;
}

std::string format_double(double v) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    if (ec != std::errc()) throw ContractError("format_double: conversion failed");
    return std::string(buf, ptr);
}

void write_table(std::ostream& out, const TickTable& table) {
    out << (table.kind == PriceKind::price ? "timestamp,price1,price2\n" : "timestamp,logprice1,logprice2\n");
    for (std::size_t i = 0; i < table.size(); ++i) {
        out << format_double(table.time[i]) << ',';
        if (table.value[0][i]) out << format_double(*table.value[0][i]);
        out << ',';
        if (table.value[1][i]) out << format_double(*table.value[1][i]);
        out << '\n';
    }
}

void write_table(const std::filesystem::path& path, const TickTable& table) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write " + path.string());
    write_table(out, table);
    if (!out) throw IoError("write failure on " + path.string());
}

}  // namespace plc
