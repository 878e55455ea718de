#pragma once

#include <array>
#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "plc/series.hpp"

namespace plc {

/// Whether a table holds prices (header timestamp,price1,price2) or log
/// prices (header timestamp,logprice1,logprice2).
enum class PriceKind { price, log_price };

/// Bivariate tick data. A row may leave one component unobserved.
struct TickTable {
    PriceKind kind = PriceKind::price;
    std::vector<double> time;
    std::array<std::vector<std::optional<double>>, 2> value;

    std::size_t size() const noexcept { return time.size(); }
    const std::vector<std::optional<double>>& column(Axis c) const { return value[c == Axis::first ? 0 : 1]; }
    std::size_t observed(Axis c) const;
    void push_back(double t, std::optional<double> v1, std::optional<double> v2);
};

struct CleaningReport {
    std::size_t rows_in = 0;
    std::size_t rows_out = 0;
    std::size_t nonpositive_price = 0;  // rows dropped for a price ≤ 0
    std::size_t missing_both = 0;       // rows with neither component
    std::size_t duplicate_time = 0;     // earlier rows sharing a timestamp
    bool reordered = false;             // input was not sorted by time

    bool empty() const noexcept { return rows_in == rows_out && !reordered; }
    std::string summary() const;
};

struct IngestResult {
    TickTable table;
    CleaningReport report;
};

/// Reads a CSV file with header `timestamp,price1,price2` (or the logprice
/// variant). Timestamps are decimal numbers or ISO-8601 date-times
/// (converted to seconds since the Unix epoch). Empty fields mark a missing
/// component.
///
/// Cleaning: rows with a non-positive price are dropped, rows with both
/// components missing are dropped, rows are stably sorted by time, and of
/// several rows sharing a timestamp only the last survives.
///
/// IoError (with line number) on unreadable or malformed input,
/// InsufficientDataError when fewer than two rows survive.
IngestResult ingest(const std::filesystem::path& path);
IngestResult ingest(std::istream& in);

/// Seconds since the Unix epoch for `YYYY-MM-DD[T ]hh:mm:ss[.fff][Z]`, or the
/// number itself for a plain decimal. ParameterError otherwise.
double parse_timestamp(std::string_view s);

enum class IncrementMode { synchronous, asynchronous };

/// Log returns of the table.
///
/// synchronous: rows observing both components, one irregular scheme.
/// asynchronous: each component on its own timestamps. The common window
/// [S, E] runs from the later first observation to the earlier last one;
/// each component keeps its last observation at or before S and its first
/// at or after E, clamped to S and E.
///
/// Times are mapped affinely from [S, E] to [0, k_n]; without k_n the span
/// E − S is used. InsufficientDataError when a component has fewer than two
/// usable observations or the window is empty, ContractError for a
/// non-positive price.
IncrementSeries to_increments(const TickTable& table, IncrementMode mode, std::optional<double> k_n = {});

/// The log-price path of a series, starting at 0 at time 0. Asynchronous
/// series leave the unobserved component empty.
TickTable series_to_table(const IncrementSeries& series);

/// Shortest decimal text that parses back to the same double.
std::string format_double(double v);

void write_table(std::ostream& out, const TickTable& table);
void write_table(const std::filesystem::path& path, const TickTable& table);

}  // namespace plc
