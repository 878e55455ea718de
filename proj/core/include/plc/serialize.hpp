#pragma once

#include <iosfwd>
#include <span>

#include <nlohmann/json.hpp>

#include "plc/mc.hpp"
#include "plc/schemes.hpp"

namespace plc {

/// {"type": "equidistant", "n": .., "delta": ..}
/// {"type": "irregular", "times": [..]}
/// {"type": "asynchronous", "r": [..], "s": [..]}
nlohmann::json scheme_to_json(const SamplingScheme& scheme);

/// ParameterError on a malformed document; scheme validation errors pass
/// through.
SamplingScheme scheme_from_json(const nlohmann::json& j);

nlohmann::json diagnostics_to_json(const SchemeDiagnostics& d);

nlohmann::json spec_to_json(const ExperimentSpec& spec);
nlohmann::json report_to_json(const McReport& report, bool with_replicates = false);

/// One line per preset row in the layout of the simulation tables: the row
/// key, then bias and variance at each evaluation point, then the
/// covariances of the configured pairs.
void write_table_csv(std::ostream& out, std::span<const PresetRow> rows, std::span<const McReport> reports);

/// Two columns: theoretical,sample.
void write_qq_csv(std::ostream& out, const QqData& qq);

}  // namespace plc
