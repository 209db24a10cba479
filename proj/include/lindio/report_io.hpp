// SPDX-License-Identifier: Apache-2.0
//
// Report serialization: every command-line run emits one envelope
//   {tool_version, subcommand, config, seed, result, work_counters, elapsed_ms}
// rendered as JSON (sorted keys, so identical runs are byte-identical), as an
// indented human listing of the same tree, or as CSV for the row-shaped parts
// (statistics tables and factoring traces). Arbitrary-precision integers
// cross the boundary as decimal strings; machine-width counters stay numeric.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "lindio/factor.hpp"
#include "lindio/stats.hpp"

namespace lindio {

// nlohmann::json with the default std::map storage: keys serialize sorted,
// which is what makes repeated runs byte-identical.
using Json = nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

// Decimal rendering used everywhere a bignum enters a report (Nat and Int
// share one representation, so one overload covers both).
std::string dec_str(const Int& v);

// Sub-objects of the envelope.
Json work_counters_json(const WorkCounters& w);
Json trace_json(const std::vector<TraceEntry>& trace);
Json factor_result_json(const FactorReport& rep);
Json keyrec_result_json(const KeyRecoveryReport& rep);

// Statistics reports round-trip losslessly through their JSON form.
Json experiment_json(const ExperimentReport& rep);
ExperimentReport experiment_from_json(const Json& j);

// Assemble the one-and-only output envelope.
Json make_envelope(const std::string& subcommand, Json config, std::uint64_t seed,
                   Json result, Json work_counters, std::uint64_t elapsed_ms);

// The same facts as the JSON tree, as "key: value" lines with two-space
// indentation; scalar arrays print inline, object arrays as indexed blocks.
std::string render_human(const Json& tree);

// CSV projections (header row first, one data row per table entry).
std::string stats_csv(const ExperimentReport& rep);
std::string trace_csv(const std::vector<TraceEntry>& trace);

}  // namespace lindio
