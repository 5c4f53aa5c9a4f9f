/* SPDX-License-Identifier: Apache-2.0 */

#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "s2a/construction.hpp"
#include "s2a/harness.hpp"
#include "s2a/oracle.hpp"

namespace s2a {

inline constexpr const char* kFormatVersion = "1";

/// Malformed or out-of-contract scenario file.
class ScenarioError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses a scenario file. Unknown fields, version mismatches, decimal
/// literals and uncertified ranges are all rejected with ScenarioError.
Scenario parse_scenario(std::string_view text);
Scenario load_scenario(const std::string& path);

/// Trace and witness written by `construct`.
std::string trace_to_json(const Scenario& s, const ConstructionResult& r, bool accelerate);

std::string report_to_json(const Report& r);
std::string report_to_text(const Report& r);

std::string oracle_to_json(const Scenario& s, std::size_t n, std::size_t prev_index, Stage stage_cap,
                           const std::optional<OracleHit>& hit);

/// Sidecar with wall-clock data; kept apart from payloads so those stay reproducible.
std::string timing_to_json(const std::string& command, const std::string& scenario, double seconds);

}  // namespace s2a
