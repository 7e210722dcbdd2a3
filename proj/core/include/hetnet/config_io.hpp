#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "hetnet/report.hpp"
#include "hetnet/scenario.hpp"

namespace hetnet {

/// Parses a JSON scenario document. Keys carry their units
/// (e.g. "lambda_m_per_min_m2"); thresholds may instead be given in dB with a
/// "_db" suffix. Missing keys keep their defaults; unknown keys are rejected.
/// The result is validated. Errors are ValidationError naming the key.
ScenarioConfig parse_scenario_json(std::string_view text);

ScenarioConfig load_scenario_file(const std::string& path);

/// Optional "sweep" block of the same document.
std::optional<SweepSpec> parse_sweep_json(std::string_view text);

/// Canonical JSON echo of a configuration (linear units).
std::string scenario_to_json(const ScenarioConfig& config, int indent = 2);

std::string report_to_json(const ScenarioReport& report, int indent = 2);

}  // namespace hetnet
