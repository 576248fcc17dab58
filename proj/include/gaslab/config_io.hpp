// gaslab: gas cost models for upgradeable smart contract patterns
// Copyright 2026 The gaslab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gaslab/calibrate.hpp>
#include <gaslab/decide.hpp>
#include <gaslab/scenario.hpp>

#include <map>
#include <string>

namespace gaslab {

/// Environment variable naming a schedule-override JSON file that is applied
/// on top of the defaults before any scenario-level overrides.
inline constexpr const char* kScheduleEnvVar = "GASLAB_SCHEDULE";

/// Applies a JSON object of fee overrides ({"cold_sload": 2100, ...}) on top
/// of `base`. Unknown keys, non-integer values, and negative values are
/// validation errors.
GasSchedule parse_schedule_overrides(const std::string& json_text, GasSchedule base);

/// The default schedule with the GASLAB_SCHEDULE override file applied when
/// that variable is set (an unreadable file raises IoError).
GasSchedule schedule_from_env(GasSchedule base = {});

/// Parses a full scenario config. Every field is optional except the
/// contracts table; omitted fields keep ScenarioConfig defaults. The
/// scenario's own "schedule" object overrides `base_schedule`.
ScenarioConfig parse_scenario(const std::string& json_text, const GasSchedule& base_schedule);
ScenarioConfig load_scenario_file(const std::string& path, const GasSchedule& base_schedule);

/// Calibration targets: {"classic": 1614545, "proxy": ..., "diamond": ...}.
std::map<Pattern, Gas> parse_targets(const std::string& json_text);
std::map<Pattern, Gas> load_targets_file(const std::string& path);

/// Decision answers: {"needs_upgradeability": true, ...}; missing flags
/// default to false.
DecisionAnswers parse_answers(const std::string& json_text);
DecisionAnswers load_answers_file(const std::string& path);

/// Renders calibrated sizes as a scenario-config fragment:
/// {"contracts": {pattern: {contract: {deployed_size, initcode_size,
/// nonzero_fraction}}}}.
std::string contracts_table_json(const CalibrationResult& result);

}  // namespace gaslab
