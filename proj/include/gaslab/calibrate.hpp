// gaslab: gas cost models for upgradeable smart contract patterns
// Copyright 2026 The gaslab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gaslab/dispatch.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace gaslab {

/// Total gas of rolling one pattern through `versions` on a fresh world:
/// the initial deployment plus every single-step upgrade.
Gas deployment_chain_gas(Pattern pattern, const std::vector<AppVersion>& versions,
                         const SizeTable& sizes, const GasSchedule& schedule);

/// Relative code-size weights used to split a pattern's total deployed bytes
/// across its contracts during calibration.
using WeightTable = std::map<std::string, double>;

/// Built-in weights reflecting typical relative contract sizes: app code
/// grows with each version, dispatch shells stay small.
std::map<Pattern, WeightTable> default_calibration_weights();

/// Inputs of a calibration run. Everything except the targets has workable
/// defaults; weights fall back to the built-in table per pattern.
struct CalibrationSpec {
    std::map<Pattern, Gas> targets;          ///< cumulative deployment gas to hit
    std::map<Pattern, WeightTable> weights;  ///< optional per-pattern overrides
    std::vector<AppVersion> versions{AppVersion::V1, AppVersion::V2, AppVersion::V3};
    std::uint64_t initcode_margin = 160;     ///< initcode_size = deployed_size + margin
    double nonzero_fraction = 0.85;
    GasSchedule schedule;
};

struct PatternCalibration {
    SizeTable sizes;
    Gas achieved = 0;           ///< chain gas the fitted sizes actually produce
    Gas floor = 0;              ///< chain gas with every size at zero
    std::uint64_t total_deployed_bytes = 0;
};

using CalibrationResult = std::map<Pattern, PatternCalibration>;

/// Fits per-contract deployed/initcode sizes so the simulated cumulative
/// deployment gas of each targeted pattern lands as close as the byte
/// granularity allows (well within 0.1% for realistic targets). Bisects the
/// pattern's total deployed byte count — gas is strictly increasing in it —
/// and splits the total across contracts by weight, largest remainder first,
/// ties broken by deployment order. A target below the zero-size floor is
/// rejected with a diagnostic naming that floor.
CalibrationResult calibrate(const CalibrationSpec& spec);

}  // namespace gaslab
