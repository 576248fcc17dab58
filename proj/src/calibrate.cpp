// gaslab: gas cost models for upgradeable smart contract patterns
// Copyright 2026 The gaslab Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gaslab/calibrate.hpp>

#include <gaslab/errors.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace gaslab {

namespace {

/// Weights are taken to six decimal places so the split is pure integer
/// arithmetic and bit-for-bit reproducible.
constexpr double kWeightScale = 1'000'000.0;

/// Splits `total` across the weighted slots: integer quotas first, then the
/// leftover bytes to the largest remainders, earlier slots winning ties.
std::vector<std::uint64_t> allocate(std::uint64_t total,
                                    const std::vector<std::uint64_t>& weights) {
    const std::uint64_t sum_w = std::accumulate(weights.begin(), weights.end(), std::uint64_t{0});
    std::vector<std::uint64_t> out(weights.size(), 0);
    std::vector<std::pair<std::uint64_t, std::size_t>> remainders;
    std::uint64_t assigned = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        const std::uint64_t numerator = weights[i] * total;
        out[i] = numerator / sum_w;
        assigned += out[i];
        remainders.emplace_back(numerator % sum_w, i);
    }
    std::sort(remainders.begin(), remainders.end(),
              [](const auto& a, const auto& b) {
                  if (a.first != b.first) {
                      return a.first > b.first;
                  }
                  return a.second < b.second;
              });
    for (std::uint64_t leftover = total - assigned, i = 0; i < leftover; ++i) {
        out[remainders[i % remainders.size()].second] += 1;
    }
    return out;
}

void require_consecutive(const std::vector<AppVersion>& versions,
                         std::vector<std::string>& violations) {
    if (versions.empty()) {
        violations.push_back("versions: at least one version is required");
        return;
    }
    for (std::size_t i = 1; i < versions.size(); ++i) {
        if (static_cast<int>(versions[i]) != static_cast<int>(versions[i - 1]) + 1) {
            violations.push_back("versions: must be consecutive and ascending");
            return;
        }
    }
}

}  // namespace

Gas deployment_chain_gas(Pattern pattern, const std::vector<AppVersion>& versions,
                         const SizeTable& sizes, const GasSchedule& schedule) {
    PatternWorld world(pattern);
    Gas total = 0;
    for (std::size_t i = 0; i < versions.size(); ++i) {
        const DeploymentPlan plan =
            (i == 0) ? initial_plan(pattern, versions[i], sizes)
                     : upgrade_plan(pattern, versions[i - 1], versions[i], sizes);
        total += world.apply_plan(plan, schedule);
    }
    return total;
}

std::map<Pattern, WeightTable> default_calibration_weights() {
    return {
        {Pattern::Classic,
         {{"classic-v1", 1900.0}, {"classic-v2", 2200.0}, {"classic-v3", 2700.0}}},
        {Pattern::Proxy,
         {{"implementation-v1", 5000.0},
          {kProxyContractName, 550.0},
          {"implementation-v2", 6350.0},
          {"implementation-v3", 7200.0}}},
        {Pattern::Diamond,
         {{kDiamondContractName, 1000.0},
          {kCutFacetContractName, 1500.0},
          {kLoupeFacetContractName, 900.0},
          {"app-facet-v1", 3400.0},
          {"app-facet-v2", 4300.0},
          {"app-facet-v3", 5000.0}}},
    };
}

CalibrationResult calibrate(const CalibrationSpec& spec) {
    std::vector<std::string> violations;
    if (spec.targets.empty()) {
        violations.push_back("targets: at least one pattern target is required");
    }
    for (const auto& [pattern, target] : spec.targets) {
        if (target == 0) {
            violations.push_back(std::string("targets: '") + to_string(pattern) +
                                 "' must be positive");
        }
    }
    require_consecutive(spec.versions, violations);
    if (!(spec.nonzero_fraction >= 0.0 && spec.nonzero_fraction <= 1.0)) {
        violations.push_back("nonzero_fraction: must lie in [0, 1]");
    }
    for (const std::string& s : spec.schedule.validate()) {
        violations.push_back("schedule: " + s);
    }
    if (!violations.empty()) {
        throw ValidationError(violations);
    }

    const std::map<Pattern, WeightTable> builtin = default_calibration_weights();
    CalibrationResult result;
    for (const auto& [pattern, target] : spec.targets) {
        const std::vector<std::string> names = contract_names_for(pattern, spec.versions);
        const auto custom = spec.weights.find(pattern);
        const WeightTable& weights =
            (custom != spec.weights.end()) ? custom->second : builtin.at(pattern);

        std::vector<std::uint64_t> scaled;
        scaled.reserve(names.size());
        for (const std::string& name : names) {
            const auto it = weights.find(name);
            if (it == weights.end()) {
                throw ValidationError("weights: missing entry '" + name + "' for pattern '" +
                                      std::string(to_string(pattern)) + "'");
            }
            const auto value =
                static_cast<std::uint64_t>(std::llround(it->second * kWeightScale));
            if (!(it->second > 0.0) || value == 0) {
                throw ValidationError("weights: '" + name + "' must be positive");
            }
            scaled.push_back(value);
        }

        const auto table_for = [&](std::uint64_t total) {
            const std::vector<std::uint64_t> bytes = allocate(total, scaled);
            SizeTable table;
            for (std::size_t i = 0; i < names.size(); ++i) {
                table[names[i]] = ContractSize{bytes[i], bytes[i] + spec.initcode_margin,
                                               spec.nonzero_fraction};
            }
            return table;
        };
        const auto gas_for = [&](std::uint64_t total) {
            return deployment_chain_gas(pattern, spec.versions, table_for(total), spec.schedule);
        };

        const Gas floor_gas = gas_for(0);
        if (target < floor_gas) {
            throw ValidationError(std::string("targets: '") + to_string(pattern) + "' target " +
                                  std::to_string(target) +
                                  " is below the fixed-overhead floor of " +
                                  std::to_string(floor_gas));
        }

        std::uint64_t best = 0;
        if (target > floor_gas) {
            // Gas grows strictly with the byte total, so double until the
            // target is bracketed, then bisect to the smallest total at or
            // above it and keep whichever neighbor lands closer.
            std::uint64_t lo = 0;
            std::uint64_t hi = 1;
            while (gas_for(hi) < target) {
                lo = hi;
                hi *= 2;
            }
            while (hi - lo > 1) {
                const std::uint64_t mid = lo + (hi - lo) / 2;
                if (gas_for(mid) >= target) {
                    hi = mid;
                } else {
                    lo = mid;
                }
            }
            const Gas above = gas_for(hi);
            const Gas below = gas_for(lo);
            best = (above - target <= target - below) ? hi : lo;
        }

        PatternCalibration cal;
        cal.sizes = table_for(best);
        cal.achieved = gas_for(best);
        cal.floor = floor_gas;
        cal.total_deployed_bytes = best;
        result.emplace(pattern, std::move(cal));
    }
    return result;
}

}  // namespace gaslab
