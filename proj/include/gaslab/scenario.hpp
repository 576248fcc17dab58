// gaslab: gas cost models for upgradeable smart contract patterns
// Copyright 2026 The gaslab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gaslab/dispatch.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gaslab {

/// File-name generation strategies for the addFile series.
enum class NameConfig { Growing, VaryingLastChar, Identical };

const char* to_string(NameConfig c);
std::optional<NameConfig> name_config_from_string(std::string_view s);

/// The file names an addFile series uses, one per iteration:
///  - Growing: the base name gains one character per iteration.
///  - VaryingLastChar: constant length; the trailing characters count
///    through a..z so no name repeats within the series.
///  - Identical: the base name every time.
std::vector<std::string> name_sequence(NameConfig config, const std::string& base_name,
                                       std::uint32_t iterations);

/// Everything one benchmark run needs. `schedule` is the fully resolved fee
/// table (defaults, then any overrides already applied).
struct ScenarioConfig {
    std::vector<Pattern> patterns{Pattern::Classic, Pattern::Proxy, Pattern::Diamond};
    std::vector<AppVersion> versions{AppVersion::V1, AppVersion::V2, AppVersion::V3};
    std::uint32_t iterations = 100;
    std::string base_name = "file";
    std::vector<NameConfig> name_configs{NameConfig::Growing, NameConfig::VaryingLastChar,
                                         NameConfig::Identical};
    bool include_intrinsic = false;  ///< keep the flat tx fee in reported gas
    bool include_reverted = false;   ///< keep reverted calls in reports
    Word compare_lhs;                ///< compareHashes arguments
    Word compare_rhs;
    std::uint32_t compare_compute_units = 8;
    GasSchedule schedule;
    std::map<Pattern, SizeTable> contracts;

    /// Returns every violated constraint, empty when runnable.
    [[nodiscard]] std::vector<std::string> validate() const;
};

/// Label of the series a call belongs to: one of the addFile name configs,
/// or "default" for every other function's single series.
std::string series_label(const std::optional<NameConfig>& config);

/// One priced call of the benchmark grid.
struct CallRecord {
    Pattern pattern = Pattern::Classic;
    AppVersion version = AppVersion::V1;
    AppFunction fn = AppFunction::AddFile;
    std::optional<NameConfig> config;  ///< set for addFile series only
    std::uint32_t iteration = 0;       ///< zero-based
    Gas gas = 0;                       ///< reported gas (intrinsic per flag)
    TxResult tx;                       ///< full pricing detail
};

struct DeploymentRecord {
    Pattern pattern = Pattern::Classic;
    AppVersion version = AppVersion::V1;
    Gas gas = 0;
    Gas cumulative = 0;  ///< running total over the pattern's versions
};

struct ScenarioResult {
    std::vector<CallRecord> records;
    std::vector<DeploymentRecord> deployments;
};

enum class RunMode { Serial, Parallel };

/// Runs the full grid. Serial is the reference implementation; Parallel
/// executes the independent jobs (Classic redeploys per version, the Proxy
/// and Diamond upgrade chains) concurrently and must produce identical
/// results.
ScenarioResult run_scenario(const ScenarioConfig& config, RunMode mode = RunMode::Parallel);

/// min / avg / median / max per (pattern, version, function). The average
/// rounds half-up; the median takes the lower middle of even-sized sets.
struct ReportRow {
    Pattern pattern = Pattern::Classic;
    AppVersion version = AppVersion::V1;
    AppFunction fn = AppFunction::AddFile;
    std::uint64_t calls = 0;
    Gas min = 0;
    Gas avg = 0;
    Gas median = 0;
    Gas max = 0;

    bool operator==(const ReportRow&) const = default;
};

struct GasReport {
    std::vector<ReportRow> rows;               ///< canonical key order
    std::vector<DeploymentRecord> deployments; ///< pattern-major, version order

    bool operator==(const GasReport&) const = default;
};

/// Requires `DeploymentRecord` comparability for report equality checks.
inline bool operator==(const DeploymentRecord& a, const DeploymentRecord& b) {
    return a.pattern == b.pattern && a.version == b.version && a.gas == b.gas &&
           a.cumulative == b.cumulative;
}

GasReport aggregate(const ScenarioResult& result, const ScenarioConfig& config);

/// Aggregation core shared with report parsing: plain keyed gas samples.
struct KeyedGas {
    Pattern pattern;
    AppVersion version;
    AppFunction fn;
    Gas gas;
};

std::vector<ReportRow> aggregate_rows(const std::vector<KeyedGas>& samples);

/// Per-function average deltas of each pattern against Classic.
struct CompareRow {
    AppVersion version = AppVersion::V1;
    AppFunction fn = AppFunction::AddFile;
    Pattern pattern = Pattern::Classic;
    Gas avg = 0;
    SignedGas delta_vs_classic = 0;
    double relative_vs_classic = 0.0;  ///< delta / classic average

    bool operator==(const CompareRow&) const = default;
};

std::vector<CompareRow> diff_patterns(const GasReport& report);

/// Deterministic per-series inputs, shared by the runner and tools:
/// the effective base name spoken by a (version, config) cell, the anchor
/// name targeted by updateFile/getters, and the content-hash arguments.
std::string effective_base_name(const std::string& base_name, AppVersion version,
                                NameConfig config);
std::string anchor_name(const std::string& base_name, AppVersion version);
Word content_hash_arg(std::string_view name, std::string_view domain, std::uint64_t iteration);

/// Fixed externally-owned account all benchmark calls originate from.
Address bench_caller();

}  // namespace gaslab
