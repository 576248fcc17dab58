// gaslab: gas cost models for upgradeable smart contract patterns
// Copyright 2026 The gaslab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gaslab/scenario.hpp>

#include <string>
#include <vector>

namespace gaslab {

/// All emitters are pure formatting: the same input always produces the same
/// bytes. CSV files are header + one line per row, LF line endings.

/// Columns: pattern,version,function,calls,min,avg,median,max
std::string report_csv(const GasReport& report);

/// Columns: pattern,version,function,config,iteration,gas
std::string calls_csv(const std::vector<CallRecord>& records);

/// Columns: pattern,version,gas,cumulative
std::string deployment_csv(const std::vector<DeploymentRecord>& deployments);

std::string report_json(const GasReport& report);
std::string calls_json(const std::vector<CallRecord>& records);

/// One line per operation: index, op kind, slot/target, cold flag, gas,
/// cumulative gas. Hash and compute ops carry their size in the detail
/// column and "-" for the cold flag.
std::string trace_text(const OpTrace& trace);
std::string trace_json(const OpTrace& trace);

/// Inverses of the CSV emitters; reject anything that does not match the
/// emitted shape exactly.
std::vector<ReportRow> parse_report_csv(const std::string& text);
std::vector<DeploymentRecord> parse_deployment_csv(const std::string& text);

/// Reassembles a full report from its two emitted files.
GasReport parse_report(const std::string& report_text, const std::string& deployment_text);

/// Whole-file helpers; failures raise IoError with the path in the message.
void write_text_file(const std::string& path, const std::string& content);
std::string read_text_file(const std::string& path);

}  // namespace gaslab
