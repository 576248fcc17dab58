// gaslab: gas cost models for upgradeable smart contract patterns
// Copyright 2026 The gaslab Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gaslab/emit.hpp>

#include <gaslab/errors.hpp>

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace gaslab {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr const char* kReportHeader = "pattern,version,function,calls,min,avg,median,max";
constexpr const char* kCallsHeader = "pattern,version,function,config,iteration,gas";
constexpr const char* kDeploymentHeader = "pattern,version,gas,cumulative";

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string current;
    for (const char c : line) {
        if (c == ',') {
            fields.push_back(current);
            current.clear();
        } else {
            current.push_back(c);
        }
    }
    fields.push_back(current);
    return fields;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string current;
    for (const char c : text) {
        if (c == '\n') {
            lines.push_back(current);
            current.clear();
        } else if (c != '\r') {
            current.push_back(c);
        }
    }
    if (!current.empty()) {
        lines.push_back(current);
    }
    return lines;
}

std::uint64_t parse_u64(const std::string& field, const std::string& context) {
    if (field.empty() || field.find_first_not_of("0123456789") != std::string::npos) {
        throw ValidationError(context + ": expected a non-negative integer, got '" + field + "'");
    }
    try {
        return std::stoull(field);
    } catch (const std::out_of_range&) {
        throw ValidationError(context + ": value out of range: '" + field + "'");
    }
}

Pattern parse_pattern(const std::string& field, const std::string& context) {
    const auto p = pattern_from_string(field);
    if (!p) {
        throw ValidationError(context + ": unknown pattern '" + field + "'");
    }
    return *p;
}

AppVersion parse_version(const std::string& field, const std::string& context) {
    const auto v = app_version_from_string(field);
    if (!v) {
        throw ValidationError(context + ": unknown version '" + field + "'");
    }
    return *v;
}

AppFunction parse_function(const std::string& field, const std::string& context) {
    const auto f = app_function_from_string(field);
    if (!f) {
        throw ValidationError(context + ": unknown function '" + field + "'");
    }
    return *f;
}

ordered_json report_rows_json(const GasReport& report) {
    ordered_json rows = ordered_json::array();
    for (const ReportRow& row : report.rows) {
        ordered_json item;
        item["pattern"] = to_string(row.pattern);
        item["version"] = to_string(row.version);
        item["function"] = to_string(row.fn);
        item["calls"] = row.calls;
        item["min"] = row.min;
        item["avg"] = row.avg;
        item["median"] = row.median;
        item["max"] = row.max;
        rows.push_back(std::move(item));
    }
    return rows;
}

ordered_json deployments_json(const std::vector<DeploymentRecord>& deployments) {
    ordered_json rows = ordered_json::array();
    for (const DeploymentRecord& d : deployments) {
        ordered_json item;
        item["pattern"] = to_string(d.pattern);
        item["version"] = to_string(d.version);
        item["gas"] = d.gas;
        item["cumulative"] = d.cumulative;
        rows.push_back(std::move(item));
    }
    return rows;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string report_csv(const GasReport& report) {
    std::ostringstream out;
    out << kReportHeader << '\n';
    for (const ReportRow& row : report.rows) {
        out << to_string(row.pattern) << ',' << to_string(row.version) << ','
            << to_string(row.fn) << ',' << row.calls << ',' << row.min << ',' << row.avg << ','
            << row.median << ',' << row.max << '\n';
    }
    return out.str();
}

std::string calls_csv(const std::vector<CallRecord>& records) {
    std::ostringstream out;
    out << kCallsHeader << '\n';
    for (const CallRecord& rec : records) {
        out << to_string(rec.pattern) << ',' << to_string(rec.version) << ','
            << to_string(rec.fn) << ',' << series_label(rec.config) << ',' << rec.iteration << ','
            << rec.gas << '\n';
    }
    return out.str();
}

std::string deployment_csv(const std::vector<DeploymentRecord>& deployments) {
    std::ostringstream out;
    out << kDeploymentHeader << '\n';
    for (const DeploymentRecord& d : deployments) {
        out << to_string(d.pattern) << ',' << to_string(d.version) << ',' << d.gas << ','
            << d.cumulative << '\n';
    }
    return out.str();
}

std::string report_json(const GasReport& report) {
    ordered_json j;
    j["rows"] = report_rows_json(report);
    j["deployments"] = deployments_json(report.deployments);
    return dump(j);
}

std::string calls_json(const std::vector<CallRecord>& records) {
    ordered_json rows = ordered_json::array();
    for (const CallRecord& rec : records) {
        ordered_json item;
        item["pattern"] = to_string(rec.pattern);
        item["version"] = to_string(rec.version);
        item["function"] = to_string(rec.fn);
        item["config"] = series_label(rec.config);
        item["iteration"] = rec.iteration;
        item["gas"] = rec.gas;
        rows.push_back(std::move(item));
    }
    return dump(rows);
}

std::string trace_text(const OpTrace& trace) {
    std::ostringstream out;
    Gas cumulative = 0;
    std::size_t index = 0;
    for (const TraceOp& op : trace.ops) {
        if (const auto* s = std::get_if<StorageOp>(&op)) {
            cumulative += s->gas;
            out << index << ' ' << (s->is_write ? "sstore" : "sload") << " slot="
                << s->slot.hex() << ' ' << (s->cold ? "cold" : "warm") << ' ' << s->gas << ' '
                << cumulative << '\n';
        } else if (const auto* h = std::get_if<HashOp>(&op)) {
            cumulative += h->gas;
            out << index << " hash bytes=" << h->byte_len << " - " << h->gas << ' ' << cumulative
                << '\n';
        } else if (const auto* c = std::get_if<ComputeOp>(&op)) {
            cumulative += c->gas;
            out << index << " compute units=" << c->units << " - " << c->gas << ' ' << cumulative
                << '\n';
        } else if (const auto* call = std::get_if<CallOverheadOp>(&op)) {
            cumulative += call->gas;
            out << index << " call target=" << PatternWorld::contract_name(call->target) << ' '
                << (call->cold ? "cold" : "warm") << ' ' << call->gas << ' ' << cumulative
                << '\n';
        }
        index += 1;
    }
    if (trace.outcome.reverted) {
        out << "revert " << trace.outcome.revert_reason << '\n';
    }
    return out.str();
}

std::string trace_json(const OpTrace& trace) {
    ordered_json ops = ordered_json::array();
    Gas cumulative = 0;
    std::size_t index = 0;
    for (const TraceOp& op : trace.ops) {
        ordered_json item;
        item["index"] = index;
        if (const auto* s = std::get_if<StorageOp>(&op)) {
            cumulative += s->gas;
            item["kind"] = s->is_write ? "sstore" : "sload";
            item["slot"] = s->slot.hex();
            item["cold"] = s->cold;
            item["gas"] = s->gas;
        } else if (const auto* h = std::get_if<HashOp>(&op)) {
            cumulative += h->gas;
            item["kind"] = "hash";
            item["bytes"] = h->byte_len;
            item["gas"] = h->gas;
        } else if (const auto* c = std::get_if<ComputeOp>(&op)) {
            cumulative += c->gas;
            item["kind"] = "compute";
            item["units"] = c->units;
            item["gas"] = c->gas;
        } else if (const auto* call = std::get_if<CallOverheadOp>(&op)) {
            cumulative += call->gas;
            item["kind"] = "call";
            item["target"] = PatternWorld::contract_name(call->target);
            item["cold"] = call->cold;
            item["gas"] = call->gas;
        }
        item["cumulative"] = cumulative;
        ops.push_back(std::move(item));
        index += 1;
    }
    ordered_json j;
    j["ops"] = std::move(ops);
    j["reverted"] = trace.outcome.reverted;
    if (trace.outcome.reverted) {
        j["revert_reason"] = trace.outcome.revert_reason;
    }
    return dump(j);
}

std::vector<ReportRow> parse_report_csv(const std::string& text) {
    const std::vector<std::string> lines = split_lines(text);
    if (lines.empty() || lines[0] != kReportHeader) {
        throw ValidationError(std::string("report CSV: first line must be '") + kReportHeader +
                              "'");
    }
    std::vector<ReportRow> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string context = "report CSV line " + std::to_string(i + 1);
        const std::vector<std::string> f = split_fields(lines[i]);
        if (f.size() != 8) {
            throw ValidationError(context + ": expected 8 fields, got " +
                                  std::to_string(f.size()));
        }
        ReportRow row;
        row.pattern = parse_pattern(f[0], context);
        row.version = parse_version(f[1], context);
        row.fn = parse_function(f[2], context);
        row.calls = parse_u64(f[3], context);
        row.min = parse_u64(f[4], context);
        row.avg = parse_u64(f[5], context);
        row.median = parse_u64(f[6], context);
        row.max = parse_u64(f[7], context);
        rows.push_back(row);
    }
    return rows;
}

std::vector<DeploymentRecord> parse_deployment_csv(const std::string& text) {
    const std::vector<std::string> lines = split_lines(text);
    if (lines.empty() || lines[0] != kDeploymentHeader) {
        throw ValidationError(std::string("deployment CSV: first line must be '") +
                              kDeploymentHeader + "'");
    }
    std::vector<DeploymentRecord> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const std::string context = "deployment CSV line " + std::to_string(i + 1);
        const std::vector<std::string> f = split_fields(lines[i]);
        if (f.size() != 4) {
            throw ValidationError(context + ": expected 4 fields, got " +
                                  std::to_string(f.size()));
        }
        DeploymentRecord row;
        row.pattern = parse_pattern(f[0], context);
        row.version = parse_version(f[1], context);
        row.gas = parse_u64(f[2], context);
        row.cumulative = parse_u64(f[3], context);
        rows.push_back(row);
    }
    return rows;
}

GasReport parse_report(const std::string& report_text, const std::string& deployment_text) {
    GasReport report;
    report.rows = parse_report_csv(report_text);
    report.deployments = parse_deployment_csv(deployment_text);
    return report;
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open for writing: " + path);
    }
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
        throw IoError("write failed: " + path);
    }
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open for reading: " + path);
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad()) {
        throw IoError("read failed: " + path);
    }
    return buffer.str();
}

}  // namespace gaslab
