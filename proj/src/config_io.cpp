// gaslab: gas cost models for upgradeable smart contract patterns
// Copyright 2026 The gaslab Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gaslab/config_io.hpp>

#include <gaslab/emit.hpp>
#include <gaslab/errors.hpp>

#include <json.hpp>

#include <cstdlib>
#include <functional>
#include <utility>

namespace gaslab {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json parse_json(const std::string& text, const std::string& what) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(what + ": not valid JSON: " + e.what());
    }
}

void require_object(const ordered_json& j, const std::string& what) {
    if (!j.is_object()) {
        throw ValidationError(what + ": expected a JSON object");
    }
}

std::uint64_t as_u64(const ordered_json& value, const std::string& context) {
    if (value.is_number_integer() && value.get<std::int64_t>() < 0) {
        throw ValidationError(context + ": must not be negative");
    }
    if (!value.is_number_unsigned() && !value.is_number_integer()) {
        throw ValidationError(context + ": expected an integer");
    }
    return value.get<std::uint64_t>();
}

bool as_bool(const ordered_json& value, const std::string& context) {
    if (!value.is_boolean()) {
        throw ValidationError(context + ": expected true or false");
    }
    return value.get<bool>();
}

std::string as_string(const ordered_json& value, const std::string& context) {
    if (!value.is_string()) {
        throw ValidationError(context + ": expected a string");
    }
    return value.get<std::string>();
}

/// Field table driving both override parsing and key validation.
const std::map<std::string, Gas GasSchedule::*>& schedule_fields() {
    static const std::map<std::string, Gas GasSchedule::*> fields = {
        {"tx_intrinsic", &GasSchedule::tx_intrinsic},
        {"tx_create", &GasSchedule::tx_create},
        {"calldata_zero_byte", &GasSchedule::calldata_zero_byte},
        {"calldata_nonzero_byte", &GasSchedule::calldata_nonzero_byte},
        {"cold_sload", &GasSchedule::cold_sload},
        {"warm_sload", &GasSchedule::warm_sload},
        {"cold_account_access", &GasSchedule::cold_account_access},
        {"warm_account_access", &GasSchedule::warm_account_access},
        {"sstore_set", &GasSchedule::sstore_set},
        {"sstore_reset", &GasSchedule::sstore_reset},
        {"sstore_noop", &GasSchedule::sstore_noop},
        {"refund_clear", &GasSchedule::refund_clear},
        {"refund_cap_divisor", &GasSchedule::refund_cap_divisor},
        {"hash_base", &GasSchedule::hash_base},
        {"hash_per_word", &GasSchedule::hash_per_word},
        {"code_deposit_per_byte", &GasSchedule::code_deposit_per_byte},
        {"compute_unit", &GasSchedule::compute_unit},
        {"call_base", &GasSchedule::call_base},
    };
    return fields;
}

GasSchedule apply_schedule_object(const ordered_json& j, GasSchedule base,
                                  const std::string& what) {
    require_object(j, what);
    const auto& fields = schedule_fields();
    for (const auto& [key, value] : j.items()) {
        const auto it = fields.find(key);
        if (it == fields.end()) {
            throw ValidationError(what + ": unknown fee '" + key + "'");
        }
        base.*(it->second) = as_u64(value, what + ": '" + key + "'");
    }
    if (const auto violations = base.validate(); !violations.empty()) {
        std::vector<std::string> prefixed;
        prefixed.reserve(violations.size());
        for (const std::string& v : violations) {
            prefixed.push_back(what + ": " + v);
        }
        throw ValidationError(prefixed);
    }
    return base;
}

Pattern pattern_key(const std::string& key, const std::string& context) {
    const auto p = pattern_from_string(key);
    if (!p) {
        throw ValidationError(context + ": unknown pattern '" + key + "'");
    }
    return *p;
}

ContractSize parse_contract_size(const ordered_json& j, const std::string& context) {
    require_object(j, context);
    ContractSize size;
    bool have_deployed = false;
    for (const auto& [key, value] : j.items()) {
        if (key == "deployed_size") {
            size.deployed_size = as_u64(value, context + ": deployed_size");
            have_deployed = true;
        } else if (key == "initcode_size") {
            size.initcode_size = as_u64(value, context + ": initcode_size");
        } else if (key == "nonzero_fraction") {
            if (!value.is_number()) {
                throw ValidationError(context + ": nonzero_fraction: expected a number");
            }
            size.nonzero_fraction = value.get<double>();
        } else {
            throw ValidationError(context + ": unknown key '" + key + "'");
        }
    }
    if (!have_deployed) {
        throw ValidationError(context + ": deployed_size is required");
    }
    if (!j.contains("initcode_size")) {
        size.initcode_size = size.deployed_size;
    }
    return size;
}

}  // namespace

GasSchedule parse_schedule_overrides(const std::string& json_text, GasSchedule base) {
    return apply_schedule_object(parse_json(json_text, "schedule overrides"), base,
                                 "schedule overrides");
}

GasSchedule schedule_from_env(GasSchedule base) {
    const char* path = std::getenv(kScheduleEnvVar);
    if (path == nullptr || *path == '\0') {
        return base;
    }
    return parse_schedule_overrides(read_text_file(path), base);
}

ScenarioConfig parse_scenario(const std::string& json_text, const GasSchedule& base_schedule) {
    const ordered_json j = parse_json(json_text, "scenario");
    require_object(j, "scenario");

    ScenarioConfig config;
    config.schedule = base_schedule;

    for (const auto& [key, value] : j.items()) {
        if (key == "patterns") {
            if (!value.is_array()) {
                throw ValidationError("scenario: patterns: expected an array");
            }
            config.patterns.clear();
            for (const auto& entry : value) {
                config.patterns.push_back(
                    pattern_key(as_string(entry, "scenario: patterns"), "scenario: patterns"));
            }
        } else if (key == "versions") {
            if (!value.is_array()) {
                throw ValidationError("scenario: versions: expected an array");
            }
            config.versions.clear();
            for (const auto& entry : value) {
                const std::string name = as_string(entry, "scenario: versions");
                const auto v = app_version_from_string(name);
                if (!v) {
                    throw ValidationError("scenario: versions: unknown version '" + name + "'");
                }
                config.versions.push_back(*v);
            }
        } else if (key == "iterations") {
            const std::uint64_t n = as_u64(value, "scenario: iterations");
            if (n > 1'000'000) {
                throw ValidationError("scenario: iterations: larger than 1000000");
            }
            config.iterations = static_cast<std::uint32_t>(n);
        } else if (key == "base_name") {
            config.base_name = as_string(value, "scenario: base_name");
        } else if (key == "name_configs") {
            if (!value.is_array()) {
                throw ValidationError("scenario: name_configs: expected an array");
            }
            config.name_configs.clear();
            for (const auto& entry : value) {
                const std::string name = as_string(entry, "scenario: name_configs");
                const auto c = name_config_from_string(name);
                if (!c) {
                    throw ValidationError("scenario: name_configs: unknown config '" + name +
                                          "'");
                }
                config.name_configs.push_back(*c);
            }
        } else if (key == "include_intrinsic") {
            config.include_intrinsic = as_bool(value, "scenario: include_intrinsic");
        } else if (key == "include_reverted") {
            config.include_reverted = as_bool(value, "scenario: include_reverted");
        } else if (key == "compare_lhs") {
            config.compare_lhs = Word::from_hex(as_string(value, "scenario: compare_lhs"));
        } else if (key == "compare_rhs") {
            config.compare_rhs = Word::from_hex(as_string(value, "scenario: compare_rhs"));
        } else if (key == "compare_compute_units") {
            config.compare_compute_units =
                static_cast<std::uint32_t>(as_u64(value, "scenario: compare_compute_units"));
        } else if (key == "schedule") {
            config.schedule = apply_schedule_object(value, config.schedule, "scenario: schedule");
        } else if (key == "contracts") {
            require_object(value, "scenario: contracts");
            config.contracts.clear();
            for (const auto& [pattern_name, table] : value.items()) {
                const Pattern p = pattern_key(pattern_name, "scenario: contracts");
                require_object(table, "scenario: contracts: " + pattern_name);
                SizeTable sizes;
                for (const auto& [contract_name, size] : table.items()) {
                    sizes[contract_name] = parse_contract_size(
                        size, "scenario: contracts: " + pattern_name + ": " + contract_name);
                }
                config.contracts[p] = std::move(sizes);
            }
        } else {
            throw ValidationError("scenario: unknown key '" + key + "'");
        }
    }

    if (const auto violations = config.validate(); !violations.empty()) {
        throw ValidationError(violations);
    }
    return config;
}

ScenarioConfig load_scenario_file(const std::string& path, const GasSchedule& base_schedule) {
    return parse_scenario(read_text_file(path), base_schedule);
}

std::map<Pattern, Gas> parse_targets(const std::string& json_text) {
    const ordered_json j = parse_json(json_text, "targets");
    require_object(j, "targets");
    std::map<Pattern, Gas> targets;
    for (const auto& [key, value] : j.items()) {
        const Pattern p = pattern_key(key, "targets");
        targets[p] = as_u64(value, "targets: '" + key + "'");
    }
    if (targets.empty()) {
        throw ValidationError("targets: at least one pattern target is required");
    }
    return targets;
}

std::map<Pattern, Gas> load_targets_file(const std::string& path) {
    return parse_targets(read_text_file(path));
}

DecisionAnswers parse_answers(const std::string& json_text) {
    const ordered_json j = parse_json(json_text, "answers");
    require_object(j, "answers");
    DecisionAnswers answers;
    const std::map<std::string, bool DecisionAnswers::*> fields = {
        {"needs_upgradeability", &DecisionAnswers::needs_upgradeability},
        {"extensive_features_or_large_code",
         &DecisionAnswers::extensive_features_or_large_code},
        {"frequent_upgrades", &DecisionAnswers::frequent_upgrades},
        {"modularity_priority", &DecisionAnswers::modularity_priority},
    };
    for (const auto& [key, value] : j.items()) {
        const auto it = fields.find(key);
        if (it == fields.end()) {
            throw ValidationError("answers: unknown key '" + key + "'");
        }
        answers.*(it->second) = as_bool(value, "answers: '" + key + "'");
    }
    return answers;
}

DecisionAnswers load_answers_file(const std::string& path) {
    return parse_answers(read_text_file(path));
}

std::string contracts_table_json(const CalibrationResult& result) {
    ordered_json contracts = ordered_json::object();
    for (const auto& [pattern, cal] : result) {
        ordered_json table = ordered_json::object();
        for (const auto& [name, size] : cal.sizes) {
            ordered_json entry;
            entry["deployed_size"] = size.deployed_size;
            entry["initcode_size"] = size.initcode_size;
            entry["nonzero_fraction"] = size.nonzero_fraction;
            table[name] = std::move(entry);
        }
        contracts[to_string(pattern)] = std::move(table);
    }
    ordered_json j;
    j["contracts"] = std::move(contracts);
    return j.dump(2) + "\n";
}

}  // namespace gaslab
