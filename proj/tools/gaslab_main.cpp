// gaslab: gas cost models for upgradeable smart contract patterns
// Copyright 2026 The gaslab Authors.
// SPDX-License-Identifier: Apache-2.0
//
// Command-line frontend. Exit codes: 0 success, 1 validation/usage error,
// 2 I/O error.
#include <gaslab/calibrate.hpp>
#include <gaslab/config_io.hpp>
#include <gaslab/decide.hpp>
#include <gaslab/emit.hpp>
#include <gaslab/errors.hpp>
#include <gaslab/scenario.hpp>

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>

namespace {

using namespace gaslab;

int run_simulate(const std::string& scenario_path, const std::string& out_dir,
                 bool include_intrinsic, const std::string& seed_name, bool serial) {
    ScenarioConfig config = load_scenario_file(scenario_path, schedule_from_env());
    if (include_intrinsic) {
        config.include_intrinsic = true;
    }
    if (!seed_name.empty()) {
        config.base_name = seed_name;
        if (const auto violations = config.validate(); !violations.empty()) {
            throw ValidationError(violations);
        }
    }

    const ScenarioResult result = run_scenario(config, serial ? RunMode::Serial
                                                              : RunMode::Parallel);
    const GasReport report = aggregate(result, config);

    std::error_code ec;
    std::filesystem::create_directories(out_dir, ec);
    if (ec) {
        throw IoError("cannot create output directory: " + out_dir + ": " + ec.message());
    }

    const auto path = [&](const char* name) {
        return (std::filesystem::path(out_dir) / name).string();
    };
    write_text_file(path("report.csv"), report_csv(report));
    write_text_file(path("calls.csv"), calls_csv(result.records));
    write_text_file(path("deployment.csv"), deployment_csv(result.deployments));
    write_text_file(path("report.json"), report_json(report));
    write_text_file(path("calls.json"), calls_json(result.records));

    std::cout << "wrote report.csv, calls.csv, deployment.csv, report.json, calls.json to "
              << out_dir << '\n';
    return 0;
}

int run_report(const std::string& in_dir, const std::string& format) {
    const auto path = [&](const char* name) {
        return (std::filesystem::path(in_dir) / name).string();
    };
    const GasReport report =
        parse_report(read_text_file(path("report.csv")), read_text_file(path("deployment.csv")));
    if (format == "json") {
        std::cout << report_json(report);
    } else {
        std::cout << report_csv(report) << deployment_csv(report.deployments);
    }
    return 0;
}

int run_trace(const std::string& pattern_name, const std::string& version_name,
              const std::string& call_name, const std::string& name, const std::string& hash_hex,
              const std::string& scenario_path, const std::string& format) {
    const auto pattern = pattern_from_string(pattern_name);
    if (!pattern) {
        throw ValidationError("unknown pattern '" + pattern_name + "'");
    }
    const auto version = app_version_from_string(version_name);
    if (!version) {
        throw ValidationError("unknown version '" + version_name + "'");
    }
    const auto fn = app_function_from_string(call_name);
    if (!fn) {
        throw ValidationError("unknown function '" + call_name + "'");
    }
    if (!version_has(*version, *fn)) {
        throw ValidationError(std::string("function '") + to_string(*fn) +
                              "' is not available in " + to_string(*version));
    }

    const GasSchedule schedule = schedule_from_env();

    // Code sizes do not influence call pricing, so the world can be wired
    // with empty contracts unless a scenario supplies real ones.
    SizeTable sizes;
    std::uint32_t compare_units = AppParams{}.compare_compute_units;
    if (!scenario_path.empty()) {
        const ScenarioConfig config = load_scenario_file(scenario_path, schedule);
        const auto it = config.contracts.find(*pattern);
        if (it != config.contracts.end()) {
            sizes = it->second;
        }
        compare_units = config.compare_compute_units;
    }
    for (const std::string& contract :
         contract_names_for(*pattern, {AppVersion::V1, AppVersion::V2, AppVersion::V3})) {
        if (sizes.find(contract) == sizes.end()) {
            sizes[contract] = ContractSize{};
        }
    }

    PatternWorld world(*pattern);
    const std::vector<AppVersion> chain{AppVersion::V1, AppVersion::V2, AppVersion::V3};
    for (std::size_t i = 0; i < chain.size(); ++i) {
        if (static_cast<int>(chain[i]) > static_cast<int>(*version)) {
            break;
        }
        const DeploymentPlan plan = (i == 0)
                                        ? initial_plan(*pattern, chain[i], sizes)
                                        : upgrade_plan(*pattern, chain[i - 1], chain[i], sizes);
        world.apply_plan(plan, schedule);
    }

    CallRequest request;
    request.fn = *fn;
    request.name = name;
    request.hash = hash_hex.empty() ? content_hash_arg(name, "trace", 0)
                                    : Word::from_hex(hash_hex);
    request.caller = bench_caller();
    request.timestamp = 1'700'000'000;

    AppParams params;
    params.compare_compute_units = compare_units;
    const TxResult tx = world.call(request, schedule, params);

    if (format == "json") {
        std::cout << trace_json(tx.trace);
    } else {
        std::cout << trace_text(tx.trace);
        std::cout << "intrinsic " << tx.intrinsic << " calldata "
                  << (tx.calldata_zero + tx.calldata_nonzero) << " bytes, used " << tx.used
                  << ", refund " << tx.refund << ", total " << tx.total << '\n';
    }
    return 0;
}

int run_calibrate(const std::string& targets_path, const std::string& out_path) {
    CalibrationSpec spec;
    spec.targets = load_targets_file(targets_path);
    spec.schedule = schedule_from_env();
    const CalibrationResult result = calibrate(spec);
    write_text_file(out_path, contracts_table_json(result));
    for (const auto& [pattern, cal] : result) {
        std::cout << to_string(pattern) << ": achieved " << cal.achieved << " (target "
                  << spec.targets.at(pattern) << ", floor " << cal.floor << ", "
                  << cal.total_deployed_bytes << " deployed bytes)\n";
    }
    std::cout << "wrote " << out_path << '\n';
    return 0;
}

bool prompt_flag(const std::string& question) {
    std::cout << question << " [y/N] " << std::flush;
    std::string line;
    if (!std::getline(std::cin, line)) {
        std::cout << '\n';
        return false;
    }
    return !line.empty() && (line[0] == 'y' || line[0] == 'Y');
}

int run_decide(const std::string& answers_path) {
    DecisionAnswers answers;
    if (!answers_path.empty()) {
        answers = load_answers_file(answers_path);
    } else {
        answers.needs_upgradeability =
            prompt_flag("Does the application need to be upgradeable after deployment?");
        if (answers.needs_upgradeability) {
            answers.extensive_features_or_large_code =
                prompt_flag("Is the feature set extensive, or the code likely to grow large?");
            answers.frequent_upgrades = prompt_flag("Are upgrades expected to be frequent?");
            answers.modularity_priority =
                prompt_flag("Is independent module-by-module upgradeability a priority?");
        }
    }

    const Recommendation rec = decide(answers);
    std::cout << "recommendation: " << to_string(rec.pattern) << '\n';
    std::cout << "rationale:\n";
    for (const std::string& r : rec.rationale) {
        std::cout << "  - " << r << '\n';
    }
    if (!rec.cautions.empty()) {
        std::cout << "cautions:\n";
        for (const std::string& c : rec.cautions) {
            std::cout << "  - " << c << '\n';
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gas cost modeling and benchmarking for upgradeable smart contract patterns"};
    app.require_subcommand(1);

    auto* sim = app.add_subcommand("simulate", "Run a benchmark scenario and write reports");
    std::string scenario_path;
    std::string out_dir;
    bool include_intrinsic = false;
    std::string seed_name;
    bool serial = false;
    sim->add_option("--scenario", scenario_path, "Scenario JSON file")->required();
    sim->add_option("--out", out_dir, "Directory receiving the emitted files")->required();
    sim->add_flag("--include-intrinsic", include_intrinsic,
                  "Keep the flat transaction fee in reported gas");
    sim->add_option("--seed-name", seed_name, "Override the scenario's base file name");
    sim->add_flag("--serial", serial, "Run all cells on one thread (reference mode)");

    auto* rep = app.add_subcommand("report", "Re-emit a stored report");
    std::string in_dir;
    std::string report_format = "csv";
    rep->add_option("--in", in_dir, "Directory containing report.csv and deployment.csv")
        ->required();
    rep->add_option("--format", report_format, "Output format")
        ->check(CLI::IsMember({"csv", "json"}));

    auto* tr = app.add_subcommand("trace", "Price one call and print its operation trace");
    std::string trace_pattern;
    std::string trace_version = "v3";
    std::string trace_call;
    std::string trace_name = "file";
    std::string trace_hash;
    std::string trace_scenario;
    std::string trace_format = "text";
    tr->add_option("--pattern", trace_pattern, "classic, proxy, or diamond")->required();
    tr->add_option("--version", trace_version, "v1, v2, or v3");
    tr->add_option("--call", trace_call, "Function to invoke")->required();
    tr->add_option("--name", trace_name, "File name argument");
    tr->add_option("--hash", trace_hash, "Content hash argument (hex)");
    tr->add_option("--scenario", trace_scenario, "Scenario JSON supplying contract sizes");
    tr->add_option("--format", trace_format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));

    auto* cal = app.add_subcommand("calibrate", "Fit contract sizes to deployment-gas targets");
    std::string targets_path;
    std::string cal_out;
    cal->add_option("--targets", targets_path, "Targets JSON file")->required();
    cal->add_option("--out", cal_out, "File receiving the fitted size table")->required();

    auto* dec = app.add_subcommand("decide", "Recommend a pattern from a questionnaire");
    std::string answers_path;
    dec->add_option("--answers", answers_path, "Answers JSON file (prompts when omitted)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (sim->parsed()) {
            return run_simulate(scenario_path, out_dir, include_intrinsic, seed_name, serial);
        }
        if (rep->parsed()) {
            return run_report(in_dir, report_format);
        }
        if (tr->parsed()) {
            return run_trace(trace_pattern, trace_version, trace_call, trace_name, trace_hash,
                             trace_scenario, trace_format);
        }
        if (cal->parsed()) {
            return run_calibrate(targets_path, cal_out);
        }
        if (dec->parsed()) {
            return run_decide(answers_path);
        }
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
