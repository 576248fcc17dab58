// gaslab: gas cost models for upgradeable smart contract patterns
// Copyright 2026 The gaslab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gaslab/storage.hpp>
#include <gaslab/trace.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace gaslab {

/// Application releases. V2 adds updateFile; V3 swaps the plain hash mapping
/// for a file record with ownership checks.
enum class AppVersion : int { V1 = 1, V2 = 2, V3 = 3 };

const char* to_string(AppVersion v);
std::optional<AppVersion> app_version_from_string(std::string_view s);

enum class AppFunction {
    AddFile,
    UpdateFile,
    GetFileName,
    GetFileHash,
    CompareHashes,
};

const char* to_string(AppFunction f);
std::optional<AppFunction> app_function_from_string(std::string_view s);

/// All functions callable under `version`, in canonical report order.
std::vector<AppFunction> functions_of(AppVersion version);
bool version_has(AppVersion version, AppFunction fn);

/// Canonical external signature, e.g. "addFile(string,bytes32)".
const char* signature_of(AppFunction f);

/// Stable 4-byte selector: the leading bytes of the signature digest.
std::array<std::uint8_t, 4> function_selector(AppFunction f);

/// One external call. Unused argument fields stay defaulted.
struct CallRequest {
    AppFunction fn = AppFunction::AddFile;
    std::string name;     ///< file name argument
    Word hash;            ///< content hash argument (addFile/updateFile)
    Word lhs, rhs;        ///< compareHashes arguments
    Address caller;
    std::uint64_t timestamp = 0;
};

/// Raw payload bytes the call puts on the wire: selector then arguments.
std::vector<std::uint8_t> call_payload(const CallRequest& call);

/// Mapping base slots of the app's storage layout. V3 appends the records
/// mapping; names stays in place so stored file names survive the upgrade.
inline constexpr std::uint64_t kNamesBaseSlot = 0;
inline constexpr std::uint64_t kHashesBaseSlot = 1;
inline constexpr std::uint64_t kRecordsBaseSlot = 2;

/// Tunables that change emitted compute work without touching the schedule.
struct AppParams {
    std::uint32_t compare_compute_units = 8;
    DigestFn digest = keccak256;
};

/// Runs one call body against app storage, pricing every operation through
/// the meter and appending the per-op records to `trace`. Unknown or
/// not-yet-available functions revert with "unknown-function"; V3 ownership
/// failures revert with "not-owner". Reverted bodies keep the gas consumed
/// up to the revert.
Outcome execute(const GasSchedule& schedule, AppVersion version, const CallRequest& call,
                ContractStorage& storage, AccessSet& access, GasMeter& meter, OpTrace& trace,
                const AppParams& params = {});

}  // namespace gaslab
