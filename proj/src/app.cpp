// gaslab: gas cost models for upgradeable smart contract patterns
// Copyright 2026 The gaslab Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gaslab/app.hpp>
#include <gaslab/keccak.hpp>

namespace gaslab {
namespace {

SlotKey base_slot(std::uint64_t index) { return SlotKey::from_u64(index); }

void charge_hash(const GasSchedule& schedule, GasMeter& meter, OpTrace& trace,
                 std::uint64_t byte_len) {
    const Gas gas = hash_cost(schedule, byte_len);
    meter.charge(gas);
    trace.ops.push_back(HashOp{byte_len, gas});
}

void charge_compute(const GasSchedule& schedule, GasMeter& meter, OpTrace& trace,
                    std::uint32_t units) {
    const Gas gas = schedule.compute_unit * units;
    meter.charge(gas);
    trace.ops.push_back(ComputeOp{units, gas});
}

/// Derives the mapping entry slot for `key` under `base`, emitting the hash op.
SlotKey derive_slot(const GasSchedule& schedule, GasMeter& meter, OpTrace& trace,
                    std::uint64_t base, std::string_view key, DigestFn digest) {
    DerivedSlot derived = mapping_slot(schedule, base_slot(base), key, digest);
    meter.charge(derived.gas);
    trace.ops.push_back(HashOp{derived.hashed_bytes, derived.gas});
    return derived.slot;
}

/// Writes the full string encoding, emitting hash + storage ops.
void store_string(const GasSchedule& schedule, AccessSet& access, ContractStorage& storage,
                  GasMeter& meter, OpTrace& trace, const SlotKey& head, std::string_view text,
                  DigestFn digest) {
    const EncodedString enc = encode_string(schedule, head, text, digest);
    if (enc.long_form) {
        meter.charge(enc.derivation_gas);
        trace.ops.push_back(HashOp{32, enc.derivation_gas});
    }
    for (const auto& [slot, value] : enc.entries)
        trace.ops.push_back(write_word(schedule, access, storage, slot, value, meter));
}

/// Priced read of a stored string (head word, then data words for the long
/// form, with the data-slot derivation hash in between).
std::string load_string(const GasSchedule& schedule, AccessSet& access, ContractStorage& storage,
                        GasMeter& meter, OpTrace& trace, const SlotKey& head, DigestFn digest) {
    auto [head_word, head_op] = read_word(schedule, access, storage, head, meter);
    trace.ops.push_back(head_op);
    if ((head_word.bytes[31] & 1) == 0) {
        const std::uint64_t len = head_word.bytes[31] / 2;
        return {reinterpret_cast<const char*>(head_word.bytes.data()), len};
    }
    const std::uint64_t len = (head_word.low_u64() - 1) / 2;
    charge_hash(schedule, meter, trace, 32);
    std::string text;
    text.reserve(len);
    SlotKey data{digest({head.value.bytes.data(), head.value.bytes.size()})};
    for (std::uint64_t offset = 0; offset < len; offset += 32) {
        auto [w, op] = read_word(schedule, access, storage, data, meter);
        trace.ops.push_back(op);
        const std::uint64_t n = std::min<std::uint64_t>(32, len - offset);
        text.append(reinterpret_cast<const char*>(w.bytes.data()), n);
        data = data.next();
    }
    return text;
}

Outcome add_file_v1(const GasSchedule& schedule, const CallRequest& call,
                    ContractStorage& storage, AccessSet& access, GasMeter& meter, OpTrace& trace,
                    DigestFn digest) {
    const SlotKey name_head = derive_slot(schedule, meter, trace, kNamesBaseSlot, call.name, digest);
    store_string(schedule, access, storage, meter, trace, name_head, call.name, digest);
    const SlotKey hash_slot =
        derive_slot(schedule, meter, trace, kHashesBaseSlot, call.name, digest);
    trace.ops.push_back(write_word(schedule, access, storage, hash_slot, call.hash, meter));
    return Outcome::ok();
}

Outcome add_file_v3(const GasSchedule& schedule, const CallRequest& call,
                    ContractStorage& storage, AccessSet& access, GasMeter& meter, OpTrace& trace,
                    DigestFn digest) {
    const SlotKey record_head =
        derive_slot(schedule, meter, trace, kRecordsBaseSlot, call.name, digest);
    const FileRecordLayout record = file_record_layout(record_head);
    auto [owner_word, owner_op] = read_word(schedule, access, storage, record.owner, meter);
    trace.ops.push_back(owner_op);
    const Address owner = Address::from_word(owner_word);
    if (!owner.is_zero() && owner != call.caller) return Outcome::revert("not-owner");

    const SlotKey name_head = derive_slot(schedule, meter, trace, kNamesBaseSlot, call.name, digest);
    store_string(schedule, access, storage, meter, trace, name_head, call.name, digest);
    trace.ops.push_back(
        write_word(schedule, access, storage, record.owner, call.caller.to_word(), meter));
    trace.ops.push_back(write_word(schedule, access, storage, record.content, call.hash, meter));
    trace.ops.push_back(write_word(schedule, access, storage, record.created_at,
                                   Word::from_u64(call.timestamp), meter));
    trace.ops.push_back(write_word(schedule, access, storage, record.updated_at,
                                   Word::from_u64(call.timestamp), meter));
    return Outcome::ok();
}

Outcome update_file(const GasSchedule& schedule, AppVersion version, const CallRequest& call,
                    ContractStorage& storage, AccessSet& access, GasMeter& meter, OpTrace& trace,
                    DigestFn digest) {
    if (version == AppVersion::V2) {
        const SlotKey hash_slot =
            derive_slot(schedule, meter, trace, kHashesBaseSlot, call.name, digest);
        trace.ops.push_back(write_word(schedule, access, storage, hash_slot, call.hash, meter));
        return Outcome::ok();
    }
    // V3: only the record owner may update, and the record must exist.
    const SlotKey record_head =
        derive_slot(schedule, meter, trace, kRecordsBaseSlot, call.name, digest);
    const FileRecordLayout record = file_record_layout(record_head);
    auto [owner_word, owner_op] = read_word(schedule, access, storage, record.owner, meter);
    trace.ops.push_back(owner_op);
    if (Address::from_word(owner_word) != call.caller) return Outcome::revert("not-owner");
    trace.ops.push_back(write_word(schedule, access, storage, record.content, call.hash, meter));
    trace.ops.push_back(write_word(schedule, access, storage, record.updated_at,
                                   Word::from_u64(call.timestamp), meter));
    return Outcome::ok();
}

Outcome get_file_name(const GasSchedule& schedule, const CallRequest& call,
                      ContractStorage& storage, AccessSet& access, GasMeter& meter, OpTrace& trace,
                      DigestFn digest) {
    const SlotKey name_head =
        derive_slot(schedule, meter, trace, kNamesBaseSlot, call.name, digest);
    return Outcome::ok(load_string(schedule, access, storage, meter, trace, name_head, digest));
}

Outcome get_file_hash(const GasSchedule& schedule, AppVersion version, const CallRequest& call,
                      ContractStorage& storage, AccessSet& access, GasMeter& meter, OpTrace& trace,
                      DigestFn digest) {
    if (version == AppVersion::V3) {
        const SlotKey record_head =
            derive_slot(schedule, meter, trace, kRecordsBaseSlot, call.name, digest);
        auto [value, op] = read_word(schedule, access, storage,
                                     file_record_layout(record_head).content, meter);
        trace.ops.push_back(op);
        return Outcome::ok(value);
    }
    const SlotKey hash_slot =
        derive_slot(schedule, meter, trace, kHashesBaseSlot, call.name, digest);
    auto [value, op] = read_word(schedule, access, storage, hash_slot, meter);
    trace.ops.push_back(op);
    return Outcome::ok(value);
}

}  // namespace

const char* to_string(AppVersion v) {
    switch (v) {
        case AppVersion::V1: return "v1";
        case AppVersion::V2: return "v2";
        case AppVersion::V3: return "v3";
    }
    return "?";
}

std::optional<AppVersion> app_version_from_string(std::string_view s) {
    if (s == "v1") return AppVersion::V1;
    if (s == "v2") return AppVersion::V2;
    if (s == "v3") return AppVersion::V3;
    return std::nullopt;
}

const char* to_string(AppFunction f) {
    switch (f) {
        case AppFunction::AddFile: return "addFile";
        case AppFunction::UpdateFile: return "updateFile";
        case AppFunction::GetFileName: return "getFileName";
        case AppFunction::GetFileHash: return "getFileHash";
        case AppFunction::CompareHashes: return "compareHashes";
    }
    return "?";
}

std::optional<AppFunction> app_function_from_string(std::string_view s) {
    for (AppFunction f : {AppFunction::AddFile, AppFunction::UpdateFile, AppFunction::GetFileName,
                          AppFunction::GetFileHash, AppFunction::CompareHashes})
        if (s == to_string(f)) return f;
    return std::nullopt;
}

std::vector<AppFunction> functions_of(AppVersion version) {
    std::vector<AppFunction> fns{AppFunction::AddFile};
    if (version != AppVersion::V1) fns.push_back(AppFunction::UpdateFile);
    fns.insert(fns.end(),
               {AppFunction::GetFileName, AppFunction::GetFileHash, AppFunction::CompareHashes});
    return fns;
}

bool version_has(AppVersion version, AppFunction fn) {
    return fn != AppFunction::UpdateFile || version != AppVersion::V1;
}

const char* signature_of(AppFunction f) {
    switch (f) {
        case AppFunction::AddFile: return "addFile(string,bytes32)";
        case AppFunction::UpdateFile: return "updateFile(string,bytes32)";
        case AppFunction::GetFileName: return "getFileName(string)";
        case AppFunction::GetFileHash: return "getFileHash(string)";
        case AppFunction::CompareHashes: return "compareHashes(bytes32,bytes32)";
    }
    return "";
}

std::array<std::uint8_t, 4> function_selector(AppFunction f) {
    const Word digest = keccak256(std::string_view{signature_of(f)});
    return {digest.bytes[0], digest.bytes[1], digest.bytes[2], digest.bytes[3]};
}

std::vector<std::uint8_t> call_payload(const CallRequest& call) {
    const auto selector = function_selector(call.fn);
    std::vector<std::uint8_t> payload(selector.begin(), selector.end());
    const auto append_word = [&payload](const Word& w) {
        payload.insert(payload.end(), w.bytes.begin(), w.bytes.end());
    };
    switch (call.fn) {
        case AppFunction::AddFile:
        case AppFunction::UpdateFile: {
            const auto name = as_bytes(call.name);
            payload.insert(payload.end(), name.begin(), name.end());
            append_word(call.hash);
            break;
        }
        case AppFunction::GetFileName:
        case AppFunction::GetFileHash: {
            const auto name = as_bytes(call.name);
            payload.insert(payload.end(), name.begin(), name.end());
            break;
        }
        case AppFunction::CompareHashes:
            append_word(call.lhs);
            append_word(call.rhs);
            break;
    }
    return payload;
}

Outcome execute(const GasSchedule& schedule, AppVersion version, const CallRequest& call,
                ContractStorage& storage, AccessSet& access, GasMeter& meter, OpTrace& trace,
                const AppParams& params) {
    if (!version_has(version, call.fn)) return Outcome::revert("unknown-function");
    switch (call.fn) {
        case AppFunction::AddFile:
            return version == AppVersion::V3
                       ? add_file_v3(schedule, call, storage, access, meter, trace, params.digest)
                       : add_file_v1(schedule, call, storage, access, meter, trace, params.digest);
        case AppFunction::UpdateFile:
            return update_file(schedule, version, call, storage, access, meter, trace,
                               params.digest);
        case AppFunction::GetFileName:
            return get_file_name(schedule, call, storage, access, meter, trace, params.digest);
        case AppFunction::GetFileHash:
            return get_file_hash(schedule, version, call, storage, access, meter, trace,
                                 params.digest);
        case AppFunction::CompareHashes:
            charge_compute(schedule, meter, trace, params.compare_compute_units);
            return Outcome::ok(call.lhs == call.rhs);
    }
    return Outcome::revert("unknown-function");
}

}  // namespace gaslab
