// gaslab: gas cost models for upgradeable smart contract patterns
// Copyright 2026 The gaslab Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gaslab/dispatch.hpp>
#include <gaslab/errors.hpp>
#include <gaslab/keccak.hpp>

#include <algorithm>
#include <cmath>

namespace gaslab {
namespace {

/// Fixed handles for every contract the three patterns can create.
struct RegistryEntry {
    ContractId id;
    const char* name;
};

constexpr RegistryEntry kRegistry[] = {
    {1, "classic-v1"},    {2, "classic-v2"},     {3, "classic-v3"},
    {10, "proxy"},        {11, "implementation-v1"}, {12, "implementation-v2"},
    {13, "implementation-v3"},
    {20, "diamond"},      {21, "cut-facet"},     {22, "loupe-facet"},
    {23, "app-facet-v1"}, {24, "app-facet-v2"},  {25, "app-facet-v3"},
};

/// Synthetic account address: a digest of the canonical name, densified so
/// the byte mix matches real account addresses (no zero bytes).
Address derive_address(std::string_view name) {
    const Word digest = keccak256("gaslab.contract." + std::string(name));
    Address a = Address::from_word(digest);
    for (auto& b : a.bytes)
        if (b == 0) b = 1;
    return a;
}

const std::map<Address, ContractId>& address_index() {
    static const std::map<Address, ContractId> index = [] {
        std::map<Address, ContractId> m;
        for (const auto& e : kRegistry) m[derive_address(e.name)] = e.id;
        return m;
    }();
    return index;
}

std::array<std::uint8_t, 4> selector_of_signature(const char* signature) {
    const Word digest = keccak256(std::string_view{signature});
    return {digest.bytes[0], digest.bytes[1], digest.bytes[2], digest.bytes[3]};
}

/// Selectors the diamond wiring itself occupies (cut + loupe entries).
const std::vector<std::pair<const char*, const char*>>& infra_selectors() {
    static const std::vector<std::pair<const char*, const char*>> entries = {
        {"diamondCut(bytes)", kCutFacetContractName},
        {"facets()", kLoupeFacetContractName},
        {"facetFunctionSelectors(address)", kLoupeFacetContractName},
        {"facetAddresses()", kLoupeFacetContractName},
        {"facetAddress(bytes4)", kLoupeFacetContractName},
    };
    return entries;
}

ContractSize lookup_size(const SizeTable& sizes, const std::string& name) {
    const auto it = sizes.find(name);
    if (it == sizes.end())
        throw ValidationError("size table has no entry for contract \"" + name + "\"");
    return it->second;
}

std::vector<CutEntry> app_cut_entries(AppVersion version) {
    std::vector<CutEntry> cut;
    for (AppFunction fn : functions_of(version))
        cut.push_back({function_selector(fn), app_facet_contract_name(version)});
    return cut;
}

std::uint64_t nonzero_byte_count(const ContractSize& size) {
    const double f = std::clamp(size.nonzero_fraction, 0.0, 1.0);
    const auto nz = static_cast<std::uint64_t>(std::llround(f * static_cast<double>(size.initcode_size)));
    return std::min(nz, size.initcode_size);
}

}  // namespace

const char* to_string(Pattern p) {
    switch (p) {
        case Pattern::Classic: return "classic";
        case Pattern::Proxy: return "proxy";
        case Pattern::Diamond: return "diamond";
    }
    return "?";
}

std::optional<Pattern> pattern_from_string(std::string_view s) {
    if (s == "classic") return Pattern::Classic;
    if (s == "proxy") return Pattern::Proxy;
    if (s == "diamond") return Pattern::Diamond;
    return std::nullopt;
}

std::string classic_contract_name(AppVersion v) {
    return std::string("classic-") + to_string(v);
}

std::string implementation_contract_name(AppVersion v) {
    return std::string("implementation-") + to_string(v);
}

std::string app_facet_contract_name(AppVersion v) {
    return std::string("app-facet-") + to_string(v);
}

std::vector<std::string> contract_names_for(Pattern pattern,
                                            const std::vector<AppVersion>& versions) {
    std::vector<std::string> names;
    switch (pattern) {
        case Pattern::Classic:
            for (AppVersion v : versions) names.push_back(classic_contract_name(v));
            break;
        case Pattern::Proxy:
            names.push_back(kProxyContractName);
            for (AppVersion v : versions) names.push_back(implementation_contract_name(v));
            break;
        case Pattern::Diamond:
            names.insert(names.end(),
                         {kDiamondContractName, kCutFacetContractName, kLoupeFacetContractName});
            for (AppVersion v : versions) names.push_back(app_facet_contract_name(v));
            break;
    }
    return names;
}

DeploymentPlan initial_plan(Pattern pattern, AppVersion version, const SizeTable& sizes) {
    DeploymentPlan plan;
    plan.pattern = pattern;
    plan.version = version;
    switch (pattern) {
        case Pattern::Classic: {
            const std::string name = classic_contract_name(version);
            plan.contracts.push_back({name, lookup_size(sizes, name)});
            break;
        }
        case Pattern::Proxy: {
            const std::string impl = implementation_contract_name(version);
            plan.contracts.push_back({impl, lookup_size(sizes, impl)});
            plan.contracts.push_back({kProxyContractName, lookup_size(sizes, kProxyContractName)});
            plan.pointer_in_constructor = true;
            plan.pointer_target = impl;
            break;
        }
        case Pattern::Diamond: {
            for (const char* name :
                 {kDiamondContractName, kCutFacetContractName, kLoupeFacetContractName})
                plan.contracts.push_back({name, lookup_size(sizes, name)});
            const std::string facet = app_facet_contract_name(version);
            plan.contracts.push_back({facet, lookup_size(sizes, facet)});
            for (const auto& [signature, target] : infra_selectors())
                plan.cut.push_back({selector_of_signature(signature), target});
            for (CutEntry& entry : app_cut_entries(version)) plan.cut.push_back(std::move(entry));
            break;
        }
    }
    return plan;
}

DeploymentPlan upgrade_plan(Pattern pattern, AppVersion from, AppVersion to,
                            const SizeTable& sizes) {
    if (static_cast<int>(to) != static_cast<int>(from) + 1)
        throw ValidationError(std::string("invalid upgrade transition ") + to_string(from) +
                              " -> " + to_string(to) + "; only single-step upgrades exist");
    DeploymentPlan plan;
    plan.pattern = pattern;
    plan.version = to;
    switch (pattern) {
        case Pattern::Classic: {
            const std::string name = classic_contract_name(to);
            plan.contracts.push_back({name, lookup_size(sizes, name)});
            break;
        }
        case Pattern::Proxy: {
            const std::string impl = implementation_contract_name(to);
            plan.contracts.push_back({impl, lookup_size(sizes, impl)});
            plan.pointer_update = true;
            plan.pointer_target = impl;
            break;
        }
        case Pattern::Diamond: {
            const std::string facet = app_facet_contract_name(to);
            plan.contracts.push_back({facet, lookup_size(sizes, facet)});
            plan.cut = app_cut_entries(to);
            break;
        }
    }
    return plan;
}

ContractId PatternWorld::contract_id(std::string_view name) {
    for (const auto& e : kRegistry)
        if (name == e.name) return e.id;
    throw ValidationError("unknown contract name \"" + std::string(name) + "\"");
}

const std::string& PatternWorld::contract_name(ContractId id) {
    static const std::map<ContractId, std::string> names = [] {
        std::map<ContractId, std::string> m;
        for (const auto& e : kRegistry) m[e.id] = e.name;
        return m;
    }();
    const auto it = names.find(id);
    if (it == names.end()) throw ValidationError("unknown contract id");
    return it->second;
}

Address PatternWorld::contract_address(ContractId id) {
    return derive_address(contract_name(id));
}

SlotKey PatternWorld::implementation_slot() {
    static const SlotKey slot{keccak256("gaslab.proxy.implementation")};
    return slot;
}

SlotKey PatternWorld::selector_table_slot(std::span<const std::uint8_t> selector,
                                          const GasSchedule& schedule, Gas* hash_gas,
                                          std::uint64_t* hashed_bytes) {
    static const SlotKey base{keccak256("gaslab.diamond.selector-table")};
    const DerivedSlot derived = mapping_slot(schedule, base, selector);
    if (hash_gas) *hash_gas = derived.gas;
    if (hashed_bytes) *hashed_bytes = derived.hashed_bytes;
    return derived.slot;
}

ContractStorage& PatternWorld::storage_of(ContractId id) {
    const auto it = storages_.find(id);
    if (it != storages_.end()) return it->second;
    return storages_.emplace(id, ContractStorage(id)).first->second;
}

ContractStorage& PatternWorld::app_storage() {
    if (!active_version_) throw ValidationError("no version deployed yet");
    switch (pattern_) {
        case Pattern::Classic:
            return storage_of(contract_id(classic_contract_name(*active_version_)));
        case Pattern::Proxy:
            return storage_of(contract_id(kProxyContractName));
        case Pattern::Diamond:
            return storage_of(contract_id(kDiamondContractName));
    }
    throw ValidationError("unreachable pattern");
}

Gas PatternWorld::apply_plan(const DeploymentPlan& plan, const GasSchedule& schedule) {
    Gas total = 0;

    for (const ContractSpec& contract : plan.contracts) {
        AccessSet access;
        GasMeter meter;
        meter.charge(schedule.tx_intrinsic);
        meter.charge(schedule.tx_create);
        const std::uint64_t nonzero = nonzero_byte_count(contract.size);
        meter.charge(calldata_cost(schedule, contract.size.initcode_size - nonzero, nonzero));
        meter.charge(schedule.code_deposit_per_byte * contract.size.deployed_size);

        if (plan.pointer_in_constructor && contract.name == kProxyContractName) {
            // The proxy constructor stores the implementation pointer.
            ContractStorage& proxy = storage_of(contract_id(kProxyContractName));
            const Address impl = contract_address(contract_id(plan.pointer_target));
            write_word(schedule, access, proxy, implementation_slot(), impl.to_word(), meter);
            proxy.commit_tx();
        }
        total += finalize_tx(schedule, meter);
    }

    if (!plan.cut.empty()) {
        // Diamond cut: one transaction rewriting the selector table.
        AccessSet access;
        GasMeter meter;
        meter.charge(schedule.tx_intrinsic);
        ContractStorage& diamond = storage_of(contract_id(kDiamondContractName));
        for (const CutEntry& entry : plan.cut) {
            Gas hash_gas = 0;
            const SlotKey slot = selector_table_slot(entry.selector, schedule, &hash_gas);
            meter.charge(hash_gas);
            const Address facet = contract_address(contract_id(entry.facet));
            write_word(schedule, access, diamond, slot, facet.to_word(), meter);
        }
        diamond.commit_tx();
        total += finalize_tx(schedule, meter);
    }

    if (plan.pointer_update) {
        // Proxy upgrade: pointer rewrite as its own transaction.
        AccessSet access;
        GasMeter meter;
        meter.charge(schedule.tx_intrinsic);
        const Address impl = contract_address(contract_id(plan.pointer_target));
        std::vector<std::uint8_t> payload;
        const auto selector = selector_of_signature("upgradeTo(address)");
        payload.insert(payload.end(), selector.begin(), selector.end());
        const Word arg = impl.to_word();
        payload.insert(payload.end(), arg.bytes.begin(), arg.bytes.end());
        meter.charge(calldata_cost(schedule, payload));
        ContractStorage& proxy = storage_of(contract_id(kProxyContractName));
        write_word(schedule, access, proxy, implementation_slot(), arg, meter);
        proxy.commit_tx();
        total += finalize_tx(schedule, meter);
    }

    active_version_ = plan.version;
    return total;
}

PatternWorld::DispatchOutcome PatternWorld::run_dispatch(
    const std::array<std::uint8_t, 4>& selector, const GasSchedule& schedule, AccessSet& access,
    GasMeter& meter, OpTrace& trace) {
    DispatchOutcome out;
    switch (pattern_) {
        case Pattern::Classic: {
            out.context = &storage_of(contract_id(classic_contract_name(*active_version_)));
            return out;
        }
        case Pattern::Proxy: {
            ContractStorage& proxy = storage_of(contract_id(kProxyContractName));
            auto [pointer, op] = read_word(schedule, access, proxy, implementation_slot(), meter);
            trace.ops.push_back(op);
            const auto it = address_index().find(Address::from_word(pointer));
            if (it == address_index().end()) {
                out.reverted = true;
                out.reason = "unknown-selector";
                return out;
            }
            const ContractId impl = it->second;
            const bool cold = !access.account_is_warm(impl);
            const Gas gas = account_access_cost(schedule, access, impl) + schedule.call_base;
            meter.charge(gas);
            trace.ops.push_back(CallOverheadOp{impl, cold, gas});
            out.context = &proxy;
            return out;
        }
        case Pattern::Diamond: {
            ContractStorage& diamond = storage_of(contract_id(kDiamondContractName));
            Gas hash_gas = 0;
            std::uint64_t hashed_bytes = 0;
            const SlotKey slot = selector_table_slot(selector, schedule, &hash_gas, &hashed_bytes);
            meter.charge(hash_gas);
            trace.ops.push_back(HashOp{hashed_bytes, hash_gas});
            auto [entry, op] = read_word(schedule, access, diamond, slot, meter);
            trace.ops.push_back(op);
            out.context = &diamond;
            if (entry.is_zero()) {
                out.reverted = true;
                out.reason = "unknown-selector";
                return out;
            }
            // Unpack the routing entry: two abstract compute steps.
            const Gas unpack = 2 * schedule.compute_unit;
            meter.charge(unpack);
            trace.ops.push_back(ComputeOp{2, unpack});
            const auto it = address_index().find(Address::from_word(entry));
            if (it == address_index().end()) {
                out.reverted = true;
                out.reason = "unknown-selector";
                return out;
            }
            const ContractId facet = it->second;
            const bool cold = !access.account_is_warm(facet);
            const Gas gas = account_access_cost(schedule, access, facet) + schedule.call_base;
            meter.charge(gas);
            trace.ops.push_back(CallOverheadOp{facet, cold, gas});
            return out;
        }
    }
    throw ValidationError("unreachable pattern");
}

TxResult PatternWorld::call(const CallRequest& request, const GasSchedule& schedule,
                            const AppParams& params) {
    if (!active_version_) throw ValidationError("no version deployed yet");

    AccessSet access;
    GasMeter meter;
    TxResult result;
    result.intrinsic = schedule.tx_intrinsic;
    meter.charge(schedule.tx_intrinsic);

    const std::vector<std::uint8_t> payload = call_payload(request);
    for (std::uint8_t b : payload) (b == 0 ? result.calldata_zero : result.calldata_nonzero)++;
    meter.charge(calldata_cost(schedule, result.calldata_zero, result.calldata_nonzero));

    DispatchOutcome dispatch =
        run_dispatch(function_selector(request.fn), schedule, access, meter, result.trace);
    if (dispatch.reverted) {
        result.trace.outcome = Outcome::revert(dispatch.reason);
    } else {
        result.trace.outcome = execute(schedule, *active_version_, request, *dispatch.context,
                                       access, meter, result.trace, params);
    }

    ContractStorage* context = dispatch.context;
    if (result.trace.outcome.reverted) {
        meter.forfeit_refunds();
        if (context) context->revert_tx();
    } else if (context) {
        context->commit_tx();
    }

    result.used = meter.used();
    result.refund = meter.refund();
    result.total = finalize_tx(schedule, meter);
    return result;
}

OpTrace PatternWorld::dispatch_only(AppFunction fn, const GasSchedule& schedule) {
    if (!active_version_) throw ValidationError("no version deployed yet");
    AccessSet access;
    GasMeter meter;
    OpTrace trace;
    const DispatchOutcome out = run_dispatch(function_selector(fn), schedule, access, meter, trace);
    if (out.reverted) trace.outcome = Outcome::revert(out.reason);
    return trace;
}

}  // namespace gaslab
