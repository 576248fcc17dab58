// gaslab: gas cost models for upgradeable smart contract patterns
// Copyright 2026 The gaslab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gaslab/app.hpp>
#include <gaslab/storage.hpp>

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace gaslab {

/// The three deployment architectures under comparison.
enum class Pattern { Classic, Proxy, Diamond };

const char* to_string(Pattern p);
std::optional<Pattern> pattern_from_string(std::string_view s);

/// Code-size knobs for one contract; calldata for the creation payload is
/// priced from `initcode_size` at the given nonzero-byte density.
struct ContractSize {
    std::uint64_t deployed_size = 0;
    std::uint64_t initcode_size = 0;
    double nonzero_fraction = 0.85;
};

/// Size table of one pattern, keyed by canonical contract name.
using SizeTable = std::map<std::string, ContractSize>;

/// One contract creation inside a deployment plan.
struct ContractSpec {
    std::string name;
    ContractSize size;
};

/// One selector-table write performed by a diamond cut transaction.
struct CutEntry {
    std::array<std::uint8_t, 4> selector{};
    std::string facet;
};

/// Everything one version rollout deploys and rewires: contract creations in
/// order, then an optional cut transaction (Diamond) or pointer-update
/// transaction (Proxy upgrades). Proxy initial deployments instead set the
/// pointer from the proxy constructor.
struct DeploymentPlan {
    Pattern pattern = Pattern::Classic;
    AppVersion version = AppVersion::V1;
    std::vector<ContractSpec> contracts;
    std::vector<CutEntry> cut;          ///< Diamond selector-table writes
    bool pointer_update = false;        ///< Proxy upgrade transaction
    bool pointer_in_constructor = false;///< Proxy initial deployment
    std::string pointer_target;         ///< implementation receiving the pointer

    [[nodiscard]] std::size_t cut_operations() const { return cut.size(); }
};

/// Canonical contract names per pattern and version.
std::string classic_contract_name(AppVersion v);
std::string implementation_contract_name(AppVersion v);
std::string app_facet_contract_name(AppVersion v);
inline constexpr const char* kProxyContractName = "proxy";
inline constexpr const char* kDiamondContractName = "diamond";
inline constexpr const char* kCutFacetContractName = "cut-facet";
inline constexpr const char* kLoupeFacetContractName = "loupe-facet";

/// All contract names a pattern can ever deploy (per version where
/// applicable), in deployment order; used to validate size tables.
std::vector<std::string> contract_names_for(Pattern pattern, const std::vector<AppVersion>& versions);

/// Plan for the first deployed version of a pattern.
DeploymentPlan initial_plan(Pattern pattern, AppVersion version, const SizeTable& sizes);

/// Plan for a single-step upgrade; only `to == from + 1` is a valid
/// transition. Classic redeploys, Proxy swaps the implementation and updates
/// the pointer, Diamond replaces the app facet and re-cuts its selectors.
DeploymentPlan upgrade_plan(Pattern pattern, AppVersion from, AppVersion to,
                            const SizeTable& sizes);

/// Result of one external call priced end to end as its own transaction.
struct TxResult {
    Gas total = 0;      ///< finalized: used minus the capped refund
    Gas used = 0;       ///< before refunds
    SignedGas refund = 0;
    Gas intrinsic = 0;  ///< flat tx fee included in `total`
    std::uint64_t calldata_zero = 0;
    std::uint64_t calldata_nonzero = 0;
    OpTrace trace;
};

/// Holds the storage and wiring of one pattern instance across deployments,
/// upgrades, and calls. Every external call runs as an independent
/// transaction (fresh access set); app storage lives in the proxy/diamond
/// contract for those patterns, so it survives upgrades, while Classic works
/// on the freshly deployed contract every version.
class PatternWorld {
  public:
    explicit PatternWorld(Pattern pattern) : pattern_(pattern) {}

    [[nodiscard]] Pattern pattern() const { return pattern_; }
    [[nodiscard]] std::optional<AppVersion> active_version() const { return active_version_; }

    /// Prices and applies one deployment plan; returns its total gas.
    Gas apply_plan(const DeploymentPlan& plan, const GasSchedule& schedule);

    /// Runs one external call against the active version.
    TxResult call(const CallRequest& request, const GasSchedule& schedule,
                  const AppParams& params = {});

    /// Dispatch-prefix pricing alone, as the first call of a transaction
    /// (fresh access set) — empty for Classic.
    OpTrace dispatch_only(AppFunction fn, const GasSchedule& schedule);

    /// Storage holding the app state for the active version.
    ContractStorage& app_storage();

    /// Raw storage of a specific contract (created on demand).
    ContractStorage& storage_of(ContractId id);

    /// Fixed registry lookups.
    static ContractId contract_id(std::string_view name);
    static const std::string& contract_name(ContractId id);
    static Address contract_address(ContractId id);

    /// Well-known slots of the wiring metadata.
    static SlotKey implementation_slot();
    static SlotKey selector_table_slot(std::span<const std::uint8_t> selector,
                                       const GasSchedule& schedule, Gas* hash_gas = nullptr,
                                       std::uint64_t* hashed_bytes = nullptr);

  private:
    struct DispatchOutcome {
        bool reverted = false;
        std::string reason;
        ContractStorage* context = nullptr;
    };

    DispatchOutcome run_dispatch(const std::array<std::uint8_t, 4>& selector,
                                 const GasSchedule& schedule, AccessSet& access, GasMeter& meter,
                                 OpTrace& trace);

    Pattern pattern_;
    std::optional<AppVersion> active_version_;
    std::map<ContractId, ContractStorage> storages_;
};

}  // namespace gaslab
