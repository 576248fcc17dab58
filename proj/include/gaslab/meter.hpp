// gaslab: gas cost models for upgradeable smart contract patterns
// Copyright 2026 The gaslab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gaslab/schedule.hpp>
#include <gaslab/words.hpp>

#include <set>
#include <span>
#include <utility>

namespace gaslab {

/// Warm/cold tracking for one transaction. Fresh at every transaction start;
/// marking is monotone (nothing ever cools down within a tx).
class AccessSet {
  public:
    /// Marks the slot warm. Returns true when it was cold before this touch.
    bool touch_slot(ContractId contract, const SlotKey& slot) {
        return warm_slots_.emplace(contract, slot).second;
    }
    /// Marks the account warm. Returns true when it was cold before.
    bool touch_account(ContractId contract) { return warm_accounts_.insert(contract).second; }

    [[nodiscard]] bool slot_is_warm(ContractId contract, const SlotKey& slot) const {
        return warm_slots_.contains({contract, slot});
    }
    [[nodiscard]] bool account_is_warm(ContractId contract) const {
        return warm_accounts_.contains(contract);
    }

  private:
    std::set<std::pair<ContractId, SlotKey>> warm_slots_;
    std::set<ContractId> warm_accounts_;
};

/// Accumulates gas used and the refund counter for one transaction. Refunds
/// are only applied (capped) when the transaction finalizes.
class GasMeter {
  public:
    void charge(Gas amount) { used_ += amount; }
    void add_refund(SignedGas delta) { refund_ += delta; }
    /// Reverted frames forfeit their accumulated refunds.
    void forfeit_refunds() { refund_ = 0; }

    [[nodiscard]] Gas used() const { return used_; }
    [[nodiscard]] SignedGas refund() const { return refund_; }

  private:
    Gas used_ = 0;
    SignedGas refund_ = 0;
};

/// One storage slot: `original` is the committed value at transaction start,
/// `current` the in-flight value. Both equal between transactions.
struct StorageCell {
    Word original;
    Word current;
};

/// Result of pricing one storage write.
struct SstoreResult {
    Gas cost = 0;
    SignedGas refund_delta = 0;
    bool cold = false;
};

/// Cold/warm load price; marks the slot warm.
Gas sload_cost(const GasSchedule& schedule, AccessSet& access, ContractId contract,
               const SlotKey& slot);

/// Net-metered write price for storing `new_value` into `cell`. Applies the
/// cold surcharge on first touch, classifies against (original, current),
/// updates cell.current, and reports the refund-counter delta.
SstoreResult sstore_cost(const GasSchedule& schedule, AccessSet& access, ContractId contract,
                         const SlotKey& slot, StorageCell& cell, const Word& new_value);

/// Cold/warm account touch price; marks the account warm.
Gas account_access_cost(const GasSchedule& schedule, AccessSet& access, ContractId contract);

/// Digest pricing: base plus per-word fee over ceil(byte_len / 32) words.
Gas hash_cost(const GasSchedule& schedule, std::uint64_t byte_len);

/// Payload pricing: per-byte fee split by zero/nonzero content.
Gas calldata_cost(const GasSchedule& schedule, std::span<const std::uint8_t> payload);
Gas calldata_cost(const GasSchedule& schedule, std::uint64_t zero_bytes,
                  std::uint64_t nonzero_bytes);

/// Total for the transaction: used minus the capped refund.
Gas finalize_tx(const GasSchedule& schedule, Gas used, SignedGas refund);
inline Gas finalize_tx(const GasSchedule& schedule, const GasMeter& meter) {
    return finalize_tx(schedule, meter.used(), meter.refund());
}

}  // namespace gaslab
