// gaslab: gas cost models for upgradeable smart contract patterns
// Copyright 2026 The gaslab Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gaslab/meter.hpp>

#include <algorithm>
#include <cassert>

namespace gaslab {

Gas sload_cost(const GasSchedule& schedule, AccessSet& access, ContractId contract,
               const SlotKey& slot) {
    const bool cold = access.touch_slot(contract, slot);
    return cold ? schedule.cold_sload : schedule.warm_sload;
}

SstoreResult sstore_cost(const GasSchedule& schedule, AccessSet& access, ContractId contract,
                         const SlotKey& slot, StorageCell& cell, const Word& new_value) {
    SstoreResult r;
    r.cold = access.touch_slot(contract, slot);
    if (r.cold) r.cost += schedule.cold_sload;

    const Word& original = cell.original;
    const Word& current = cell.current;

    if (new_value == current) {
        r.cost += schedule.sstore_noop;
    } else if (current == original) {
        // Clean slot: first effective write in this transaction.
        if (original.is_zero()) {
            r.cost += schedule.sstore_set;
        } else {
            r.cost += schedule.sstore_reset;
            if (new_value.is_zero()) r.refund_delta += static_cast<SignedGas>(schedule.refund_clear);
        }
    } else {
        // Dirty slot: already rewritten in this transaction.
        r.cost += schedule.sstore_noop;
        if (!original.is_zero()) {
            if (current.is_zero())
                r.refund_delta -= static_cast<SignedGas>(schedule.refund_clear);
            if (new_value.is_zero())
                r.refund_delta += static_cast<SignedGas>(schedule.refund_clear);
        }
        if (new_value == original) {
            if (original.is_zero())
                r.refund_delta +=
                    static_cast<SignedGas>(schedule.sstore_set - schedule.sstore_noop);
            else
                r.refund_delta +=
                    static_cast<SignedGas>(schedule.sstore_reset - schedule.sstore_noop);
        }
    }

    cell.current = new_value;
    return r;
}

Gas account_access_cost(const GasSchedule& schedule, AccessSet& access, ContractId contract) {
    const bool cold = access.touch_account(contract);
    return cold ? schedule.cold_account_access : schedule.warm_account_access;
}

Gas hash_cost(const GasSchedule& schedule, std::uint64_t byte_len) {
    const std::uint64_t words = (byte_len + 31) / 32;
    return schedule.hash_base + schedule.hash_per_word * words;
}

Gas calldata_cost(const GasSchedule& schedule, std::span<const std::uint8_t> payload) {
    std::uint64_t zero = 0;
    for (std::uint8_t b : payload)
        if (b == 0) ++zero;
    return calldata_cost(schedule, zero, payload.size() - zero);
}

Gas calldata_cost(const GasSchedule& schedule, std::uint64_t zero_bytes,
                  std::uint64_t nonzero_bytes) {
    return schedule.calldata_zero_byte * zero_bytes + schedule.calldata_nonzero_byte * nonzero_bytes;
}

Gas finalize_tx(const GasSchedule& schedule, Gas used, SignedGas refund) {
    assert(refund >= 0);
    const Gas cap = used / schedule.refund_cap_divisor;
    const Gas applied = std::min(cap, static_cast<Gas>(std::max<SignedGas>(refund, 0)));
    return used - applied;
}

}  // namespace gaslab
