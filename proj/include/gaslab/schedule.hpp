// gaslab: gas cost models for upgradeable smart contract patterns
// Copyright 2026 The gaslab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gaslab/words.hpp>

#include <string>
#include <vector>

namespace gaslab {

/// Flat-fee table for every priced operation in the model. Defaults follow
/// the London-fork cost surface (net storage metering with capped refunds
/// and cold/warm access pricing); any field can be overridden from config.
struct GasSchedule {
    Gas tx_intrinsic = 21000;          ///< flat cost of any transaction
    Gas tx_create = 32000;             ///< surcharge for contract creation
    Gas calldata_zero_byte = 4;        ///< per zero byte of call payload
    Gas calldata_nonzero_byte = 16;    ///< per nonzero byte of call payload
    Gas cold_sload = 2100;             ///< first load of a slot in a tx
    Gas warm_sload = 100;              ///< later loads of the same slot
    Gas cold_account_access = 2600;    ///< first touch of an account in a tx
    Gas warm_account_access = 100;     ///< later touches of the same account
    Gas sstore_set = 20000;            ///< clean write, zero -> nonzero
    Gas sstore_reset = 2900;           ///< clean write, nonzero -> anything
    Gas sstore_noop = 100;             ///< write that keeps the current value
    Gas refund_clear = 4800;           ///< refund for clearing a nonzero slot
    Gas refund_cap_divisor = 5;        ///< refunds capped at used / divisor
    Gas hash_base = 30;                ///< flat cost per digest invocation
    Gas hash_per_word = 6;             ///< per 32-byte word digested
    Gas code_deposit_per_byte = 200;   ///< per byte of deployed code
    Gas compute_unit = 12;             ///< abstract arithmetic/branch step
    Gas call_base = 100;               ///< flat cost of an internal call

    /// Returns every violated constraint, empty when the table is usable.
    [[nodiscard]] std::vector<std::string> validate() const;
};

}  // namespace gaslab
