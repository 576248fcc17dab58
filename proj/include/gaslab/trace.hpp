// gaslab: gas cost models for upgradeable smart contract patterns
// Copyright 2026 The gaslab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gaslab/words.hpp>

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace gaslab {

/// One storage access. Reads keep old_value == new_value; writes record the
/// transition. `cold` is the access-set state at pricing time and `gas` the
/// full charge including any cold surcharge.
struct StorageOp {
    ContractId contract = 0;
    SlotKey slot;
    Word old_value;
    Word new_value;
    bool is_write = false;
    bool cold = false;
    Gas gas = 0;
    SignedGas refund_delta = 0;

    bool operator==(const StorageOp&) const = default;
};

/// One digest invocation priced by input length.
struct HashOp {
    std::uint64_t byte_len = 0;
    Gas gas = 0;

    bool operator==(const HashOp&) const = default;
};

/// A batch of abstract compute steps (arithmetic, comparison, branching).
struct ComputeOp {
    std::uint32_t units = 0;
    Gas gas = 0;

    bool operator==(const ComputeOp&) const = default;
};

/// Account touch plus call overhead when dispatch forwards to a target.
struct CallOverheadOp {
    ContractId target = 0;
    bool cold = false;
    Gas gas = 0;

    bool operator==(const CallOverheadOp&) const = default;
};

using TraceOp = std::variant<StorageOp, HashOp, ComputeOp, CallOverheadOp>;

/// Result value carried by a successful call: nothing, a flag, a word, or a
/// string, depending on the function.
using CallValue = std::variant<std::monostate, bool, Word, std::string>;

struct Outcome {
    bool reverted = false;
    std::string revert_reason;  ///< set only when reverted
    CallValue value;            ///< set only on success

    static Outcome ok(CallValue v = std::monostate{}) { return {false, {}, std::move(v)}; }
    static Outcome revert(std::string reason) { return {true, std::move(reason), {}}; }

    bool operator==(const Outcome&) const = default;
};

/// Ordered list of priced operations for one transaction, if it reverted,
/// gas was still consumed up to the revert point.
struct OpTrace {
    std::vector<TraceOp> ops;
    Outcome outcome = Outcome::ok();

    [[nodiscard]] Gas total_gas() const {
        Gas sum = 0;
        for (const auto& op : ops)
            sum += std::visit([](const auto& o) { return o.gas; }, op);
        return sum;
    }

    bool operator==(const OpTrace&) const = default;
};

}  // namespace gaslab
