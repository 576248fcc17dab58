// gaslab: gas cost models for upgradeable smart contract patterns
// Copyright 2026 The gaslab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gaslab/words.hpp>

#include <span>
#include <string_view>

namespace gaslab {

/// Keccak-256 digest (the pre-standardization padding used by the EVM).
Word keccak256(std::span<const std::uint8_t> data) noexcept;
Word keccak256(std::string_view data) noexcept;

/// Slot-derivation digests are injectable so layout code can be exercised
/// with a cheap stand-in; only determinism and collision resistance matter.
using DigestFn = Word (*)(std::span<const std::uint8_t>) noexcept;

}  // namespace gaslab
