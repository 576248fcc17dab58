// gaslab: gas cost models for upgradeable smart contract patterns
// Copyright 2026 The gaslab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace gaslab {

/// Gas amounts are unsigned; refund deltas are signed.
using Gas = std::uint64_t;
using SignedGas = std::int64_t;

/// A 32-byte storage word, big-endian semantics.
struct Word {
    std::array<std::uint8_t, 32> bytes{};

    static constexpr Word zero() noexcept { return Word{}; }
    static Word from_u64(std::uint64_t v) noexcept;
    /// Parses "0x"-prefixed or bare hex of up to 64 digits (right-aligned).
    static Word from_hex(std::string_view hex);

    [[nodiscard]] bool is_zero() const noexcept;
    /// Value of the low (rightmost) 8 bytes.
    [[nodiscard]] std::uint64_t low_u64() const noexcept;
    [[nodiscard]] std::string hex() const;

    auto operator<=>(const Word&) const = default;
};

/// A 20-byte account address.
struct Address {
    std::array<std::uint8_t, 20> bytes{};

    [[nodiscard]] bool is_zero() const noexcept;
    /// Right-aligned into a 32-byte word (12 leading zero bytes).
    [[nodiscard]] Word to_word() const noexcept;
    static Address from_word(const Word& w) noexcept;
    [[nodiscard]] std::string hex() const;

    auto operator<=>(const Address&) const = default;
};

/// Identifies one storage slot inside a contract. Totally ordered so slot
/// sets and storage maps iterate deterministically.
struct SlotKey {
    Word value;

    static SlotKey from_u64(std::uint64_t v) noexcept { return SlotKey{Word::from_u64(v)}; }
    /// Successor slot (value + 1 mod 2^256).
    [[nodiscard]] SlotKey next() const noexcept;
    /// Slot at value + n (mod 2^256).
    [[nodiscard]] SlotKey offset(std::uint64_t n) const noexcept;
    [[nodiscard]] std::string hex() const { return value.hex(); }

    auto operator<=>(const SlotKey&) const = default;
};

/// Contracts are identified by small handles managed by the dispatch world.
using ContractId = std::uint32_t;

/// Read-only byte view over a string's contents.
inline std::span<const std::uint8_t> as_bytes(std::string_view s) noexcept {
    return {reinterpret_cast<const std::uint8_t*>(s.data()), s.size()};
}

}  // namespace gaslab
