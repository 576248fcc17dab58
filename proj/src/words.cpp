// gaslab: gas cost models for upgradeable smart contract patterns
// Copyright 2026 The gaslab Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gaslab/errors.hpp>
#include <gaslab/words.hpp>

#include <algorithm>

namespace gaslab {
namespace {

constexpr char kHexDigits[] = "0123456789abcdef";

int hex_value(char c) {
    if (c >= '0' && c <= '9') return c - '0';
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
}

std::string bytes_to_hex(std::span<const std::uint8_t> bytes) {
    std::string out = "0x";
    out.reserve(2 + bytes.size() * 2);
    for (std::uint8_t b : bytes) {
        out += kHexDigits[b >> 4];
        out += kHexDigits[b & 0x0f];
    }
    return out;
}

}  // namespace

Word Word::from_u64(std::uint64_t v) noexcept {
    Word w;
    for (int i = 0; i < 8; ++i) w.bytes[31 - i] = static_cast<std::uint8_t>(v >> (8 * i));
    return w;
}

Word Word::from_hex(std::string_view hex) {
    if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
    if (hex.empty() || hex.size() > 64)
        throw ValidationError("hex word must have 1..64 digits, got \"" + std::string(hex) + "\"");
    Word w;
    // Right-align: the last hex digit maps to the lowest nibble.
    std::size_t nibble = 0;  // counted from the right
    for (auto it = hex.rbegin(); it != hex.rend(); ++it, ++nibble) {
        const int v = hex_value(*it);
        if (v < 0) throw ValidationError(std::string("invalid hex digit '") + *it + "'");
        std::uint8_t& b = w.bytes[31 - nibble / 2];
        b = static_cast<std::uint8_t>(nibble % 2 == 0 ? v : b | (v << 4));
    }
    return w;
}

bool Word::is_zero() const noexcept {
    return std::all_of(bytes.begin(), bytes.end(), [](std::uint8_t b) { return b == 0; });
}

std::uint64_t Word::low_u64() const noexcept {
    std::uint64_t v = 0;
    for (int i = 24; i < 32; ++i) v = (v << 8) | bytes[i];
    return v;
}

std::string Word::hex() const { return bytes_to_hex(bytes); }

bool Address::is_zero() const noexcept {
    return std::all_of(bytes.begin(), bytes.end(), [](std::uint8_t b) { return b == 0; });
}

Word Address::to_word() const noexcept {
    Word w;
    std::copy(bytes.begin(), bytes.end(), w.bytes.begin() + 12);
    return w;
}

Address Address::from_word(const Word& w) noexcept {
    Address a;
    std::copy(w.bytes.begin() + 12, w.bytes.end(), a.bytes.begin());
    return a;
}

std::string Address::hex() const { return bytes_to_hex(bytes); }

SlotKey SlotKey::next() const noexcept { return offset(1); }

SlotKey SlotKey::offset(std::uint64_t n) const noexcept {
    SlotKey out = *this;
    for (int i = 31; i >= 0 && n != 0; --i) {
        const std::uint64_t sum = out.value.bytes[i] + (n & 0xff);
        out.value.bytes[i] = static_cast<std::uint8_t>(sum);
        n = (n >> 8) + (sum >> 8);
    }
    return out;
}

}  // namespace gaslab
