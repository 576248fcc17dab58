// gaslab: gas cost models for upgradeable smart contract patterns
// Copyright 2026 The gaslab Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gaslab/keccak.hpp>

#include <bit>
#include <cstring>

namespace gaslab {
namespace {

constexpr int kRounds = 24;

constexpr std::uint64_t kRoundConstants[kRounds] = {
    0x0000000000000001ULL, 0x0000000000008082ULL, 0x800000000000808aULL,
    0x8000000080008000ULL, 0x000000000000808bULL, 0x0000000080000001ULL,
    0x8000000080008081ULL, 0x8000000000008009ULL, 0x000000000000008aULL,
    0x0000000000000088ULL, 0x0000000080008009ULL, 0x000000008000000aULL,
    0x000000008000808bULL, 0x800000000000008bULL, 0x8000000000008089ULL,
    0x8000000000008003ULL, 0x8000000000008002ULL, 0x8000000000000080ULL,
    0x000000000000800aULL, 0x800000008000000aULL, 0x8000000080008081ULL,
    0x8000000000008080ULL, 0x0000000080000001ULL, 0x8000000080008008ULL,
};

// Rotation offsets and lane permutation of the rho + pi steps, in the order
// the combined loop visits lanes.
constexpr int kRotations[24] = {1,  3,  6,  10, 15, 21, 28, 36, 45, 55, 2,  14,
                                27, 41, 56, 8,  25, 43, 62, 18, 39, 61, 20, 44};
constexpr int kPiLanes[24] = {10, 7,  11, 17, 18, 3, 5,  16, 8,  21, 24, 4,
                              15, 23, 19, 13, 12, 2, 20, 14, 22, 9,  6,  1};

void keccak_f1600(std::uint64_t state[25]) noexcept {
    for (int round = 0; round < kRounds; ++round) {
        // theta
        std::uint64_t c[5];
        for (int x = 0; x < 5; ++x)
            c[x] = state[x] ^ state[x + 5] ^ state[x + 10] ^ state[x + 15] ^ state[x + 20];
        for (int x = 0; x < 5; ++x) {
            const std::uint64_t d = c[(x + 4) % 5] ^ std::rotl(c[(x + 1) % 5], 1);
            for (int y = 0; y < 25; y += 5) state[x + y] ^= d;
        }
        // rho + pi
        std::uint64_t last = state[1];
        for (int i = 0; i < 24; ++i) {
            const int lane = kPiLanes[i];
            const std::uint64_t tmp = state[lane];
            state[lane] = std::rotl(last, kRotations[i]);
            last = tmp;
        }
        // chi
        for (int y = 0; y < 25; y += 5) {
            std::uint64_t row[5];
            for (int x = 0; x < 5; ++x) row[x] = state[y + x];
            for (int x = 0; x < 5; ++x)
                state[y + x] = row[x] ^ (~row[(x + 1) % 5] & row[(x + 2) % 5]);
        }
        // iota
        state[0] ^= kRoundConstants[round];
    }
}

}  // namespace

Word keccak256(std::span<const std::uint8_t> data) noexcept {
    constexpr std::size_t kRate = 136;  // 1088-bit rate for 256-bit output
    std::uint64_t state[25] = {};

    // Absorb full blocks.
    while (data.size() >= kRate) {
        for (std::size_t i = 0; i < kRate / 8; ++i) {
            std::uint64_t lane;
            std::memcpy(&lane, data.data() + i * 8, 8);
            state[i] ^= lane;  // little-endian hosts only
        }
        keccak_f1600(state);
        data = data.subspan(kRate);
    }

    // Final block with multi-rate padding (0x01 ... 0x80).
    std::uint8_t block[kRate] = {};
    if (!data.empty()) std::memcpy(block, data.data(), data.size());
    block[data.size()] ^= 0x01;
    block[kRate - 1] ^= 0x80;
    for (std::size_t i = 0; i < kRate / 8; ++i) {
        std::uint64_t lane;
        std::memcpy(&lane, block + i * 8, 8);
        state[i] ^= lane;
    }
    keccak_f1600(state);

    Word out;
    std::memcpy(out.bytes.data(), state, 32);
    return out;
}

Word keccak256(std::string_view data) noexcept { return keccak256(as_bytes(data)); }

}  // namespace gaslab
