// gaslab: gas cost models for upgradeable smart contract patterns
// Copyright 2026 The gaslab Authors.
// SPDX-License-Identifier: Apache-2.0
#include <gaslab/storage.hpp>

#include <algorithm>
#include <cstring>

namespace gaslab {

Word ContractStorage::current(const SlotKey& slot) const {
    const auto it = cells_.find(slot);
    return it == cells_.end() ? Word::zero() : it->second.current;
}

StorageCell& ContractStorage::cell(const SlotKey& slot) { return cells_[slot]; }

void ContractStorage::commit_tx() {
    for (const SlotKey& slot : dirty_) {
        auto& c = cells_[slot];
        c.original = c.current;
    }
    dirty_.clear();
}

void ContractStorage::revert_tx() {
    for (const SlotKey& slot : dirty_) {
        auto& c = cells_[slot];
        c.current = c.original;
    }
    dirty_.clear();
}

std::pair<Word, StorageOp> read_word(const GasSchedule& schedule, AccessSet& access,
                                     ContractStorage& storage, const SlotKey& slot,
                                     GasMeter& meter) {
    const bool was_warm = access.slot_is_warm(storage.id(), slot);
    const Gas gas = sload_cost(schedule, access, storage.id(), slot);
    meter.charge(gas);
    const Word value = storage.current(slot);
    StorageOp op;
    op.contract = storage.id();
    op.slot = slot;
    op.old_value = value;
    op.new_value = value;
    op.is_write = false;
    op.cold = !was_warm;
    op.gas = gas;
    return {value, op};
}

StorageOp write_word(const GasSchedule& schedule, AccessSet& access, ContractStorage& storage,
                     const SlotKey& slot, const Word& value, GasMeter& meter) {
    StorageCell& cell = storage.cell(slot);
    const Word old_value = cell.current;
    const SstoreResult r = sstore_cost(schedule, access, storage.id(), slot, cell, value);
    meter.charge(r.cost);
    meter.add_refund(r.refund_delta);
    storage.note_write(slot);
    StorageOp op;
    op.contract = storage.id();
    op.slot = slot;
    op.old_value = old_value;
    op.new_value = value;
    op.is_write = true;
    op.cold = r.cold;
    op.gas = r.cost;
    op.refund_delta = r.refund_delta;
    return op;
}

DerivedSlot mapping_slot(const GasSchedule& schedule, const SlotKey& base,
                         std::span<const std::uint8_t> key, DigestFn digest) {
    std::vector<std::uint8_t> preimage;
    preimage.reserve(key.size() + 32);
    preimage.insert(preimage.end(), key.begin(), key.end());
    preimage.insert(preimage.end(), base.value.bytes.begin(), base.value.bytes.end());
    DerivedSlot out;
    out.slot = SlotKey{digest(preimage)};
    out.hashed_bytes = preimage.size();
    out.gas = hash_cost(schedule, preimage.size());
    return out;
}

DerivedSlot mapping_slot(const GasSchedule& schedule, const SlotKey& base, std::string_view key,
                         DigestFn digest) {
    return mapping_slot(schedule, base, as_bytes(key), digest);
}

std::uint64_t string_slot_count(std::uint64_t len) {
    if (len <= 31) return 1;
    return 1 + (len + 31) / 32;
}

EncodedString encode_string(const GasSchedule& schedule, const SlotKey& head,
                            std::string_view text, DigestFn digest) {
    EncodedString out;
    const std::uint64_t len = text.size();
    if (len <= 31) {
        // Short form: content left-aligned, twice the length in the low byte.
        Word w;
        std::copy(text.begin(), text.end(), reinterpret_cast<char*>(w.bytes.data()));
        w.bytes[31] = static_cast<std::uint8_t>(2 * len);
        out.entries.emplace_back(head, w);
        return out;
    }
    // Long form: head stores 2*len + 1; content fills consecutive words
    // starting at digest(head).
    out.long_form = true;
    out.entries.emplace_back(head, Word::from_u64(2 * len + 1));
    out.derivation_gas = hash_cost(schedule, 32);
    SlotKey data{digest({head.value.bytes.data(), head.value.bytes.size()})};
    for (std::uint64_t offset = 0; offset < len; offset += 32) {
        Word w;
        const std::uint64_t n = std::min<std::uint64_t>(32, len - offset);
        std::memcpy(w.bytes.data(), text.data() + offset, n);
        out.entries.emplace_back(data, w);
        data = data.next();
    }
    return out;
}

std::string decode_string(ContractStorage& storage, const SlotKey& head, DigestFn digest) {
    const Word head_word = storage.current(head);
    if ((head_word.bytes[31] & 1) == 0) {
        const std::uint64_t len = head_word.bytes[31] / 2;
        return {reinterpret_cast<const char*>(head_word.bytes.data()), len};
    }
    const std::uint64_t len = (head_word.low_u64() - 1) / 2;
    std::string text;
    text.reserve(len);
    SlotKey data{digest({head.value.bytes.data(), head.value.bytes.size()})};
    for (std::uint64_t offset = 0; offset < len; offset += 32) {
        const Word w = storage.current(data);
        const std::uint64_t n = std::min<std::uint64_t>(32, len - offset);
        text.append(reinterpret_cast<const char*>(w.bytes.data()), n);
        data = data.next();
    }
    return text;
}

FileRecordLayout file_record_layout(const SlotKey& head) {
    return {head, head.offset(1), head.offset(2), head.offset(3)};
}

}  // namespace gaslab
