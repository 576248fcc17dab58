// gaslab: gas cost models for upgradeable smart contract patterns
// Copyright 2026 The gaslab Authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <gaslab/keccak.hpp>
#include <gaslab/meter.hpp>
#include <gaslab/trace.hpp>
#include <gaslab/words.hpp>

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gaslab {

/// Word-addressed storage of one contract. Absent slots read as zero. Cell
/// originals snapshot the committed state; commit_tx()/revert_tx() settle the
/// in-flight writes of the finished transaction.
class ContractStorage {
  public:
    explicit ContractStorage(ContractId id = 0) : id_(id) {}

    [[nodiscard]] ContractId id() const { return id_; }

    /// Committed-or-in-flight value; zero when the slot was never written.
    [[nodiscard]] Word current(const SlotKey& slot) const;

    /// Cell backing `slot`, created as zero/zero on first use.
    StorageCell& cell(const SlotKey& slot);

    /// Called by write_word so transaction settlement can visit dirty cells.
    void note_write(const SlotKey& slot) { dirty_.push_back(slot); }

    /// Promotes in-flight values to committed state (original = current).
    void commit_tx();
    /// Rolls in-flight values back (current = original).
    void revert_tx();

    [[nodiscard]] std::size_t cell_count() const { return cells_.size(); }

  private:
    ContractId id_;
    std::map<SlotKey, StorageCell> cells_;
    std::vector<SlotKey> dirty_;
};

/// Priced read of one word; emits the trace record for it.
std::pair<Word, StorageOp> read_word(const GasSchedule& schedule, AccessSet& access,
                                     ContractStorage& storage, const SlotKey& slot,
                                     GasMeter& meter);

/// Priced write of one word; emits the trace record for it.
StorageOp write_word(const GasSchedule& schedule, AccessSet& access, ContractStorage& storage,
                     const SlotKey& slot, const Word& value, GasMeter& meter);

/// Mapping-entry slot: digest(key bytes ++ base slot word), plus the gas
/// charged for deriving it.
struct DerivedSlot {
    SlotKey slot;
    Gas gas = 0;           ///< digest pricing for the derivation
    std::uint64_t hashed_bytes = 0;
};

DerivedSlot mapping_slot(const GasSchedule& schedule, const SlotKey& base,
                         std::span<const std::uint8_t> key, DigestFn digest = keccak256);
DerivedSlot mapping_slot(const GasSchedule& schedule, const SlotKey& base, std::string_view key,
                         DigestFn digest = keccak256);

/// Number of slots a stored string of `len` bytes occupies: one head slot,
/// plus the data words once the content no longer fits the head.
std::uint64_t string_slot_count(std::uint64_t len);

/// Slot/value pairs that store `text` at `head` plus derivation pricing for
/// the long form (data words live at digest(head), consecutive).
struct EncodedString {
    std::vector<std::pair<SlotKey, Word>> entries;
    Gas derivation_gas = 0;      ///< hash_cost(32) when the long form is used
    bool long_form = false;
};

EncodedString encode_string(const GasSchedule& schedule, const SlotKey& head, std::string_view text,
                            DigestFn digest = keccak256);

/// Reads a stored string back without pricing (test/tool helper); the priced
/// read path lives in the app model.
std::string decode_string(ContractStorage& storage, const SlotKey& head,
                          DigestFn digest = keccak256);

/// Field slots of a stored file record: four consecutive words.
struct FileRecordLayout {
    SlotKey owner;       ///< head + 0, 20-byte address right-aligned
    SlotKey content;     ///< head + 1, 32-byte digest
    SlotKey created_at;  ///< head + 2, seconds as a right-aligned integer
    SlotKey updated_at;  ///< head + 3
};

FileRecordLayout file_record_layout(const SlotKey& head);

}  // namespace gaslab
