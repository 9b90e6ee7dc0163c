#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string_view>
#include <vector>

#include "semcom/bits.hpp"

namespace semcom {

/// Canonical Huffman code over byte symbols.
///
/// Build is deterministic: equal-weight merges prefer the earlier-created
/// node, and codewords are assigned canonically (sorted by length, then
/// symbol). A single-symbol source gets a 1-bit codeword.
class HuffmanTable {
 public:
  struct Entry {
    uint8_t symbol;
    uint8_t length;
    uint32_t codeword;  // low `length` bits, MSB-first on the wire
  };

  static HuffmanTable build(const std::map<uint8_t, uint64_t>& counts);

  bool contains(uint8_t symbol) const { return lengths_[symbol] != 0; }
  uint8_t length(uint8_t symbol) const { return lengths_[symbol]; }
  uint32_t codeword(uint8_t symbol) const { return codewords_[symbol]; }
  const std::vector<Entry>& entries() const { return entries_; }

  /// Kraft sum scaled by 2^max_length; equals 2^max_length exactly when the
  /// code is complete (always, for two or more symbols).
  uint64_t scaled_kraft_sum() const;
  uint8_t max_length() const;

  /// Payload bits for `text`; throws if a symbol is missing from the table.
  uint64_t measure_bits(std::string_view text) const;

  void encode(std::string_view text, BitWriter& out) const;
  std::string decode(BitReader& in, size_t symbol_count) const;

  /// Canonical code-length list: u16 symbol count, then per symbol
  /// (ascending) u8 symbol + u6 length.
  uint64_t serialized_bits() const { return 16 + 14ull * entries_.size(); }
  void serialize(BitWriter& out) const;
  static HuffmanTable deserialize(BitReader& in);

 private:
  HuffmanTable() { lengths_.fill(0); codewords_.fill(0); }
  void assign_canonical();

  std::array<uint8_t, 256> lengths_{};
  std::array<uint32_t, 256> codewords_{};
  std::vector<Entry> entries_;  // sorted by (length, symbol)
};

/// Byte histogram of `text`.
std::map<uint8_t, uint64_t> symbol_counts(std::string_view text);

/// Complexity measurement: payload bits plus, when requested, the serialized
/// table bits.
uint64_t huffman_measure(std::string_view text, const HuffmanTable& table, bool include_table);

}  // namespace semcom
