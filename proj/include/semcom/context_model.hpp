#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <unordered_map>
#include <vector>

namespace semcom {

/// Adaptive order-k byte context model, optionally primed on a knowledge
/// base. Every context starts with count 1 for all 256 symbols (add-1
/// initialization, no escape mechanism); observed symbols gain
/// kCountIncrement, and a context is halved when its total reaches
/// kRescaleLimit so cumulative frequencies fit the range coder.
///
/// Encoder and decoder apply identical updates, so a stream is decodable by
/// any model with the same order and priming history.
class ContextModel {
 public:
  static constexpr uint32_t kCountIncrement = 32;
  static constexpr uint32_t kRescaleLimit = 1u << 16;

  explicit ContextModel(int order);

  int order() const { return order_; }

  /// Feeds text through the model, updating counts without producing output.
  void prime(std::span<const uint8_t> text);

  /// Ideal code length in bits: ceil(sum of -log2 p(symbol|context)) plus 2
  /// termination bits. Operates on a copy; the model is not mutated.
  uint64_t ideal_bits(std::span<const uint8_t> text) const;

  /// Range-coded stream of `text` (on a copy of the model).
  std::vector<uint8_t> encode(std::span<const uint8_t> text) const;

  /// Decodes `symbol_count` bytes (on a copy of the model).
  std::vector<uint8_t> decode(std::span<const uint8_t> stream, size_t symbol_count) const;

 private:
  struct ContextCounts {
    std::array<uint32_t, 256> counts;
    uint32_t total;
    ContextCounts() : total(256) { counts.fill(1); }
  };

  ContextCounts& slot(uint64_t key);
  void update(ContextCounts& ctx, uint8_t symbol);
  uint64_t context_key(uint64_t history) const { return order_ == 0 ? 0 : (history & mask_); }

  int order_;
  uint64_t mask_;
  std::unordered_map<uint64_t, ContextCounts> contexts_;
};

}  // namespace semcom
