#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

namespace semcom {

/// Identity of a complexity surrogate C(.).
struct CompressorId {
  enum class Kind { fixed5, huffman, deflate, context };

  Kind kind = Kind::deflate;
  int order = 3;  // context model order; ignored by the others

  static CompressorId parse(std::string_view name);
  std::string name() const;

  bool conditioning_capable() const { return kind == Kind::deflate || kind == Kind::context; }
  bool operator==(const CompressorId&) const = default;
};

struct ComplexityMeasurement {
  CompressorId compressor;
  uint64_t input_chars = 0;
  uint64_t output_bits = 0;
};

struct MeasureOptions {
  bool huffman_include_table = true;
};

/// Measured description length of `data` in bits under the given surrogate.
/// Conditioning bytes are the preset dictionary (deflate) or priming text
/// (context model); fixed5 and huffman ignore them.
ComplexityMeasurement measure(CompressorId id, std::span<const uint8_t> data,
                              std::span<const uint8_t> conditioning = {},
                              const MeasureOptions& options = {});

}  // namespace semcom
