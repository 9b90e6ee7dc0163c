#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace semcom {

/// Deflate window ceiling; longer dictionaries are truncated to their final
/// 32 KiB before use.
inline constexpr size_t kDeflateWindow = 32 * 1024;

/// Raw RFC 1951 stream of `data`, level 9. An optional preset dictionary
/// lets back-references reach into prior shared knowledge.
std::vector<uint8_t> deflate_compress(std::span<const uint8_t> data, std::span<const uint8_t> dictionary = {});

/// Inverse of deflate_compress; requires the same dictionary.
std::vector<uint8_t> deflate_decompress(std::span<const uint8_t> stream, std::span<const uint8_t> dictionary = {});

/// Output length in bits (the stream is byte-aligned).
uint64_t deflate_measure_bits(std::span<const uint8_t> data, std::span<const uint8_t> dictionary = {});

}  // namespace semcom
