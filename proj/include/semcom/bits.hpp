#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace semcom {

/// MSB-first bit writer over a growable byte buffer.
class BitWriter {
 public:
  void push_bit(unsigned bit) {
    if (bits_ % 8 == 0) buf_.push_back(0);
    if (bit & 1u) buf_.back() |= static_cast<uint8_t>(0x80u >> (bits_ % 8));
    ++bits_;
  }

  /// Writes the low `count` bits of `value`, most significant first.
  void push_bits(uint64_t value, unsigned count) {
    for (unsigned i = count; i-- > 0;) push_bit(static_cast<unsigned>(value >> i) & 1u);
  }

  size_t bit_count() const { return bits_; }

  /// Byte buffer, zero-padded to a byte boundary.
  const std::vector<uint8_t>& bytes() const { return buf_; }
  std::vector<uint8_t> take() { return std::move(buf_); }

 private:
  std::vector<uint8_t> buf_;
  size_t bits_ = 0;
};

/// MSB-first bit reader. Reading past the end throws.
class BitReader {
 public:
  explicit BitReader(std::span<const uint8_t> bytes) : bytes_(bytes) {}

  bool has_bits(size_t n) const { return pos_ + n <= bytes_.size() * 8; }

  unsigned read_bit() {
    if (!has_bits(1)) throw std::out_of_range("BitReader: read past end");
    unsigned bit = (bytes_[pos_ / 8] >> (7 - pos_ % 8)) & 1u;
    ++pos_;
    return bit;
  }

  uint64_t read_bits(unsigned count) {
    uint64_t v = 0;
    for (unsigned i = 0; i < count; ++i) v = (v << 1) | read_bit();
    return v;
  }

  size_t position() const { return pos_; }

 private:
  std::span<const uint8_t> bytes_;
  size_t pos_ = 0;
};

}  // namespace semcom
