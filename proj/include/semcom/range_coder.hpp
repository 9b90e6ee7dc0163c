#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace semcom {

/// Byte-oriented range coder (carry-counting variant, 32-bit range).
/// Symbols are coded as cumulative-frequency intervals [cum_low, cum_low+freq)
/// out of `total`; totals must stay below 2^16 so `range / total` never
/// underflows between renormalizations.
class RangeEncoder {
 public:
  explicit RangeEncoder(std::vector<uint8_t>& out) : out_(out) {}

  void encode(uint32_t cum_low, uint32_t freq, uint32_t total) {
    uint32_t r = range_ / total;
    low_ += static_cast<uint64_t>(r) * cum_low;
    range_ = r * freq;
    while (range_ < kTop) {
      range_ <<= 8;
      shift_low();
    }
  }

  void flush() {
    for (int i = 0; i < 5; ++i) shift_low();
  }

 private:
  static constexpr uint32_t kTop = 1u << 24;

  void shift_low() {
    if (static_cast<uint32_t>(low_) < 0xFF000000u || (low_ >> 32) != 0) {
      uint8_t carry = static_cast<uint8_t>(low_ >> 32);
      out_.push_back(static_cast<uint8_t>(cache_ + carry));
      while (pending_ > 0) {
        out_.push_back(static_cast<uint8_t>(0xFF + carry));
        --pending_;
      }
      cache_ = static_cast<uint8_t>(low_ >> 24);
    } else {
      ++pending_;
    }
    low_ = (low_ << 8) & 0xFFFFFFFFull;
  }

  std::vector<uint8_t>& out_;
  uint64_t low_ = 0;
  uint32_t range_ = 0xFFFFFFFFu;
  uint8_t cache_ = 0;
  uint64_t pending_ = 0;
  // The first shift_low emits the initial zero cache byte; the decoder
  // discards it on init.
};

class RangeDecoder {
 public:
  explicit RangeDecoder(std::span<const uint8_t> in) : in_(in) {
    next_byte();  // leading cache byte from the encoder's first shift_low
    for (int i = 0; i < 4; ++i) code_ = (code_ << 8) | next_byte();
  }

  /// Cumulative frequency of the current symbol; caller looks up the symbol
  /// whose interval contains it, then calls consume().
  uint32_t decode_target(uint32_t total) {
    r_ = range_ / total;
    uint32_t t = code_ / r_;
    return t >= total ? total - 1 : t;
  }

  void consume(uint32_t cum_low, uint32_t freq) {
    code_ -= r_ * cum_low;
    range_ = r_ * freq;
    while (range_ < kTop) {
      code_ = (code_ << 8) | next_byte();
      range_ <<= 8;
    }
  }

 private:
  static constexpr uint32_t kTop = 1u << 24;

  // Reads past the end return zero; corrupt or truncated streams decode to
  // garbage rather than faulting.
  uint8_t next_byte() { return pos_ < in_.size() ? in_[pos_++] : 0; }

  std::span<const uint8_t> in_;
  size_t pos_ = 0;
  uint32_t code_ = 0;
  uint32_t range_ = 0xFFFFFFFFu;
  uint32_t r_ = 1;
};

}  // namespace semcom
