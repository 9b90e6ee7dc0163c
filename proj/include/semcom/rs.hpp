#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "semcom/gf.hpp"

namespace semcom {

/// Systematic Reed-Solomon code over GF(2^m). Generator roots are
/// alpha^1 .. alpha^(n-k); bounded-distance decoding corrects up to
/// t = (n-k)/2 symbol errors. Decode failure is a value, not an exception.
class RsCode {
 public:
  RsCode(const GaloisField& field, unsigned n, unsigned k);

  unsigned n() const { return n_; }
  unsigned k() const { return k_; }
  unsigned parity() const { return n_ - k_; }
  unsigned t() const { return (n_ - k_) / 2; }
  const GaloisField& field() const { return field_; }

  /// message (k symbols) -> message || parity (n symbols).
  std::vector<uint8_t> encode(std::span<const uint8_t> message) const;

  struct Decoded {
    std::vector<uint8_t> message;
    unsigned corrected = 0;
  };

  /// Bounded-distance decode of n received symbols. More than t errors yields
  /// nullopt or, undetectably, a different codeword; never partial output.
  std::optional<Decoded> decode(std::span<const uint8_t> received) const;

  /// Shortened variants: k_short < k message symbols, the missing leading
  /// symbols are implicit zeros known to both ends.
  std::vector<uint8_t> encode_shortened(std::span<const uint8_t> message) const;
  std::optional<Decoded> decode_shortened(std::span<const uint8_t> received, unsigned k_short) const;

 private:
  const GaloisField& field_;
  unsigned n_;
  unsigned k_;
  std::vector<uint8_t> generator_;  // ascending degree, monic, degree n-k
};

}  // namespace semcom
