#pragma once

#include <cstdint>
#include <vector>

namespace semcom {

/// GF(2^m), m <= 8, built from a primitive polynomial. Elements are the
/// integers 0 .. 2^m-1; alpha is the root of the primitive polynomial.
class GaloisField {
 public:
  GaloisField(unsigned symbol_bits, unsigned primitive_poly);

  /// GF(256) with x^8 + x^4 + x^3 + x^2 + 1.
  static const GaloisField& gf256();
  /// GF(8) with x^3 + x + 1, used by the small exhaustive Reed-Solomon oracle.
  static const GaloisField& gf8();

  unsigned size() const { return q_; }
  unsigned symbol_bits() const { return m_; }

  uint8_t add(uint8_t a, uint8_t b) const { return a ^ b; }

  uint8_t mul(uint8_t a, uint8_t b) const {
    if (a == 0 || b == 0) return 0;
    return exp_[(log_[a] + log_[b]) % (q_ - 1)];
  }

  uint8_t div(uint8_t a, uint8_t b) const;
  uint8_t inv(uint8_t a) const;

  /// alpha^i for any integer exponent (reduced mod q-1).
  uint8_t alpha_pow(int i) const {
    int e = i % static_cast<int>(q_ - 1);
    if (e < 0) e += q_ - 1;
    return exp_[e];
  }

  /// Discrete log base alpha; undefined for 0 (throws).
  unsigned log(uint8_t a) const;

 private:
  unsigned m_;
  unsigned q_;
  std::vector<uint8_t> exp_;
  std::vector<unsigned> log_;
};

}  // namespace semcom
