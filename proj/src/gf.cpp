#include "semcom/gf.hpp"

#include <stdexcept>

namespace semcom {

GaloisField::GaloisField(unsigned symbol_bits, unsigned primitive_poly)
    : m_(symbol_bits), q_(1u << symbol_bits) {
  if (symbol_bits == 0 || symbol_bits > 8) throw std::invalid_argument("GaloisField: symbol_bits must be 1..8");
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  unsigned x = 1;
  for (unsigned i = 0; i < q_ - 1; ++i) {
    exp_[i] = static_cast<uint8_t>(x);
    log_[x] = i;
    x <<= 1;
    if (x & q_) x ^= primitive_poly;
  }
  if (x != 1) throw std::invalid_argument("GaloisField: polynomial is not primitive");
}

const GaloisField& GaloisField::gf256() {
  static const GaloisField f(8, 0x11D);  // x^8 + x^4 + x^3 + x^2 + 1
  return f;
}

const GaloisField& GaloisField::gf8() {
  static const GaloisField f(3, 0xB);  // x^3 + x + 1
  return f;
}

uint8_t GaloisField::div(uint8_t a, uint8_t b) const {
  if (b == 0) throw std::domain_error("GaloisField: division by zero");
  if (a == 0) return 0;
  return exp_[(log_[a] + (q_ - 1) - log_[b]) % (q_ - 1)];
}

uint8_t GaloisField::inv(uint8_t a) const {
  if (a == 0) throw std::domain_error("GaloisField: zero has no inverse");
  return exp_[((q_ - 1) - log_[a]) % (q_ - 1)];
}

unsigned GaloisField::log(uint8_t a) const {
  if (a == 0) throw std::domain_error("GaloisField: log of zero");
  return log_[a];
}

}  // namespace semcom
