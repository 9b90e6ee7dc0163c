#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace semcom {

inline constexpr int kSymbolBits = 5;
inline constexpr int kAlphabetSize = 32;

/// 32-symbol text alphabet: 26 lowercase letters, space, and . , ' ? -
/// Each symbol maps bijectively to a 5-bit index.
class Alphabet32 {
 public:
  Alphabet32();

  static const Alphabet32& standard();

  bool contains(char c) const { return index_[static_cast<uint8_t>(c)] >= 0; }

  uint8_t index_of(char c) const {
    int16_t i = index_[static_cast<uint8_t>(c)];
    if (i < 0) throw std::invalid_argument(std::string("character outside alphabet: '") + c + "'");
    return static_cast<uint8_t>(i);
  }

  char symbol(uint8_t index) const { return symbols_.at(index); }

  const std::array<char, kAlphabetSize>& symbols() const { return symbols_; }

 private:
  std::array<char, kAlphabetSize> symbols_{};
  std::array<int16_t, 256> index_{};
};

enum class AlphabetPolicy { lenient, strict };

/// Thrown by strict-mode normalization; carries the distinct offending characters.
class OutOfAlphabetError : public std::runtime_error {
 public:
  OutOfAlphabetError(std::string message, std::vector<char> offenders)
      : std::runtime_error(std::move(message)), offenders_(std::move(offenders)) {}
  const std::vector<char>& offenders() const { return offenders_; }

 private:
  std::vector<char> offenders_;
};

/// Ingest normalization. Lenient (default): fold ASCII case, map whitespace
/// and anything else outside the alphabet to space, collapse space runs, trim.
/// Strict: raw bytes must already be alphabet symbols; offenders are collected
/// and reported (trailing newlines are treated as file structure, not content).
std::string normalize_text(std::string_view raw, AlphabetPolicy policy = AlphabetPolicy::lenient,
                           const Alphabet32& alphabet = Alphabet32::standard());

/// Fixed 5-bit character code: exactly 5 * text.size() bits, MSB-first packed.
std::vector<uint8_t> encode_fixed5(std::string_view text, const Alphabet32& alphabet = Alphabet32::standard());

/// Inverse of encode_fixed5 given the original character count.
std::string decode_fixed5(std::span<const uint8_t> bytes, size_t char_count,
                          const Alphabet32& alphabet = Alphabet32::standard());

}  // namespace semcom
