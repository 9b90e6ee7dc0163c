#include "semcom/alphabet.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "semcom/bits.hpp"

namespace semcom {

Alphabet32::Alphabet32() {
  int n = 0;
  for (char c = 'a'; c <= 'z'; ++c) symbols_[n++] = c;
  symbols_[n++] = ' ';
  symbols_[n++] = '.';
  symbols_[n++] = ',';
  symbols_[n++] = '\'';
  symbols_[n++] = '?';
  symbols_[n++] = '-';
  index_.fill(-1);
  for (int i = 0; i < kAlphabetSize; ++i) index_[static_cast<uint8_t>(symbols_[i])] = static_cast<int16_t>(i);
}

const Alphabet32& Alphabet32::standard() {
  static const Alphabet32 instance;
  return instance;
}

std::string normalize_text(std::string_view raw, AlphabetPolicy policy, const Alphabet32& alphabet) {
  // Trailing line terminators are structure, not content.
  while (!raw.empty() && (raw.back() == '\n' || raw.back() == '\r')) raw.remove_suffix(1);

  if (policy == AlphabetPolicy::strict) {
    std::set<char> offenders;
    for (char c : raw) {
      if (!alphabet.contains(c)) offenders.insert(c);
    }
    if (!offenders.empty()) {
      std::string msg = "characters outside alphabet:";
      for (char c : offenders) {
        msg += " '";
        msg += std::isprint(static_cast<unsigned char>(c)) ? c : '?';
        msg += "'";
      }
      throw OutOfAlphabetError(msg, std::vector<char>(offenders.begin(), offenders.end()));
    }
    return std::string(raw);
  }

  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    unsigned char u = static_cast<unsigned char>(c);
    char mapped;
    if (std::isupper(u)) {
      mapped = static_cast<char>(std::tolower(u));
    } else if (std::isspace(u)) {
      mapped = ' ';
    } else if (alphabet.contains(c)) {
      mapped = c;
    } else {
      mapped = ' ';
    }
    if (mapped == ' ' && (out.empty() || out.back() == ' ')) continue;
    out.push_back(mapped);
  }
  while (!out.empty() && out.back() == ' ') out.pop_back();
  return out;
}

std::vector<uint8_t> encode_fixed5(std::string_view text, const Alphabet32& alphabet) {
  BitWriter w;
  for (char c : text) w.push_bits(alphabet.index_of(c), kSymbolBits);
  return w.take();
}

std::string decode_fixed5(std::span<const uint8_t> bytes, size_t char_count, const Alphabet32& alphabet) {
  BitReader r(bytes);
  std::string out;
  out.reserve(char_count);
  for (size_t i = 0; i < char_count; ++i)
    out.push_back(alphabet.symbol(static_cast<uint8_t>(r.read_bits(kSymbolBits))));
  return out;
}

}  // namespace semcom
