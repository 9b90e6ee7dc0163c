#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "semcom/alphabet.hpp"

namespace semcom {

struct Document {
  std::string id;
  std::string text;  // normalized per alphabet policy
};

enum class CorpusRole { knowledge, test };

struct Corpus {
  std::vector<Document> documents;
  CorpusRole role = CorpusRole::knowledge;

  bool empty() const { return documents.empty(); }
  size_t total_chars() const;
  size_t total_words() const;
};

enum class CorpusLayout { directory, lines };

/// Loads a corpus from a directory of .txt files (one document per file,
/// lexicographic filename order) or a single file (one document per line).
Corpus load_corpus(const std::filesystem::path& path, CorpusRole role,
                   CorpusLayout layout = CorpusLayout::directory,
                   AlphabetPolicy policy = AlphabetPolicy::lenient);

/// Seed-deterministic disjoint partition. Test size = round(fraction * N)
/// clamped to [1, N-1]; relative document order is preserved in both halves.
std::pair<Corpus, Corpus> split_corpus(const Corpus& corpus, double test_fraction, uint64_t seed);

/// Splits normalized text on single spaces. Punctuation stays attached.
std::vector<std::string_view> tokenize_words(std::string_view text);

/// Concatenates documents in corpus order with a 0x00 separator byte.
std::vector<uint8_t> serialize_corpus(const Corpus& corpus);

}  // namespace semcom
