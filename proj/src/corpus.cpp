#include "semcom/corpus.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

namespace semcom {

size_t Corpus::total_chars() const {
  size_t n = 0;
  for (const auto& d : documents) n += d.text.size();
  return n;
}

size_t Corpus::total_words() const {
  size_t n = 0;
  for (const auto& d : documents) n += tokenize_words(d.text).size();
  return n;
}

namespace {

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Corpus load_corpus(const std::filesystem::path& path, CorpusRole role, CorpusLayout layout,
                   AlphabetPolicy policy) {
  Corpus corpus;
  corpus.role = role;

  if (layout == CorpusLayout::directory) {
    if (!std::filesystem::is_directory(path)) throw std::runtime_error("not a directory: " + path.string());
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(path)) {
      if (entry.is_regular_file()) files.push_back(entry.path());
    }
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename().string() < b.filename().string(); });
    for (const auto& f : files) {
      std::string text = normalize_text(read_file(f), policy);
      if (text.empty()) continue;
      corpus.documents.push_back({f.filename().string(), std::move(text)});
    }
  } else {
    if (!std::filesystem::is_regular_file(path)) throw std::runtime_error("not a file: " + path.string());
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      std::string text = normalize_text(line, policy);
      if (text.empty()) continue;
      char id[32];
      std::snprintf(id, sizeof id, "line%06zu", lineno);
      corpus.documents.push_back({id, std::move(text)});
    }
  }

  if (corpus.documents.empty()) throw std::runtime_error("empty corpus: " + path.string());
  return corpus;
}

std::pair<Corpus, Corpus> split_corpus(const Corpus& corpus, double test_fraction, uint64_t seed) {
  size_t n = corpus.documents.size();
  if (n < 2) throw std::invalid_argument("split_corpus: need at least 2 documents");
  if (!(test_fraction > 0.0 && test_fraction < 1.0))
    throw std::invalid_argument("split_corpus: test_fraction must be in (0,1)");

  size_t n_test = static_cast<size_t>(std::llround(test_fraction * static_cast<double>(n)));
  n_test = std::clamp<size_t>(n_test, 1, n - 1);

  // Hand-rolled Fisher-Yates so the partition is identical across platforms.
  std::vector<size_t> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = i;
  std::mt19937_64 rng(seed);
  for (size_t i = n - 1; i > 0; --i) {
    size_t j = static_cast<size_t>(rng() % (i + 1));
    std::swap(order[i], order[j]);
  }

  std::vector<bool> is_test(n, false);
  for (size_t i = 0; i < n_test; ++i) is_test[order[i]] = true;

  Corpus knowledge, test;
  knowledge.role = CorpusRole::knowledge;
  test.role = CorpusRole::test;
  for (size_t i = 0; i < n; ++i) {
    (is_test[i] ? test : knowledge).documents.push_back(corpus.documents[i]);
  }
  return {std::move(knowledge), std::move(test)};
}

std::vector<std::string_view> tokenize_words(std::string_view text) {
  std::vector<std::string_view> words;
  size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    size_t start = i;
    while (i < text.size() && text[i] != ' ') ++i;
    if (i > start) words.push_back(text.substr(start, i - start));
  }
  return words;
}

std::vector<uint8_t> serialize_corpus(const Corpus& corpus) {
  std::vector<uint8_t> out;
  out.reserve(corpus.total_chars() + corpus.documents.size());
  bool first = true;
  for (const auto& d : corpus.documents) {
    if (!first) out.push_back(0x00);
    first = false;
    out.insert(out.end(), d.text.begin(), d.text.end());
  }
  return out;
}

}  // namespace semcom
