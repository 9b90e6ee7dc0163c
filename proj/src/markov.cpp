#include "semcom/markov.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace semcom {

MarkovModel::MarkovModel(int order, double alpha) : order_(order), alpha_(alpha) {
  if (order < 0 || order > 2) throw std::invalid_argument("MarkovModel: order must be in {0,1,2}");
  if (!(alpha > 0.0)) throw std::invalid_argument("MarkovModel: alpha must be positive");
}

void MarkovModel::add_text(std::string_view text) {
  const auto& alphabet = Alphabet32::standard();
  size_t k = static_cast<size_t>(order_);
  if (text.size() <= k) return;

  // Contexts are packed 5 bits per symbol; they never span document boundaries.
  uint32_t key = 0;
  const uint32_t mask = k == 0 ? 0 : (1u << (5 * k)) - 1;
  std::vector<uint8_t> idx(text.size());
  for (size_t i = 0; i < text.size(); ++i) idx[i] = alphabet.index_of(text[i]);

  for (size_t i = 0; i < k; ++i) key = ((key << 5) | idx[i]) & mask;
  for (size_t i = k; i < text.size(); ++i) {
    uint8_t s = idx[i];
    auto& ctx = contexts_[key];
    ctx.counts[s] += 1;
    ctx.total += 1;
    symbol_totals_[s] += 1;
    ++transitions_;
    key = ((key << 5) | s) & mask;
  }
}

void MarkovModel::add_corpus(const Corpus& corpus) {
  for (const auto& d : corpus.documents) add_text(d.text);
}

size_t MarkovModel::support_size() const {
  size_t n = 0;
  for (auto t : symbol_totals_)
    if (t > 0) ++n;
  return n;
}

double MarkovModel::conditional_prob(uint32_t context_key, uint8_t symbol_index) const {
  size_t support = support_size();
  if (support == 0) return 0.0;
  auto it = contexts_.find(context_key);
  uint64_t count = 0, total = 0;
  if (it != contexts_.end()) {
    count = it->second.counts[symbol_index];
    total = it->second.total;
  }
  if (symbol_totals_[symbol_index] == 0 && count == 0) return 0.0;
  return (static_cast<double>(count) + alpha_) / (static_cast<double>(total) + alpha_ * static_cast<double>(support));
}

double MarkovModel::entropy_rate() const {
  if (transitions_ == 0) return 0.0;
  size_t support = support_size();
  double entropy = 0.0;
  for (const auto& [key, ctx] : contexts_) {
    double denom = static_cast<double>(ctx.total) + alpha_ * static_cast<double>(support);
    double h = 0.0;
    for (int s = 0; s < kAlphabetSize; ++s) {
      if (symbol_totals_[s] == 0) continue;
      double p = (static_cast<double>(ctx.counts[s]) + alpha_) / denom;
      if (p > 0.0) h -= p * std::log2(p);
    }
    entropy += (static_cast<double>(ctx.total) / static_cast<double>(transitions_)) * h;
  }
  return entropy;
}

double markov_entropy(const Corpus& corpus, int order, double alpha) {
  if (corpus.empty()) throw std::invalid_argument("markov_entropy: empty corpus");
  MarkovModel model(order, alpha);
  model.add_corpus(corpus);
  return model.entropy_rate();
}

}  // namespace semcom
