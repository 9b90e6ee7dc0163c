#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <unordered_map>

#include "semcom/corpus.hpp"

namespace semcom {

/// Order-k Markov source model over the 32-symbol alphabet with add-alpha
/// smoothing. Smoothing mass is spread over the observed symbol support of
/// the training corpus, not the full alphabet, so that near-deterministic
/// sources estimate near-zero conditional entropy.
class MarkovModel {
 public:
  explicit MarkovModel(int order, double alpha = 0.1);

  void add_text(std::string_view normalized_text);
  void add_corpus(const Corpus& corpus);

  int order() const { return order_; }
  double alpha() const { return alpha_; }
  size_t support_size() const;

  /// Smoothed P(symbol | context); contexts never seen have uniform support mass.
  double conditional_prob(uint32_t context_key, uint8_t symbol_index) const;

  /// Entropy rate in bits/character: sum over observed contexts of
  /// p(context) * H(symbol | context).
  double entropy_rate() const;

 private:
  struct ContextCounts {
    std::array<uint32_t, kAlphabetSize> counts{};
    uint64_t total = 0;
  };

  int order_;
  double alpha_;
  std::array<uint64_t, kAlphabetSize> symbol_totals_{};
  std::unordered_map<uint32_t, ContextCounts> contexts_;
  uint64_t transitions_ = 0;
};

/// Entropy rate of the corpus under an order-k model (order in {0,1,2}).
double markov_entropy(const Corpus& corpus, int order, double alpha = 0.1);

}  // namespace semcom
