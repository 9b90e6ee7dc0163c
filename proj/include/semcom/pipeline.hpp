#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "semcom/channel.hpp"
#include "semcom/compressor.hpp"
#include "semcom/corpus.hpp"
#include "semcom/ncc.hpp"
#include "semcom/parity_opt.hpp"

namespace semcom {

struct SourceCoderSpec {
  enum class Kind { fixed5, huffman, deflate, context };
  Kind kind = Kind::fixed5;
  int order = 3;      // context only
  bool primed = true;  // context only; requires a knowledge base

  std::string name() const;
};

struct SchemeSpec {
  SourceCoderSpec source;
  enum class Channel { rs, ldpc } channel = Channel::rs;
  std::optional<int> fixed_parity;  // bypasses the optimizer when set

  /// "fixed5+rs", "huffman+rs", "deflate+rs", "context+ldpc", "context4+rs", ...
  static SchemeSpec parse(std::string_view text);
  std::string name() const;
};

struct TransmissionRecord {
  std::string scheme;
  double snr_db = 0.0;  // Eb/N0, Eb counted over source-coded bits
  uint64_t trials = 0;  // words evaluated
  double src_bits_per_word = 0.0;
  double coded_bits_per_word = 0.0;
  double wer = 1.0;
  bool reliable = false;
  bool feasible = false;
  ParityPlan plan;
};

struct SweepOptions {
  std::vector<double> snr_grid_db{0, 2, 4, 6, 8, 10};
  double epsilon = 1e-3;
  uint64_t min_words = 10000;  // Monte Carlo word budget per evaluation point
  uint64_t seed = 1;
  bool include_framing = true;  // count per-document framing bits in the rates
};

struct SweepReport {
  std::vector<TransmissionRecord> records;  // sorted by (scheme, snr)
  double markov_bpw = 0.0;                  // order-1 entropy, bits per word
  double ncc_context_bpw = 0.0;             // context-model NCC bound, bits per word
  std::vector<std::pair<std::string, double>> source_rates_bpw;  // per scheme
};

/// One document through source coding, channel coding, BPSK and AWGN, then
/// decoding; WER by positional word comparison. config.snr_db is Eb/N0 and
/// trials are independent channel realizations with derived seeds.
TransmissionRecord run_transmission(const SchemeSpec& scheme, const Document& doc,
                                    const ChannelConfig& config, const Corpus& knowledge,
                                    double epsilon = 1e-3, uint64_t trials = 32,
                                    std::optional<int> parity_override = std::nullopt);

/// Full experiment: per (scheme, SNR) optimize parity to meet epsilon, record
/// coded bits per word; infeasible points are recorded and the sweep goes on.
SweepReport sweep(const std::vector<SchemeSpec>& schemes, const Corpus& knowledge, const Corpus& test,
                  const SweepOptions& options);

struct Fig4Row {
  std::string corpus;
  std::string compressor;
  double ncc_bpc = 0.0;
  double achieved_bpc = 0.0;  // real coder output, same compressor family
  double markov_bpc = 0.0;    // order-1 entropy
  bool ncc_le_achieved = false;
};

/// Per-corpus compression-rate table: NCC bound vs the compressor's achieved
/// rate vs first-order Markov entropy. Each corpus is split internally.
std::vector<Fig4Row> report_fig4(const std::vector<std::pair<std::string, Corpus>>& corpora,
                                 CompressorId compressor, double test_fraction = 0.1, uint64_t seed = 7);

void write_sweep_csv(const SweepReport& report, uint64_t seed, std::ostream& out);
void write_fig4_csv(const std::vector<Fig4Row>& rows, std::ostream& out);
void write_parity_plan_csv(const std::vector<ParityPlan>& plans, std::ostream& out);

}  // namespace semcom
