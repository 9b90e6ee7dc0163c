#pragma once

#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "semcom/compressor.hpp"
#include "semcom/corpus.hpp"

namespace semcom {

enum class JointStrategy {
  conditioning,   // C(x,D) = measure(x | D as dictionary/priming) + C(D)
  concatenation,  // C(x,D) = measure(D || 0x00 || x)
};

struct NccOptions {
  JointStrategy strategy = JointStrategy::conditioning;
  bool length_weighted = false;  // expectation weighting over test documents
  MeasureOptions measure;
};

struct NccEntry {
  std::string id;
  uint64_t chars = 0;
  uint64_t words = 0;
  uint64_t c_joint_bits = 0;
  uint64_t c_cond_bits = 0;  // max(0, C(x,D) - C(D))
  double rate_bpc = 0.0;
};

struct NccReport {
  CompressorId compressor;
  uint64_t c_d_bits = 0;
  std::vector<NccEntry> entries;  // sorted by id
  double ncc_bpc = 0.0;           // expectation of per-sequence conditional rates
  double ncc_bpw = 0.0;           // total conditional bits / total words
};

/// Measurement hook: description length in bits of `data` given optional
/// conditioning bytes. The production hook wraps measure(); tests may inject
/// stubs.
using MeasureHook = std::function<uint64_t(std::span<const uint8_t> data, std::span<const uint8_t> conditioning)>;

/// C(D): complexity of the serialized knowledge base. Errors on empty D.
uint64_t knowledge_complexity(CompressorId id, const Corpus& knowledge, const MeasureOptions& options = {});

/// C(x,D) under the selected strategy. With an empty knowledge base this is
/// exactly the unconditional measurement of x.
uint64_t joint_complexity(CompressorId id, std::span<const uint8_t> x, const Corpus& knowledge,
                          JointStrategy strategy = JointStrategy::conditioning,
                          const MeasureOptions& options = {});

/// max(0, C(x,D) - C(D)) / l(x) in bits per character.
double conditional_rate(CompressorId id, std::span<const uint8_t> x, const Corpus& knowledge,
                        JointStrategy strategy = JointStrategy::conditioning,
                        const MeasureOptions& options = {});

/// Full report over a test set; C(D) is computed once and reused.
NccReport ncc_bound(CompressorId id, const Corpus& test_set, const Corpus& knowledge,
                    const NccOptions& options = {});

/// Same, with an injected measurement hook (the arithmetic under test is
/// independent of any real compressor).
NccReport ncc_bound_with(const MeasureHook& hook, CompressorId label, const Corpus& test_set,
                         const Corpus& knowledge, const NccOptions& options = {});

/// Pure report assembly from already-measured joint complexities: applies the
/// clamp, the normalization by l(x), and the expectation.
struct RawMeasurement {
  std::string id;
  uint64_t chars;
  uint64_t words;
  uint64_t c_joint_bits;
};
NccReport assemble_ncc_report(CompressorId label, uint64_t c_d_bits, std::vector<RawMeasurement> measurements,
                              bool length_weighted = false, bool subtract_c_d = true);

/// CSV: per-document rows, then a two-line summary block.
void write_ncc_csv(const NccReport& report, std::ostream& out);

}  // namespace semcom
