#include "semcom/ncc.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace semcom {

namespace {

std::span<const uint8_t> text_bytes(const std::string& text) {
  return {reinterpret_cast<const uint8_t*>(text.data()), text.size()};
}

MeasureHook production_hook(CompressorId id, const MeasureOptions& options) {
  return [id, options](std::span<const uint8_t> data, std::span<const uint8_t> conditioning) {
    return measure(id, data, conditioning, options).output_bits;
  };
}

uint64_t joint_with(const MeasureHook& hook, CompressorId id, std::span<const uint8_t> x,
                    const std::vector<uint8_t>& d_serialized, uint64_t c_d_bits, JointStrategy strategy) {
  if (x.empty()) throw std::invalid_argument("joint_complexity: empty sequence");
  if (d_serialized.empty()) return hook(x, {});  // degenerate rule: C(x,emptyset) = C(x)
  if (strategy == JointStrategy::conditioning) {
    // Non-conditioning surrogates ignore the dictionary; their joint is the
    // unconditional measure plus C(D).
    std::span<const uint8_t> cond = id.conditioning_capable() ? std::span<const uint8_t>(d_serialized)
                                                              : std::span<const uint8_t>{};
    return hook(x, cond) + c_d_bits;
  }
  std::vector<uint8_t> joined;
  joined.reserve(d_serialized.size() + 1 + x.size());
  joined.insert(joined.end(), d_serialized.begin(), d_serialized.end());
  joined.push_back(0x00);
  joined.insert(joined.end(), x.begin(), x.end());
  return hook(joined, {});
}

}  // namespace

uint64_t knowledge_complexity(CompressorId id, const Corpus& knowledge, const MeasureOptions& options) {
  if (knowledge.empty()) throw std::invalid_argument("knowledge_complexity: empty knowledge base");
  auto serialized = serialize_corpus(knowledge);
  return measure(id, serialized, {}, options).output_bits;
}

uint64_t joint_complexity(CompressorId id, std::span<const uint8_t> x, const Corpus& knowledge,
                          JointStrategy strategy, const MeasureOptions& options) {
  auto hook = production_hook(id, options);
  auto d_serialized = serialize_corpus(knowledge);
  uint64_t c_d = d_serialized.empty() ? 0 : hook(d_serialized, {});
  return joint_with(hook, id, x, d_serialized, c_d, strategy);
}

double conditional_rate(CompressorId id, std::span<const uint8_t> x, const Corpus& knowledge,
                        JointStrategy strategy, const MeasureOptions& options) {
  if (x.empty()) throw std::invalid_argument("conditional_rate: empty sequence");
  auto hook = production_hook(id, options);
  auto d_serialized = serialize_corpus(knowledge);
  if (d_serialized.empty()) {
    return static_cast<double>(hook(x, {})) / static_cast<double>(x.size());
  }
  uint64_t c_d = hook(d_serialized, {});
  uint64_t joint = joint_with(hook, id, x, d_serialized, c_d, strategy);
  uint64_t cond = joint > c_d ? joint - c_d : 0;
  return static_cast<double>(cond) / static_cast<double>(x.size());
}

NccReport assemble_ncc_report(CompressorId label, uint64_t c_d_bits, std::vector<RawMeasurement> measurements,
                              bool length_weighted, bool subtract_c_d) {
  if (measurements.empty()) throw std::invalid_argument("ncc: empty test set");
  NccReport report;
  report.compressor = label;
  report.c_d_bits = c_d_bits;

  std::sort(measurements.begin(), measurements.end(),
            [](const RawMeasurement& a, const RawMeasurement& b) { return a.id < b.id; });

  uint64_t total_cond = 0, total_chars = 0, total_words = 0;
  double rate_sum = 0.0;
  for (const auto& m : measurements) {
    if (m.chars == 0) throw std::invalid_argument("ncc: zero-length sequence " + m.id);
    NccEntry e;
    e.id = m.id;
    e.chars = m.chars;
    e.words = m.words;
    e.c_joint_bits = m.c_joint_bits;
    uint64_t base = subtract_c_d ? c_d_bits : 0;
    e.c_cond_bits = m.c_joint_bits > base ? m.c_joint_bits - base : 0;
    e.rate_bpc = static_cast<double>(e.c_cond_bits) / static_cast<double>(e.chars);
    rate_sum += e.rate_bpc;
    total_cond += e.c_cond_bits;
    total_chars += e.chars;
    total_words += e.words;
    report.entries.push_back(std::move(e));
  }

  report.ncc_bpc = length_weighted
                       ? static_cast<double>(total_cond) / static_cast<double>(total_chars)
                       : rate_sum / static_cast<double>(report.entries.size());
  report.ncc_bpw = total_words == 0 ? 0.0 : static_cast<double>(total_cond) / static_cast<double>(total_words);
  return report;
}

NccReport ncc_bound_with(const MeasureHook& hook, CompressorId label, const Corpus& test_set,
                         const Corpus& knowledge, const NccOptions& options) {
  if (test_set.empty()) throw std::invalid_argument("ncc_bound: empty test set");
  auto d_serialized = serialize_corpus(knowledge);
  bool have_knowledge = !d_serialized.empty();
  uint64_t c_d = have_knowledge ? hook(d_serialized, {}) : hook({}, {});

  std::vector<RawMeasurement> raw;
  raw.reserve(test_set.documents.size());
  for (const auto& doc : test_set.documents) {
    RawMeasurement m;
    m.id = doc.id;
    m.chars = doc.text.size();
    m.words = tokenize_words(doc.text).size();
    m.c_joint_bits = joint_with(hook, label, text_bytes(doc.text), d_serialized, c_d, options.strategy);
    raw.push_back(std::move(m));
  }
  // With no knowledge base the degenerate rule bypasses the subtraction; C(0)
  // header bits are reported but excluded.
  return assemble_ncc_report(label, c_d, std::move(raw), options.length_weighted,
                             /*subtract_c_d=*/have_knowledge);
}

NccReport ncc_bound(CompressorId id, const Corpus& test_set, const Corpus& knowledge,
                    const NccOptions& options) {
  return ncc_bound_with(production_hook(id, options.measure), id, test_set, knowledge, options);
}

void write_ncc_csv(const NccReport& report, std::ostream& out) {
  char buf[256];
  out << "id,chars,words,c_joint_bits,c_cond_bits,rate_bpc\n";
  for (const auto& e : report.entries) {
    std::snprintf(buf, sizeof buf, "%s,%llu,%llu,%llu,%llu,%.6f\n", e.id.c_str(),
                  static_cast<unsigned long long>(e.chars), static_cast<unsigned long long>(e.words),
                  static_cast<unsigned long long>(e.c_joint_bits),
                  static_cast<unsigned long long>(e.c_cond_bits), e.rate_bpc);
    out << buf;
  }
  out << "ncc_bpc,ncc_bpw,compressor,c_d_bits\n";
  std::snprintf(buf, sizeof buf, "%.6f,%.6f,%s,%llu\n", report.ncc_bpc, report.ncc_bpw,
                report.compressor.name().c_str(), static_cast<unsigned long long>(report.c_d_bits));
  out << buf;
}

}  // namespace semcom
