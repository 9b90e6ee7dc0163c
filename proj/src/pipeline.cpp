#include "semcom/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "semcom/alphabet.hpp"
#include "semcom/bits.hpp"
#include "semcom/context_model.hpp"
#include "semcom/deflate.hpp"
#include "semcom/huffman.hpp"
#include "semcom/ldpc.hpp"
#include "semcom/markov.hpp"
#include "semcom/rs.hpp"

namespace semcom {

namespace {

constexpr char kErasedChar = '\x01';  // never a member of the text alphabet
constexpr size_t kMaxPayloadBytes = 65535;
constexpr unsigned kRsBlockLength = 255;
constexpr unsigned kLdpcBlockLength = 1024;
constexpr uint64_t kLdpcConstructionSeed = 1;

// Parity grids for the optimizer: RS parity symbols per 255-symbol block,
// LDPC parity bits per 1024-bit block.
const std::vector<int> kRsParityGrid = [] {
  std::vector<int> g;
  for (int p = 2; p <= 128; p += 2) g.push_back(p);
  return g;
}();
const std::vector<int> kLdpcParityGrid = {32, 64, 128, 192, 256, 320, 384, 448, 512, 640, 768};

std::span<const uint8_t> as_bytes(const std::string& s) {
  return {reinterpret_cast<const uint8_t*>(s.data()), s.size()};
}

void put_u16(std::vector<uint8_t>& out, uint16_t v) {
  out.push_back(static_cast<uint8_t>(v & 0xFF));
  out.push_back(static_cast<uint8_t>(v >> 8));
}

void put_u32(std::vector<uint8_t>& out, uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<uint8_t>(v >> (8 * i)));
}

uint32_t get_u32(std::span<const uint8_t> bytes) {
  uint32_t v = 0;
  for (int i = 3; i >= 0; --i) v = (v << 8) | bytes[i];
  return v;
}

// ---------------------------------------------------------------------------
// Source coding. Every payload starts with a u32 character count so each
// decoder knows exactly where to stop.

std::vector<uint8_t> source_encode(const SourceCoderSpec& spec, const std::string& text,
                                   const ContextModel* primed_model) {
  std::vector<uint8_t> payload;
  put_u32(payload, static_cast<uint32_t>(text.size()));
  switch (spec.kind) {
    case SourceCoderSpec::Kind::fixed5: {
      auto packed = encode_fixed5(text);
      payload.insert(payload.end(), packed.begin(), packed.end());
      break;
    }
    case SourceCoderSpec::Kind::huffman: {
      HuffmanTable table = HuffmanTable::build(symbol_counts(text));
      BitWriter w;
      table.serialize(w);
      table.encode(text, w);
      auto packed = w.take();
      payload.insert(payload.end(), packed.begin(), packed.end());
      break;
    }
    case SourceCoderSpec::Kind::deflate: {
      auto stream = deflate_compress(as_bytes(text));
      payload.insert(payload.end(), stream.begin(), stream.end());
      break;
    }
    case SourceCoderSpec::Kind::context: {
      if (!primed_model) throw std::invalid_argument("context scheme requires a primed model");
      auto stream = primed_model->encode(as_bytes(text));
      payload.insert(payload.end(), stream.begin(), stream.end());
      break;
    }
  }
  if (payload.size() > kMaxPayloadBytes)
    throw std::runtime_error("document too large for the 2-byte frame header");
  return payload;
}

// Decodes what can be decoded. `valid` marks payload bytes that survived
// channel decoding. Fixed5 localizes damage to the affected characters;
// variable-length coders decode the clean prefix and lose everything from
// the first erased byte on.
std::string source_decode(const SourceCoderSpec& spec, std::span<const uint8_t> payload,
                          std::span<const char> valid, const ContextModel* primed_model) {
  if (payload.size() < 4) return {};
  for (int i = 0; i < 4; ++i)
    if (!valid[i]) return {};
  size_t char_count = get_u32(payload);
  std::span<const uint8_t> body = payload.subspan(4);
  std::span<const char> body_valid = valid.subspan(4);

  size_t clean_prefix = 0;
  while (clean_prefix < body.size() && body_valid[clean_prefix]) ++clean_prefix;

  switch (spec.kind) {
    case SourceCoderSpec::Kind::fixed5: {
      const auto& alphabet = Alphabet32::standard();
      size_t available = body.size() * 8 / kSymbolBits;
      size_t count = std::min(char_count, available);
      std::string out;
      out.reserve(count);
      BitReader r(body);
      for (size_t i = 0; i < count; ++i) {
        size_t first_byte = (i * kSymbolBits) / 8;
        size_t last_byte = (i * kSymbolBits + kSymbolBits - 1) / 8;
        uint8_t idx = static_cast<uint8_t>(r.read_bits(kSymbolBits));
        bool ok = true;
        for (size_t b = first_byte; b <= last_byte; ++b) ok = ok && body_valid[b];
        out.push_back(ok ? alphabet.symbol(idx) : kErasedChar);
      }
      return out;
    }
    case SourceCoderSpec::Kind::huffman: {
      // Decode from the clean prefix; a truncated or corrupt stream keeps
      // whatever decoded before the failure point.
      std::string out;
      out.reserve(char_count);
      try {
        BitReader r(body.first(clean_prefix));
        HuffmanTable table = HuffmanTable::deserialize(r);
        for (size_t i = 0; i < char_count; ++i) out.push_back(table.decode(r, 1)[0]);
      } catch (const std::exception&) {
      }
      return out;
    }
    case SourceCoderSpec::Kind::deflate: {
      std::vector<uint8_t> bytes;
      try {
        bytes = deflate_decompress(body.first(clean_prefix));
      } catch (const std::exception&) {
        bytes.clear();  // desynchronized; the whole document is lost
      }
      if (bytes.size() > char_count) bytes.resize(char_count);
      return std::string(bytes.begin(), bytes.end());
    }
    case SourceCoderSpec::Kind::context: {
      if (!primed_model) return {};
      auto bytes = primed_model->decode(body.first(clean_prefix), char_count);
      return std::string(bytes.begin(), bytes.end());
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Channel stage.

struct ChannelResult {
  std::vector<uint8_t> bytes;    // recovered stream
  std::vector<char> valid;       // per byte, survived channel decoding
  uint64_t channel_bits = 0;     // transmitted bits, source + parity exactly
  uint64_t parity_bits = 0;
};

std::vector<uint8_t> bytes_to_bits(std::span<const uint8_t> bytes) {
  std::vector<uint8_t> bits(bytes.size() * 8);
  for (size_t i = 0; i < bytes.size(); ++i)
    for (int b = 0; b < 8; ++b) bits[i * 8 + b] = (bytes[i] >> (7 - b)) & 1;
  return bits;
}

std::vector<uint8_t> bits_to_bytes(std::span<const uint8_t> bits) {
  std::vector<uint8_t> bytes((bits.size() + 7) / 8, 0);
  for (size_t i = 0; i < bits.size(); ++i)
    if (bits[i] & 1) bytes[i / 8] |= static_cast<uint8_t>(0x80 >> (i % 8));
  return bytes;
}

ChannelResult rs_transmit(std::span<const uint8_t> stream, int parity, const ChannelConfig& config) {
  const auto& gf = GaloisField::gf256();
  const unsigned k = kRsBlockLength - static_cast<unsigned>(parity);
  RsCode code(gf, kRsBlockLength, k);

  struct Block {
    size_t offset;
    unsigned length;  // message symbols in this block
  };
  std::vector<Block> blocks;
  std::vector<uint8_t> tx_bytes;
  for (size_t off = 0; off < stream.size(); off += k) {
    unsigned len = static_cast<unsigned>(std::min<size_t>(k, stream.size() - off));
    blocks.push_back({off, len});
    auto cw = len == k ? code.encode(stream.subspan(off, len)) : code.encode_shortened(stream.subspan(off, len));
    tx_bytes.insert(tx_bytes.end(), cw.begin(), cw.end());
  }

  auto bits = bytes_to_bits(tx_bytes);
  auto samples = awgn_apply(bpsk_modulate(bits), config);
  auto llrs = llr_from_samples(samples, config);
  auto received_bits = hard_decisions(llrs);
  auto received = bits_to_bytes(received_bits);

  ChannelResult result;
  result.bytes.assign(stream.size(), 0);
  result.valid.assign(stream.size(), 0);
  result.channel_bits = bits.size();
  result.parity_bits = 8ull * blocks.size() * static_cast<size_t>(parity);

  size_t rx_off = 0;
  for (const auto& blk : blocks) {
    std::span<const uint8_t> word(received.data() + rx_off, blk.length + parity);
    rx_off += blk.length + parity;
    auto decoded = blk.length == k ? code.decode(word) : code.decode_shortened(word, blk.length);
    if (decoded) {
      std::copy(decoded->message.begin(), decoded->message.end(), result.bytes.begin() + blk.offset);
      std::fill_n(result.valid.begin() + blk.offset, blk.length, 1);
    }
  }
  return result;
}

ChannelResult ldpc_transmit(std::span<const uint8_t> stream, const LdpcCode& code,
                            const ChannelConfig& config) {
  auto msg_bits = bytes_to_bits(stream);
  const unsigned k = code.k();

  std::vector<bool> is_info(code.n(), false);
  for (unsigned p : code.info_positions()) is_info[p] = true;
  std::vector<unsigned> parity_cols;
  for (unsigned c = 0; c < code.n(); ++c)
    if (!is_info[c]) parity_cols.push_back(c);

  struct Block {
    size_t bit_offset;
    unsigned used;  // message bits carried; the rest are known zeros
  };
  std::vector<Block> blocks;
  std::vector<uint8_t> tx_bits;
  for (size_t off = 0; off < msg_bits.size(); off += k) {
    unsigned used = static_cast<unsigned>(std::min<size_t>(k, msg_bits.size() - off));
    blocks.push_back({off, used});
    std::vector<uint8_t> message(k, 0);
    std::copy(msg_bits.begin() + off, msg_bits.begin() + off + used, message.begin());
    auto cw = code.encode(message);
    // Shortened transmission: used info positions, then every parity position.
    for (unsigned j = 0; j < used; ++j) tx_bits.push_back(cw[code.info_positions()[j]]);
    for (unsigned c : parity_cols) tx_bits.push_back(cw[c]);
  }

  auto samples = awgn_apply(bpsk_modulate(tx_bits), config);
  auto llrs = llr_from_samples(samples, config);

  ChannelResult result;
  result.channel_bits = tx_bits.size();
  result.parity_bits = static_cast<uint64_t>(blocks.size()) * code.m();

  std::vector<uint8_t> out_bits(msg_bits.size(), 0);
  std::vector<char> bit_valid(msg_bits.size(), 0);

  size_t rx = 0;
  for (const auto& blk : blocks) {
    std::vector<double> block_llrs(code.n(), kLlrSentinel);  // shortened bits are known zeros
    for (unsigned j = 0; j < blk.used; ++j) block_llrs[code.info_positions()[j]] = llrs[rx + j];
    size_t pi = rx + blk.used;
    for (unsigned c : parity_cols) block_llrs[c] = llrs[pi++];
    rx += blk.used + code.m();

    auto bp = code.decode(block_llrs);
    if (bp.converged) {
      for (unsigned j = 0; j < blk.used; ++j) out_bits[blk.bit_offset + j] = bp.message[j];
      std::fill_n(bit_valid.begin() + blk.bit_offset, blk.used, 1);
    }
  }

  result.bytes = bits_to_bytes(out_bits);
  result.bytes.resize(stream.size());
  result.valid.assign(stream.size(), 1);
  for (size_t i = 0; i < msg_bits.size(); ++i)
    if (!bit_valid[i]) result.valid[i / 8] = 0;
  return result;
}

// ---------------------------------------------------------------------------
// Transmission driver.

struct PreparedDoc {
  const Document* doc;
  std::vector<uint8_t> frame;  // u16 length + payload
  std::vector<std::string> words;
};

struct SchemeContext {
  std::shared_ptr<ContextModel> model;  // primed context model, shared tx/rx
};

SchemeContext make_scheme_context(const SchemeSpec& scheme, const Corpus& knowledge) {
  SchemeContext ctx;
  if (scheme.source.kind == SourceCoderSpec::Kind::context) {
    if (scheme.source.primed && knowledge.empty())
      throw std::invalid_argument("context priming requires a knowledge base");
    ctx.model = std::make_shared<ContextModel>(scheme.source.order);
    if (scheme.source.primed) {
      auto serialized = serialize_corpus(knowledge);
      ctx.model->prime(serialized);
    }
  }
  return ctx;
}

PreparedDoc prepare_doc(const SchemeSpec& scheme, const Document& doc, const SchemeContext& ctx) {
  PreparedDoc p;
  p.doc = &doc;
  auto payload = source_encode(scheme.source, doc.text, ctx.model.get());
  put_u16(p.frame, static_cast<uint16_t>(payload.size()));
  p.frame.insert(p.frame.end(), payload.begin(), payload.end());
  auto tokens = tokenize_words(doc.text);
  p.words.assign(tokens.begin(), tokens.end());
  return p;
}

uint64_t channel_bits_for(const SchemeSpec& scheme, size_t frame_bytes, int parity) {
  if (scheme.channel == SchemeSpec::Channel::rs) {
    unsigned k = kRsBlockLength - static_cast<unsigned>(parity);
    uint64_t nblocks = (frame_bytes + k - 1) / k;
    return 8ull * (frame_bytes + nblocks * static_cast<uint64_t>(parity));
  }
  unsigned k = kLdpcBlockLength - static_cast<unsigned>(parity);
  uint64_t nbits = 8ull * frame_bytes;
  uint64_t nblocks = (nbits + k - 1) / k;
  return nbits + nblocks * static_cast<uint64_t>(parity);
}

const LdpcCode& ldpc_for_parity(int parity) {
  static std::map<int, LdpcCode> registry;
  auto it = registry.find(parity);
  if (it == registry.end()) {
    it = registry
             .emplace(parity, LdpcCode::construct(kLdpcBlockLength, static_cast<unsigned>(parity),
                                                  kLdpcConstructionSeed))
             .first;
  }
  return it->second;
}

// One document, one channel realization. Returns word errors.
uint64_t transmit_once(const SchemeSpec& scheme, const PreparedDoc& prepared, const SchemeContext& ctx,
                       int parity, double ebn0_db, uint64_t seed) {
  uint64_t src_bits = 8ull * prepared.frame.size();
  uint64_t chan_bits = channel_bits_for(scheme, prepared.frame.size(), parity);
  double rate = static_cast<double>(src_bits) / static_cast<double>(chan_bits);
  ChannelConfig config{esn0_from_ebn0(ebn0_db, rate), seed};

  ChannelResult rx = scheme.channel == SchemeSpec::Channel::rs
                         ? rs_transmit(prepared.frame, parity, config)
                         : ldpc_transmit(prepared.frame, ldpc_for_parity(parity), config);

  // Strip the frame: u16 length, then payload.
  std::string decoded_text;
  if (rx.bytes.size() >= 2 && rx.valid[0] && rx.valid[1]) {
    size_t len = rx.bytes[0] | (static_cast<size_t>(rx.bytes[1]) << 8);
    len = std::min(len, rx.bytes.size() - 2);
    decoded_text = source_decode(scheme.source, {rx.bytes.data() + 2, len},
                                 {rx.valid.data() + 2, len}, ctx.model.get());
  }

  auto decoded_tokens = tokenize_words(decoded_text);
  uint64_t errors = 0;
  for (size_t i = 0; i < prepared.words.size(); ++i) {
    if (i >= decoded_tokens.size() || decoded_tokens[i] != prepared.words[i]) ++errors;
  }
  return errors;
}

struct EvalStats {
  uint64_t words = 0;
  uint64_t errors = 0;
  double wer() const { return words == 0 ? 1.0 : static_cast<double>(errors) / static_cast<double>(words); }
};

EvalStats evaluate_wer(const SchemeSpec& scheme, std::span<const PreparedDoc> docs, const SchemeContext& ctx,
                       int parity, double ebn0_db, uint64_t base_seed, uint64_t min_words) {
  EvalStats stats;
  uint64_t trial = 0;
  while (stats.words < min_words) {
    for (const auto& doc : docs) {
      stats.errors += transmit_once(scheme, doc, ctx, parity, ebn0_db, base_seed + trial);
      stats.words += doc.words.size();
      ++trial;
      if (stats.words >= min_words) break;
    }
  }
  return stats;
}

uint64_t parity_eval_seed(uint64_t base, int parity) { return base + 1000003ull * static_cast<uint64_t>(parity); }

const std::vector<int>& parity_grid_for(const SchemeSpec& scheme) {
  return scheme.channel == SchemeSpec::Channel::rs ? kRsParityGrid : kLdpcParityGrid;
}

}  // namespace

std::string SourceCoderSpec::name() const {
  switch (kind) {
    case Kind::fixed5: return "fixed5";
    case Kind::huffman: return "huffman";
    case Kind::deflate: return "deflate";
    case Kind::context: return "context" + std::to_string(order) + (primed ? "" : "u");
  }
  return "?";
}

SchemeSpec SchemeSpec::parse(std::string_view text) {
  auto plus = text.find('+');
  if (plus == std::string_view::npos) throw std::invalid_argument("scheme must look like <source>+<channel>");
  std::string_view src = text.substr(0, plus);
  std::string_view chan = text.substr(plus + 1);

  SchemeSpec scheme;
  if (src == "fixed5") {
    scheme.source.kind = SourceCoderSpec::Kind::fixed5;
  } else if (src == "huffman") {
    scheme.source.kind = SourceCoderSpec::Kind::huffman;
  } else if (src == "deflate" || src == "gzip") {
    scheme.source.kind = SourceCoderSpec::Kind::deflate;
  } else if (src.starts_with("context")) {
    scheme.source.kind = SourceCoderSpec::Kind::context;
    scheme.source.primed = true;
    std::string_view rest = src.substr(7);
    if (!rest.empty() && rest.back() == 'u') {
      scheme.source.primed = false;
      rest.remove_suffix(1);
    }
    if (!rest.empty()) {
      int order = 0;
      for (char c : rest) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad context order in scheme");
        order = order * 10 + (c - '0');
      }
      scheme.source.order = order;
    }
  } else {
    throw std::invalid_argument("unknown source coder: " + std::string(src));
  }

  if (chan == "rs") {
    scheme.channel = Channel::rs;
  } else if (chan == "ldpc") {
    scheme.channel = Channel::ldpc;
  } else {
    throw std::invalid_argument("unknown channel coder: " + std::string(chan));
  }
  return scheme;
}

std::string SchemeSpec::name() const {
  return source.name() + (channel == Channel::rs ? "+rs" : "+ldpc");
}

TransmissionRecord run_transmission(const SchemeSpec& scheme, const Document& doc,
                                    const ChannelConfig& config, const Corpus& knowledge, double epsilon,
                                    uint64_t trials, std::optional<int> parity_override) {
  if (doc.text.empty()) throw std::invalid_argument("run_transmission: empty document");
  SchemeContext ctx = make_scheme_context(scheme, knowledge);
  PreparedDoc prepared = prepare_doc(scheme, doc, ctx);
  std::vector<PreparedDoc> docs;
  docs.push_back(std::move(prepared));
  const PreparedDoc& p = docs.front();

  const auto& grid = parity_grid_for(scheme);
  std::optional<int> fixed = parity_override ? parity_override : scheme.fixed_parity;

  ParityPlan plan;
  uint64_t min_words = std::max<uint64_t>(1, trials * p.words.size());
  if (fixed) {
    plan.scheme = scheme.name();
    plan.snr_db = config.snr_db;
    plan.epsilon = epsilon;
    plan.parity = *fixed;
    auto stats = evaluate_wer(scheme, docs, ctx, *fixed, config.snr_db, config.seed, min_words);
    plan.wer = stats.wer();
    plan.trials = stats.words;
    plan.feasible = plan.wer <= epsilon;
  } else {
    plan = optimize_parity(scheme.name(), config.snr_db, epsilon, grid,
                           [&](int parity) {
                             return evaluate_wer(scheme, docs, ctx, parity, config.snr_db,
                                                 parity_eval_seed(config.seed, parity), min_words)
                                 .wer();
                           },
                           min_words);
  }

  TransmissionRecord record;
  record.scheme = scheme.name();
  record.snr_db = config.snr_db;
  record.trials = plan.trials ? plan.trials : min_words;
  record.plan = plan;
  record.feasible = plan.feasible;
  record.wer = plan.wer;
  record.reliable = plan.feasible && plan.wer <= epsilon;

  uint64_t src_bits = 8ull * p.frame.size();
  uint64_t chan_bits = channel_bits_for(scheme, p.frame.size(), plan.parity);
  double words = static_cast<double>(p.words.size());
  record.src_bits_per_word = static_cast<double>(src_bits) / words;
  record.coded_bits_per_word = static_cast<double>(chan_bits) / words;
  return record;
}

SweepReport sweep(const std::vector<SchemeSpec>& schemes, const Corpus& knowledge, const Corpus& test,
                  const SweepOptions& options) {
  if (options.snr_grid_db.empty()) throw std::invalid_argument("sweep: empty SNR grid");
  if (test.empty()) throw std::invalid_argument("sweep: empty test corpus");

  SweepReport report;

  // Reference lines.
  double chars = static_cast<double>(test.total_chars());
  double words = static_cast<double>(test.total_words());
  report.markov_bpw = markov_entropy(test, 1) * (chars / words);
  if (!knowledge.empty()) {
    NccOptions ncc_opts;
    report.ncc_context_bpw = ncc_bound(CompressorId{CompressorId::Kind::context, 3}, test, knowledge, ncc_opts).ncc_bpw;
  }

  for (const auto& scheme : schemes) {
    SchemeContext ctx = make_scheme_context(scheme, knowledge);
    std::vector<PreparedDoc> docs;
    docs.reserve(test.documents.size());
    uint64_t src_bits = 0, total_words = 0;
    for (const auto& d : test.documents) {
      docs.push_back(prepare_doc(scheme, d, ctx));
      src_bits += 8ull * docs.back().frame.size();
      total_words += docs.back().words.size();
    }
    report.source_rates_bpw.push_back(
        {scheme.name(), static_cast<double>(src_bits) / static_cast<double>(total_words)});

    const auto& grid = parity_grid_for(scheme);
    for (double snr : options.snr_grid_db) {
      ParityPlan plan;
      if (scheme.fixed_parity) {
        plan.scheme = scheme.name();
        plan.snr_db = snr;
        plan.epsilon = options.epsilon;
        plan.parity = *scheme.fixed_parity;
        auto stats = evaluate_wer(scheme, docs, ctx, plan.parity, snr,
                                  parity_eval_seed(options.seed, plan.parity), options.min_words);
        plan.wer = stats.wer();
        plan.trials = stats.words;
        plan.feasible = plan.wer <= options.epsilon;
      } else {
        plan = optimize_parity(
            scheme.name(), snr, options.epsilon, grid,
            [&](int parity) {
              return evaluate_wer(scheme, docs, ctx, parity, snr, parity_eval_seed(options.seed, parity),
                                  options.min_words)
                  .wer();
            },
            options.min_words);
      }

      TransmissionRecord record;
      record.scheme = scheme.name();
      record.snr_db = snr;
      record.trials = plan.trials;
      record.plan = plan;
      record.feasible = plan.feasible;
      record.wer = plan.wer;
      record.reliable = plan.feasible && plan.wer <= options.epsilon;
      uint64_t chan_bits = 0;
      for (const auto& d : docs) chan_bits += channel_bits_for(scheme, d.frame.size(), plan.parity);
      record.src_bits_per_word = static_cast<double>(src_bits) / static_cast<double>(total_words);
      record.coded_bits_per_word = static_cast<double>(chan_bits) / static_cast<double>(total_words);
      report.records.push_back(std::move(record));
    }
  }

  std::sort(report.records.begin(), report.records.end(), [](const auto& a, const auto& b) {
    if (a.scheme != b.scheme) return a.scheme < b.scheme;
    return a.snr_db < b.snr_db;
  });
  return report;
}

std::vector<Fig4Row> report_fig4(const std::vector<std::pair<std::string, Corpus>>& corpora,
                                 CompressorId compressor, double test_fraction, uint64_t seed) {
  std::vector<Fig4Row> rows;
  for (const auto& [name, corpus] : corpora) {
    auto [knowledge, test] = split_corpus(corpus, test_fraction, seed);

    Fig4Row row;
    row.corpus = name;
    row.compressor = compressor.name();
    row.ncc_bpc = ncc_bound(compressor, test, knowledge, {}).ncc_bpc;
    row.markov_bpc = markov_entropy(corpus, 1);

    // Achieved rate: the real coder's output for the same conditioning.
    auto d_serialized = serialize_corpus(knowledge);
    double rate_sum = 0.0;
    for (const auto& doc : test.documents) {
      uint64_t bits = 0;
      switch (compressor.kind) {
        case CompressorId::Kind::context: {
          ContextModel model(compressor.order);
          model.prime(d_serialized);
          bits = 8ull * model.encode(as_bytes(doc.text)).size();
          break;
        }
        case CompressorId::Kind::deflate:
          bits = 8ull * deflate_compress(as_bytes(doc.text), d_serialized).size();
          break;
        case CompressorId::Kind::huffman:
          bits = measure(compressor, as_bytes(doc.text)).output_bits;
          break;
        case CompressorId::Kind::fixed5:
          bits = 5ull * doc.text.size();
          break;
      }
      rate_sum += static_cast<double>(bits) / static_cast<double>(doc.text.size());
    }
    row.achieved_bpc = rate_sum / static_cast<double>(test.documents.size());
    row.ncc_le_achieved = row.ncc_bpc <= row.achieved_bpc;
    rows.push_back(std::move(row));
  }
  return rows;
}

void write_sweep_csv(const SweepReport& report, uint64_t seed, std::ostream& out) {
  char buf[320];
  out << "scheme,snr_db,parity,src_bits_per_word,coded_bits_per_word,wer,reliable,trials,seed\n";
  for (const auto& r : report.records) {
    std::snprintf(buf, sizeof buf, "%s,%.6g,%d,%.6f,%.6f,%.6g,%d,%llu,%llu\n", r.scheme.c_str(), r.snr_db,
                  r.plan.parity, r.src_bits_per_word, r.coded_bits_per_word, r.wer, r.reliable ? 1 : 0,
                  static_cast<unsigned long long>(r.trials), static_cast<unsigned long long>(seed));
    out << buf;
  }
  std::snprintf(buf, sizeof buf, "ref:markov_entropy,,,,%.6f,,,,\n", report.markov_bpw);
  out << buf;
  std::snprintf(buf, sizeof buf, "ref:ncc_context3,,,,%.6f,,,,\n", report.ncc_context_bpw);
  out << buf;
  for (const auto& [scheme, bpw] : report.source_rates_bpw) {
    std::snprintf(buf, sizeof buf, "ref:source:%s,,,,%.6f,,,,\n", scheme.c_str(), bpw);
    out << buf;
  }
}

void write_fig4_csv(const std::vector<Fig4Row>& rows, std::ostream& out) {
  char buf[320];
  out << "corpus,compressor,ncc_bpc,achieved_bpc,markov_bpc,ncc_le_achieved\n";
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof buf, "%s,%s,%.6f,%.6f,%.6f,%d\n", r.corpus.c_str(), r.compressor.c_str(),
                  r.ncc_bpc, r.achieved_bpc, r.markov_bpc, r.ncc_le_achieved ? 1 : 0);
    out << buf;
  }
}

void write_parity_plan_csv(const std::vector<ParityPlan>& plans, std::ostream& out) {
  char buf[256];
  out << "scheme,snr_db,parity,wer,trials,feasible\n";
  for (const auto& p : plans) {
    std::snprintf(buf, sizeof buf, "%s,%.6g,%d,%.6g,%llu,%d\n", p.scheme.c_str(), p.snr_db, p.parity, p.wer,
                  static_cast<unsigned long long>(p.trials), p.feasible ? 1 : 0);
    out << buf;
  }
}

}  // namespace semcom
