#include "semcom/compressor.hpp"

#include <stdexcept>

#include "semcom/context_model.hpp"
#include "semcom/deflate.hpp"
#include "semcom/huffman.hpp"

namespace semcom {

CompressorId CompressorId::parse(std::string_view name) {
  if (name == "fixed5") return {Kind::fixed5, 0};
  if (name == "huffman") return {Kind::huffman, 0};
  if (name == "deflate" || name == "gzip") return {Kind::deflate, 0};
  if (name.starts_with("context")) {
    int order = 3;
    std::string_view rest = name.substr(7);
    if (!rest.empty()) {
      if (rest.front() == '(') rest.remove_prefix(1);
      if (!rest.empty() && rest.back() == ')') rest.remove_suffix(1);
      order = 0;
      for (char c : rest) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad context order in compressor id");
        order = order * 10 + (c - '0');
      }
    }
    return {Kind::context, order};
  }
  throw std::invalid_argument("unknown compressor: " + std::string(name));
}

std::string CompressorId::name() const {
  switch (kind) {
    case Kind::fixed5: return "fixed5";
    case Kind::huffman: return "huffman";
    case Kind::deflate: return "deflate";
    case Kind::context: return "context" + std::to_string(order);
  }
  return "?";
}

ComplexityMeasurement measure(CompressorId id, std::span<const uint8_t> data,
                              std::span<const uint8_t> conditioning, const MeasureOptions& options) {
  ComplexityMeasurement m{id, data.size(), 0};
  switch (id.kind) {
    case CompressorId::Kind::fixed5:
      m.output_bits = 5ull * data.size();
      break;
    case CompressorId::Kind::huffman: {
      if (data.empty()) break;
      std::string_view text(reinterpret_cast<const char*>(data.data()), data.size());
      HuffmanTable table = HuffmanTable::build(symbol_counts(text));
      m.output_bits = huffman_measure(text, table, options.huffman_include_table);
      break;
    }
    case CompressorId::Kind::deflate:
      m.output_bits = deflate_measure_bits(data, conditioning);
      break;
    case CompressorId::Kind::context: {
      ContextModel model(id.order);
      if (!conditioning.empty()) model.prime(conditioning);
      m.output_bits = model.ideal_bits(data);
      break;
    }
  }
  return m;
}

}  // namespace semcom
