#include "semcom/huffman.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace semcom {

namespace {

struct Node {
  uint64_t weight;
  uint32_t created;  // creation index, used as the tie-break
  int left = -1;     // node indices; -1 for leaves
  int right = -1;
  int symbol = -1;
};

}  // namespace

HuffmanTable HuffmanTable::build(const std::map<uint8_t, uint64_t>& counts) {
  std::vector<Node> nodes;
  for (const auto& [sym, cnt] : counts) {
    if (cnt == 0) continue;
    nodes.push_back({cnt, static_cast<uint32_t>(nodes.size()), -1, -1, sym});
  }
  if (nodes.empty()) throw std::invalid_argument("huffman_build: no symbol with positive count");

  HuffmanTable table;

  if (nodes.size() == 1) {
    table.lengths_[nodes[0].symbol] = 1;
    table.assign_canonical();
    return table;
  }

  auto cmp = [&nodes](int a, int b) {
    if (nodes[a].weight != nodes[b].weight) return nodes[a].weight > nodes[b].weight;
    return nodes[a].created > nodes[b].created;  // earlier-created node wins ties
  };
  std::priority_queue<int, std::vector<int>, decltype(cmp)> heap(cmp);
  for (size_t i = 0; i < nodes.size(); ++i) heap.push(static_cast<int>(i));

  while (heap.size() > 1) {
    int a = heap.top(); heap.pop();
    int b = heap.top(); heap.pop();
    nodes.push_back({nodes[a].weight + nodes[b].weight, static_cast<uint32_t>(nodes.size()), a, b, -1});
    heap.push(static_cast<int>(nodes.size() - 1));
  }

  // Depth-first walk to collect code lengths; codewords come from the
  // canonical assignment, not the tree shape.
  std::vector<std::pair<int, int>> stack{{heap.top(), 0}};
  while (!stack.empty()) {
    auto [idx, depth] = stack.back();
    stack.pop_back();
    const Node& nd = nodes[idx];
    if (nd.symbol >= 0) {
      if (depth > 63) throw std::runtime_error("huffman_build: code length exceeds 63 bits");
      table.lengths_[nd.symbol] = static_cast<uint8_t>(depth);
    } else {
      stack.push_back({nd.left, depth + 1});
      stack.push_back({nd.right, depth + 1});
    }
  }
  table.assign_canonical();
  return table;
}

void HuffmanTable::assign_canonical() {
  entries_.clear();
  for (int s = 0; s < 256; ++s) {
    if (lengths_[s] != 0) entries_.push_back({static_cast<uint8_t>(s), lengths_[s], 0});
  }
  std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.symbol < b.symbol;
  });
  uint32_t code = 0;
  uint8_t prev_len = entries_.empty() ? 0 : entries_.front().length;
  for (auto& e : entries_) {
    code <<= (e.length - prev_len);
    prev_len = e.length;
    e.codeword = code;
    codewords_[e.symbol] = code;
    ++code;
  }
}

uint64_t HuffmanTable::scaled_kraft_sum() const {
  uint8_t maxlen = max_length();
  uint64_t sum = 0;
  for (const auto& e : entries_) sum += 1ull << (maxlen - e.length);
  return sum;
}

uint8_t HuffmanTable::max_length() const {
  uint8_t m = 0;
  for (const auto& e : entries_) m = std::max(m, e.length);
  return m;
}

uint64_t HuffmanTable::measure_bits(std::string_view text) const {
  uint64_t bits = 0;
  for (char c : text) {
    uint8_t s = static_cast<uint8_t>(c);
    if (!contains(s)) throw std::invalid_argument("huffman_measure: symbol missing from table");
    bits += lengths_[s];
  }
  return bits;
}

void HuffmanTable::encode(std::string_view text, BitWriter& out) const {
  for (char c : text) {
    uint8_t s = static_cast<uint8_t>(c);
    if (!contains(s)) throw std::invalid_argument("huffman encode: symbol missing from table");
    out.push_bits(codewords_[s], lengths_[s]);
  }
}

std::string HuffmanTable::decode(BitReader& in, size_t symbol_count) const {
  std::string out;
  out.reserve(symbol_count);
  for (size_t i = 0; i < symbol_count; ++i) {
    uint32_t code = 0;
    uint8_t len = 0;
    size_t pos = 0;  // entries_ is sorted by length, so scan lengths in order
    bool found = false;
    while (pos < entries_.size()) {
      uint8_t target = entries_[pos].length;
      while (len < target) {
        code = (code << 1) | in.read_bit();
        ++len;
      }
      while (pos < entries_.size() && entries_[pos].length == target) {
        if (entries_[pos].codeword == code) {
          out.push_back(static_cast<char>(entries_[pos].symbol));
          found = true;
          break;
        }
        ++pos;
      }
      if (found) break;
    }
    if (!found) throw std::runtime_error("huffman decode: invalid codeword");
  }
  return out;
}

void HuffmanTable::serialize(BitWriter& out) const {
  out.push_bits(entries_.size(), 16);
  std::vector<Entry> sorted = entries_;
  std::sort(sorted.begin(), sorted.end(), [](const Entry& a, const Entry& b) { return a.symbol < b.symbol; });
  for (const auto& e : sorted) {
    out.push_bits(e.symbol, 8);
    out.push_bits(e.length, 6);
  }
}

HuffmanTable HuffmanTable::deserialize(BitReader& in) {
  HuffmanTable table;
  uint64_t n = in.read_bits(16);
  for (uint64_t i = 0; i < n; ++i) {
    uint8_t sym = static_cast<uint8_t>(in.read_bits(8));
    uint8_t len = static_cast<uint8_t>(in.read_bits(6));
    if (len == 0) throw std::runtime_error("huffman table: zero code length");
    table.lengths_[sym] = len;
  }
  table.assign_canonical();
  return table;
}

std::map<uint8_t, uint64_t> symbol_counts(std::string_view text) {
  std::map<uint8_t, uint64_t> counts;
  for (char c : text) ++counts[static_cast<uint8_t>(c)];
  return counts;
}

uint64_t huffman_measure(std::string_view text, const HuffmanTable& table, bool include_table) {
  return table.measure_bits(text) + (include_table ? table.serialized_bits() : 0);
}

}  // namespace semcom
