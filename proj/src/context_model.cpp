#include "semcom/context_model.hpp"

#include <cmath>
#include <stdexcept>

#include "semcom/range_coder.hpp"

namespace semcom {

ContextModel::ContextModel(int order) : order_(order) {
  if (order < 0 || order > 8) throw std::invalid_argument("ContextModel: order must be in [0,8]");
  mask_ = order == 0 ? 0 : (order == 8 ? ~0ull : (1ull << (8 * order)) - 1);
}

ContextModel::ContextCounts& ContextModel::slot(uint64_t key) { return contexts_[key]; }

void ContextModel::update(ContextCounts& ctx, uint8_t symbol) {
  ctx.counts[symbol] += kCountIncrement;
  ctx.total += kCountIncrement;
  if (ctx.total >= kRescaleLimit) {
    uint32_t total = 0;
    for (auto& c : ctx.counts) {
      c = (c + 1) >> 1;  // stays >= 1
      total += c;
    }
    ctx.total = total;
  }
}

void ContextModel::prime(std::span<const uint8_t> text) {
  uint64_t history = 0;
  for (uint8_t b : text) {
    update(slot(context_key(history)), b);
    history = (history << 8) | b;
  }
}

uint64_t ContextModel::ideal_bits(std::span<const uint8_t> text) const {
  ContextModel copy(*this);
  double bits = 0.0;
  uint64_t history = 0;
  for (uint8_t b : text) {
    auto& ctx = copy.slot(copy.context_key(history));
    bits -= std::log2(static_cast<double>(ctx.counts[b]) / static_cast<double>(ctx.total));
    copy.update(ctx, b);
    history = (history << 8) | b;
  }
  return static_cast<uint64_t>(std::ceil(bits)) + 2;
}

std::vector<uint8_t> ContextModel::encode(std::span<const uint8_t> text) const {
  ContextModel copy(*this);
  std::vector<uint8_t> out;
  RangeEncoder enc(out);
  uint64_t history = 0;
  for (uint8_t b : text) {
    auto& ctx = copy.slot(copy.context_key(history));
    uint32_t cum = 0;
    for (int s = 0; s < b; ++s) cum += ctx.counts[s];
    enc.encode(cum, ctx.counts[b], ctx.total);
    copy.update(ctx, b);
    history = (history << 8) | b;
  }
  enc.flush();
  return out;
}

std::vector<uint8_t> ContextModel::decode(std::span<const uint8_t> stream, size_t symbol_count) const {
  ContextModel copy(*this);
  std::vector<uint8_t> out;
  out.reserve(symbol_count);
  RangeDecoder dec(stream);
  uint64_t history = 0;
  for (size_t i = 0; i < symbol_count; ++i) {
    auto& ctx = copy.slot(copy.context_key(history));
    uint32_t target = dec.decode_target(ctx.total);
    uint32_t cum = 0;
    int sym = 0;
    while (cum + ctx.counts[sym] <= target) {
      cum += ctx.counts[sym];
      ++sym;
    }
    dec.consume(cum, ctx.counts[sym]);
    uint8_t b = static_cast<uint8_t>(sym);
    copy.update(ctx, b);
    out.push_back(b);
    history = (history << 8) | b;
  }
  return out;
}

}  // namespace semcom
