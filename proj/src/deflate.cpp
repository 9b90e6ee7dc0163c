#include "semcom/deflate.hpp"

#include <zlib.h>

#include <stdexcept>

namespace semcom {

namespace {

std::span<const uint8_t> clip_dictionary(std::span<const uint8_t> dict) {
  if (dict.size() > kDeflateWindow) return dict.subspan(dict.size() - kDeflateWindow);
  return dict;
}

}  // namespace

std::vector<uint8_t> deflate_compress(std::span<const uint8_t> data, std::span<const uint8_t> dictionary) {
  z_stream zs{};
  // windowBits -15: raw deflate, no zlib header or checksum.
  if (deflateInit2(&zs, 9, Z_DEFLATED, -15, 9, Z_DEFAULT_STRATEGY) != Z_OK)
    throw std::runtime_error("deflateInit2 failed");

  auto dict = clip_dictionary(dictionary);
  if (!dict.empty() &&
      deflateSetDictionary(&zs, dict.data(), static_cast<uInt>(dict.size())) != Z_OK) {
    deflateEnd(&zs);
    throw std::runtime_error("deflateSetDictionary failed");
  }

  std::vector<uint8_t> out(deflateBound(&zs, static_cast<uLong>(data.size())));
  zs.next_in = const_cast<Bytef*>(data.data());
  zs.avail_in = static_cast<uInt>(data.size());
  zs.next_out = out.data();
  zs.avail_out = static_cast<uInt>(out.size());
  int rc = deflate(&zs, Z_FINISH);
  if (rc != Z_STREAM_END) {
    deflateEnd(&zs);
    throw std::runtime_error("deflate failed");
  }
  out.resize(zs.total_out);
  deflateEnd(&zs);
  return out;
}

std::vector<uint8_t> deflate_decompress(std::span<const uint8_t> stream, std::span<const uint8_t> dictionary) {
  z_stream zs{};
  if (inflateInit2(&zs, -15) != Z_OK) throw std::runtime_error("inflateInit2 failed");

  auto dict = clip_dictionary(dictionary);
  if (!dict.empty() &&
      inflateSetDictionary(&zs, dict.data(), static_cast<uInt>(dict.size())) != Z_OK) {
    inflateEnd(&zs);
    throw std::runtime_error("inflateSetDictionary failed");
  }

  std::vector<uint8_t> out;
  std::vector<uint8_t> chunk(64 * 1024);
  zs.next_in = const_cast<Bytef*>(stream.data());
  zs.avail_in = static_cast<uInt>(stream.size());
  int rc = Z_OK;
  while (rc != Z_STREAM_END) {
    zs.next_out = chunk.data();
    zs.avail_out = static_cast<uInt>(chunk.size());
    rc = inflate(&zs, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) {
      inflateEnd(&zs);
      throw std::runtime_error("inflate failed: corrupt stream");
    }
    out.insert(out.end(), chunk.data(), chunk.data() + (chunk.size() - zs.avail_out));
    if (rc == Z_OK && zs.avail_in == 0 && zs.avail_out != 0) {
      inflateEnd(&zs);
      throw std::runtime_error("inflate failed: truncated stream");
    }
  }
  inflateEnd(&zs);
  return out;
}

uint64_t deflate_measure_bits(std::span<const uint8_t> data, std::span<const uint8_t> dictionary) {
  return 8ull * deflate_compress(data, dictionary).size();
}

}  // namespace semcom
