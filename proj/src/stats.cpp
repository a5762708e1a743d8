#include "gselfies/stats.h"

#include <stdexcept>
#include <unordered_map>

#include <zlib.h>

namespace gselfies {

void append_leb128(std::vector<std::uint8_t> &out, std::uint64_t value) {
  do {
    std::uint8_t byte = value & 0x7f;
    value >>= 7;
    if (value) byte |= 0x80;
    out.push_back(byte);
  } while (value);
}

std::vector<std::uint64_t> read_leb128(const std::vector<std::uint8_t> &in) {
  std::vector<std::uint64_t> out;
  std::uint64_t value = 0;
  int shift = 0;
  for (std::uint8_t byte : in) {
    if (shift > 63) throw std::invalid_argument("LEB128 value overflows 64 bits");
    value |= static_cast<std::uint64_t>(byte & 0x7f) << shift;
    shift += 7;
    if (!(byte & 0x80)) {
      out.push_back(value);
      value = 0;
      shift = 0;
    }
  }
  if (shift) throw std::invalid_argument("truncated LEB128 stream");
  return out;
}

std::vector<std::uint8_t> index_encode(const std::vector<std::vector<Token>> &strings) {
  std::unordered_map<std::string, std::uint64_t> ids;
  std::vector<std::uint8_t> out;
  for (const auto &s : strings) {
    for (const auto &t : s) {
      auto [it, fresh] = ids.try_emplace(t.spelling(), ids.size() + 1);
      append_leb128(out, it->second);
    }
    append_leb128(out, 0);
  }
  return out;
}

std::vector<std::uint8_t> deflate_raw(const std::vector<std::uint8_t> &data) {
  z_stream zs{};
  if (deflateInit2(&zs, 9, Z_DEFLATED, -15, 9, Z_DEFAULT_STRATEGY) != Z_OK)
    throw std::runtime_error("deflateInit2 failed");
  std::vector<std::uint8_t> out(deflateBound(&zs, data.size()) + 16);
  zs.next_in = const_cast<Bytef *>(data.data());
  zs.avail_in = static_cast<uInt>(data.size());
  zs.next_out = out.data();
  zs.avail_out = static_cast<uInt>(out.size());
  int rc = deflate(&zs, Z_FINISH);
  deflateEnd(&zs);
  if (rc != Z_STREAM_END) throw std::runtime_error("deflate failed");
  out.resize(zs.total_out);
  return out;
}

std::vector<std::uint8_t> inflate_raw(const std::vector<std::uint8_t> &data) {
  z_stream zs{};
  if (inflateInit2(&zs, -15) != Z_OK) throw std::runtime_error("inflateInit2 failed");
  std::vector<std::uint8_t> out;
  std::uint8_t buf[1 << 14];
  zs.next_in = const_cast<Bytef *>(data.data());
  zs.avail_in = static_cast<uInt>(data.size());
  int rc;
  do {
    zs.next_out = buf;
    zs.avail_out = sizeof buf;
    rc = inflate(&zs, Z_NO_FLUSH);
    if (rc != Z_OK && rc != Z_STREAM_END) {
      inflateEnd(&zs);
      throw std::runtime_error("corrupt DEFLATE stream");
    }
    out.insert(out.end(), buf, buf + (sizeof buf - zs.avail_out));
  } while (rc != Z_STREAM_END);
  inflateEnd(&zs);
  return out;
}

DialectStats dialect_stats(const std::vector<std::vector<Token>> &strings) {
  DialectStats s;
  s.strings = strings.size();
  std::unordered_map<std::string, int> vocab;
  std::size_t tokens = 0, chars = 0;
  for (const auto &str : strings) {
    tokens += str.size();
    ++s.length_histogram[static_cast<int>(str.size())];
    for (const auto &t : str) {
      std::string sp = t.spelling();
      chars += sp.size();
      vocab.try_emplace(sp, 0);
    }
  }
  s.vocabulary = vocab.size();
  if (!strings.empty()) {
    s.mean_tokens = static_cast<double>(tokens) / strings.size();
    s.mean_characters = static_cast<double>(chars) / strings.size();
  }
  auto index = index_encode(strings);
  s.index_bytes = index.size();
  s.deflate_bytes = deflate_raw(index).size();
  return s;
}

}  // namespace gselfies
