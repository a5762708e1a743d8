#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gselfies/token.h"

namespace gselfies {

// Unsigned LEB128.
void append_leb128(std::vector<std::uint8_t> &out, std::uint64_t value);
std::vector<std::uint64_t> read_leb128(const std::vector<std::uint8_t> &in);

// Each distinct spelling gets an integer in first-appearance order starting
// at 1; 0 terminates each string.
std::vector<std::uint8_t> index_encode(const std::vector<std::vector<Token>> &strings);

// Raw DEFLATE stream (RFC 1951, no zlib/gzip wrapper), level 9.
std::vector<std::uint8_t> deflate_raw(const std::vector<std::uint8_t> &data);
std::vector<std::uint8_t> inflate_raw(const std::vector<std::uint8_t> &data);

struct DialectStats {
  std::size_t strings = 0;
  double mean_tokens = 0.0;
  double mean_characters = 0.0;
  std::map<int, int> length_histogram;  // token length -> count
  std::size_t vocabulary = 0;
  std::size_t index_bytes = 0;
  std::size_t deflate_bytes = 0;
};

DialectStats dialect_stats(const std::vector<std::vector<Token>> &strings);

}  // namespace gselfies
