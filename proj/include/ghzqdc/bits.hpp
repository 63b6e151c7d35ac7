// Bit strings are stored one bit per byte (values 0/1); they are short
// enough that packing buys nothing.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ghzqdc {

using Bits = std::vector<std::uint8_t>;

class BitParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Accepts "0x<hex>" (4 bits per digit, most significant first), "0b<bits>"
// or a bare string of 0/1 characters.
Bits parse_bits(std::string_view text);

std::string to_bit_string(const Bits& bits);
// Requires a multiple of 4 bits.
std::string to_hex(const Bits& bits);

// Packs the low `width` bits of `value`, most significant first.
Bits bits_of(std::uint64_t value, int width);

std::size_t hamming_distance(const Bits& a, const Bits& b);

}  // namespace ghzqdc
