#include "ghzqdc/bits.hpp"

#include <algorithm>
#include <cctype>

namespace ghzqdc {

namespace {

int hex_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (c >= 'a' && c <= 'f') return 10 + (c - 'a');
  return -1;
}

}  // namespace

Bits parse_bits(std::string_view text) {
  Bits out;
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'x' || text[1] == 'X')) {
    text.remove_prefix(2);
    if (text.empty()) throw BitParseError("empty hex literal");
    for (char c : text) {
      const int v = hex_value(c);
      if (v < 0) throw BitParseError(std::string("invalid hex digit '") + c + "'");
      for (int b = 3; b >= 0; --b) out.push_back(static_cast<std::uint8_t>((v >> b) & 1));
    }
    return out;
  }
  if (text.size() >= 2 && text[0] == '0' && (text[1] == 'b' || text[1] == 'B')) {
    text.remove_prefix(2);
  }
  if (text.empty()) throw BitParseError("empty bit string");
  for (char c : text) {
    if (c != '0' && c != '1') throw BitParseError(std::string("invalid bit '") + c + "'");
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

std::string to_bit_string(const Bits& bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

std::string to_hex(const Bits& bits) {
  if (bits.size() % 4 != 0) throw BitParseError("hex rendering needs a multiple of 4 bits");
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s = "0x";
  for (std::size_t i = 0; i < bits.size(); i += 4) {
    const int v = (bits[i] << 3) | (bits[i + 1] << 2) | (bits[i + 2] << 1) | bits[i + 3];
    s.push_back(kDigits[v]);
  }
  return s;
}

Bits bits_of(std::uint64_t value, int width) {
  Bits out(static_cast<std::size_t>(width));
  for (int i = 0; i < width; ++i) {
    out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((value >> (width - 1 - i)) & 1U);
  }
  return out;
}

std::size_t hamming_distance(const Bits& a, const Bits& b) {
  if (a.size() != b.size()) throw std::invalid_argument("hamming_distance: length mismatch");
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] != b[i]);
  return d;
}

}  // namespace ghzqdc
