// Classical codecs applied to the message before quantum encoding.
//
// Frame layout: the 8-bit pad length, the data, then zero padding up to a
// multiple of k, all coded block by block. The header is protected by the
// same code as the data. Every supported k divides 8, so header blocks
// never mix with data bits.
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ghzqdc/bits.hpp"

namespace ghzqdc::ecc {

inline constexpr std::size_t kHeaderBits = 8;

class FrameError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Codec {
 public:
  enum class Kind { None, Repetition, Hamming74 };

  static Codec none() { return Codec(Kind::None, 1); }
  static Codec repetition(int r);
  static Codec hamming74() { return Codec(Kind::Hamming74, 7); }
  // none | rep<r> | hamming74
  static Codec parse(std::string_view name);

  Kind kind() const { return kind_; }
  int n() const;
  int k() const;
  int d() const;
  int correctable() const { return (d() - 1) / 2; }
  std::string name() const;

  friend bool operator==(const Codec&, const Codec&) = default;

 private:
  Codec(Kind kind, int r) : kind_(kind), r_(r) {}
  Kind kind_;
  int r_;
};

struct DecodeResult {
  Bits data;
  std::size_t corrected_errors = 0;
};

Bits encode(const Codec& codec, const Bits& data);

// Throws FrameError when the received length or header is inconsistent.
DecodeResult decode(const Codec& codec, const Bits& received);

// Length of encode(codec, data) for data of `data_bits` bits.
std::size_t framed_length(const Codec& codec, std::size_t data_bits);

// Single-block helpers, exposed for exhaustive tests.
Bits hamming74_encode_block(const Bits& nibble);
DecodeResult hamming74_decode_block(const Bits& word);

// Advisory check d > floor(2 * error_rate * n) + 1.
bool check_distance_rule(double error_rate, int n, int d);

}  // namespace ghzqdc::ecc
