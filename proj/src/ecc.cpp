#include "ghzqdc/ecc.hpp"

#include <cmath>
#include <charconv>

namespace ghzqdc::ecc {

Codec Codec::repetition(int r) {
  if (r < 1 || r % 2 == 0) throw std::invalid_argument("repetition length must be odd and positive");
  return Codec(Kind::Repetition, r);
}

Codec Codec::parse(std::string_view name) {
  if (name == "none") return none();
  if (name == "hamming74") return hamming74();
  if (name.starts_with("rep")) {
    int r = 0;
    const auto digits = name.substr(3);
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), r);
    if (ec == std::errc() && ptr == digits.data() + digits.size()) return repetition(r);
  }
  throw std::invalid_argument("unknown codec '" + std::string(name) + "'");
}

int Codec::n() const {
  switch (kind_) {
    case Kind::None: return 1;
    case Kind::Repetition: return r_;
    case Kind::Hamming74: return 7;
  }
  return 0;
}

int Codec::k() const { return kind_ == Kind::Hamming74 ? 4 : 1; }

int Codec::d() const {
  switch (kind_) {
    case Kind::None: return 1;
    case Kind::Repetition: return r_;
    case Kind::Hamming74: return 3;
  }
  return 0;
}

std::string Codec::name() const {
  switch (kind_) {
    case Kind::None: return "none";
    case Kind::Repetition: return "rep" + std::to_string(r_);
    case Kind::Hamming74: return "hamming74";
  }
  return "?";
}

// Codeword positions 1..7 are p1 p2 d1 p3 d2 d3 d4; the syndrome of a single
// error is its position.
Bits hamming74_encode_block(const Bits& nibble) {
  if (nibble.size() != 4) throw std::invalid_argument("hamming74 block needs 4 data bits");
  const auto d1 = nibble[0], d2 = nibble[1], d3 = nibble[2], d4 = nibble[3];
  return Bits{static_cast<std::uint8_t>(d1 ^ d2 ^ d4), static_cast<std::uint8_t>(d1 ^ d3 ^ d4), d1,
              static_cast<std::uint8_t>(d2 ^ d3 ^ d4), d2, d3, d4};
}

DecodeResult hamming74_decode_block(const Bits& word) {
  if (word.size() != 7) throw std::invalid_argument("hamming74 block needs 7 bits");
  Bits w = word;
  int syndrome = 0;
  for (int pos = 1; pos <= 7; ++pos) {
    if (w[static_cast<std::size_t>(pos - 1)]) syndrome ^= pos;
  }
  DecodeResult result;
  if (syndrome != 0) {
    w[static_cast<std::size_t>(syndrome - 1)] ^= 1U;
    result.corrected_errors = 1;
  }
  result.data = Bits{w[2], w[4], w[5], w[6]};
  return result;
}

std::size_t framed_length(const Codec& codec, std::size_t data_bits) {
  const auto k = static_cast<std::size_t>(codec.k());
  const std::size_t blocks = (kHeaderBits + data_bits + k - 1) / k;
  return blocks * static_cast<std::size_t>(codec.n());
}

Bits encode(const Codec& codec, const Bits& data) {
  const auto k = static_cast<std::size_t>(codec.k());
  const std::size_t pad = (k - (kHeaderBits + data.size()) % k) % k;
  Bits payload = bits_of(pad, static_cast<int>(kHeaderBits));
  payload.insert(payload.end(), data.begin(), data.end());
  payload.resize(payload.size() + pad, 0);

  Bits out;
  out.reserve(payload.size() / k * static_cast<std::size_t>(codec.n()));
  for (std::size_t i = 0; i < payload.size(); i += k) {
    switch (codec.kind()) {
      case Codec::Kind::None:
        out.push_back(payload[i]);
        break;
      case Codec::Kind::Repetition:
        out.insert(out.end(), static_cast<std::size_t>(codec.n()), payload[i]);
        break;
      case Codec::Kind::Hamming74: {
        const Bits block = hamming74_encode_block(Bits(payload.begin() + static_cast<long>(i),
                                                       payload.begin() + static_cast<long>(i + 4)));
        out.insert(out.end(), block.begin(), block.end());
        break;
      }
    }
  }
  return out;
}

DecodeResult decode(const Codec& codec, const Bits& received) {
  const auto n = static_cast<std::size_t>(codec.n());
  const auto k = static_cast<std::size_t>(codec.k());
  if (received.size() % n != 0 || received.size() / n * k < kHeaderBits) {
    throw FrameError("received " + std::to_string(received.size()) +
                     " bits, not a valid frame for codec " + codec.name());
  }

  DecodeResult result;
  for (std::size_t first = 0; first < received.size(); first += n) {
    const auto it = received.begin() + static_cast<long>(first);
    const Bits block(it, it + static_cast<long>(n));
    switch (codec.kind()) {
      case Codec::Kind::None:
        result.data.push_back(block[0]);
        break;
      case Codec::Kind::Repetition: {
        std::size_t ones = 0;
        for (auto bit : block) ones += bit;
        const bool one = 2 * ones > n;
        result.data.push_back(one ? 1 : 0);
        result.corrected_errors += one ? n - ones : ones;
        break;
      }
      case Codec::Kind::Hamming74: {
        const auto r = hamming74_decode_block(block);
        result.data.insert(result.data.end(), r.data.begin(), r.data.end());
        result.corrected_errors += r.corrected_errors;
        break;
      }
    }
  }

  std::size_t pad = 0;
  for (std::size_t i = 0; i < kHeaderBits; ++i) pad = (pad << 1) | result.data[i];
  if (pad >= k || pad > result.data.size() - kHeaderBits) {
    throw FrameError("frame header declares pad length " + std::to_string(pad) +
                     ", inconsistent with codec " + codec.name());
  }
  result.data.erase(result.data.begin(), result.data.begin() + static_cast<long>(kHeaderBits));
  result.data.resize(result.data.size() - pad);
  return result;
}

bool check_distance_rule(double error_rate, int n, int d) {
  if (error_rate < 0.0 || error_rate > 1.0) throw std::invalid_argument("error_rate must be in [0, 1]");
  // The epsilon keeps e.g. 2 * 0.2 * 10 from flooring to 3.
  const auto bound = static_cast<long>(std::floor(2.0 * error_rate * n + 1e-9)) + 1;
  return d > bound;
}

}  // namespace ghzqdc::ecc
