#include <gtest/gtest.h>

#include <random>

#include "ghzqdc/ecc.hpp"

namespace ghzqdc::ecc {
namespace {

// Independent Hamming(7,4) reference: generator rows for p1 p2 d1 p3 d2 d3 d4.
Bits reference_codeword(unsigned nibble) {
  const int d1 = (nibble >> 3) & 1, d2 = (nibble >> 2) & 1, d3 = (nibble >> 1) & 1, d4 = nibble & 1;
  return Bits{static_cast<std::uint8_t>(d1 ^ d2 ^ d4), static_cast<std::uint8_t>(d1 ^ d3 ^ d4),
              static_cast<std::uint8_t>(d1),           static_cast<std::uint8_t>(d2 ^ d3 ^ d4),
              static_cast<std::uint8_t>(d2),           static_cast<std::uint8_t>(d3),
              static_cast<std::uint8_t>(d4)};
}

TEST(Hamming74, EncoderMatchesReference) {
  for (unsigned v = 0; v < 16; ++v) EXPECT_EQ(hamming74_encode_block(bits_of(v, 4)), reference_codeword(v)) << v;
}

TEST(Hamming74, MinimumDistanceIsThree) {
  for (unsigned a = 0; a < 16; ++a)
    for (unsigned b = a + 1; b < 16; ++b)
      EXPECT_GE(hamming_distance(reference_codeword(a), reference_codeword(b)), 3u);
}

TEST(Hamming74, CorrectsEverySingleBitError) {
  int cases = 0;
  for (unsigned v = 0; v < 16; ++v) {
    for (int pos = 0; pos < 7; ++pos) {
      Bits word = reference_codeword(v);
      word[static_cast<std::size_t>(pos)] ^= 1U;
      const DecodeResult r = hamming74_decode_block(word);
      EXPECT_EQ(r.data, bits_of(v, 4)) << "value " << v << " flip " << pos;
      EXPECT_EQ(r.corrected_errors, 1u);
      ++cases;
    }
  }
  EXPECT_EQ(cases, 112);
}

TEST(Repetition, MajorityVote) {
  const Codec rep5 = Codec::repetition(5);
  EXPECT_EQ(rep5.d(), 5);
  EXPECT_EQ(rep5.correctable(), 2);
  Bits frame = encode(rep5, parse_bits("10"));
  const std::size_t body = 5 * kHeaderBits;
  ASSERT_EQ(frame.size(), body + 10);
  frame[body + 0] ^= 1U;
  frame[body + 3] ^= 1U;
  frame[body + 9] ^= 1U;
  const DecodeResult r = decode(rep5, frame);
  EXPECT_EQ(to_bit_string(r.data), "10");
  EXPECT_EQ(r.corrected_errors, 3u);
  EXPECT_THROW(Codec::repetition(4), std::invalid_argument);
}

TEST(Frame, RoundTripsRandomPayloads) {
  std::mt19937_64 rng(3);
  for (const Codec& c : {Codec::none(), Codec::repetition(3), Codec::repetition(5), Codec::hamming74()}) {
    for (std::size_t len : {1u, 3u, 4u, 7u, 64u}) {
      Bits data(len);
      for (auto& b : data) b = static_cast<std::uint8_t>(rng() & 1U);
      const Bits frame = encode(c, data);
      EXPECT_EQ(frame.size(), framed_length(c, len));
      EXPECT_EQ(decode(c, frame).data, data) << c.name() << " len " << len;
    }
  }
}

TEST(Frame, RejectsInconsistentInput) {
  const Codec h = Codec::hamming74();
  const Bits frame = encode(h, parse_bits("101"));
  const Bits truncated(frame.begin(), frame.end() - 1);
  EXPECT_THROW(decode(h, truncated), FrameError);
  EXPECT_THROW(decode(h, Bits(7, 0)), FrameError);

  Bits plain = encode(Codec::none(), parse_bits("101"));
  plain[0] = 1;  // pad length 128+
  EXPECT_THROW(decode(Codec::none(), plain), FrameError);
}

TEST(Frame, HeaderIsProtected) {
  const Codec h = Codec::hamming74();
  Bits frame = encode(h, parse_bits("101"));
  ASSERT_EQ(frame.size(), 7u * 3);
  frame[2] ^= 1U;
  frame[9] ^= 1U;
  EXPECT_EQ(to_bit_string(decode(h, frame).data), "101");
}

TEST(Codec, ParseNames) {
  EXPECT_EQ(Codec::parse("none"), Codec::none());
  EXPECT_EQ(Codec::parse("rep3"), Codec::repetition(3));
  EXPECT_EQ(Codec::parse("hamming74"), Codec::hamming74());
  EXPECT_EQ(Codec::parse("rep5").name(), "rep5");
  EXPECT_THROW(Codec::parse("golay"), std::invalid_argument);
}

TEST(Codec, DistanceRule) {
  // rep5 at 10% error: floor(2 * 0.1 * 5) + 1 = 2 < 5.
  EXPECT_TRUE(check_distance_rule(0.1, 5, 5));
  EXPECT_FALSE(check_distance_rule(0.3, 5, 3));
  EXPECT_FALSE(check_distance_rule(0.2, 7, 3));
}

}  // namespace
}  // namespace ghzqdc::ecc
