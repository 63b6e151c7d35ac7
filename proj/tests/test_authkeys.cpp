#include <gtest/gtest.h>

#include "ghzqdc/authkeys.hpp"

namespace ghzqdc {
namespace {

// Digests below were computed with Python's hashlib over the documented
// byte layout: domain | 0x00 | u64 |ID| | packed ID | u64 c | u8 width | u32 block.
TEST(Sha256CounterHash, MatchesExternalDigest) {
  const Sha256CounterHash h(16, "alice");
  EXPECT_EQ(to_hex(h.evaluate(parse_bits("0xa5"), Counter{3})), "0x942e");
}

TEST(Sha256CounterHash, SpansBlocksAndPadsPartialIdByte) {
  const Sha256CounterHash h(320);
  EXPECT_EQ(to_hex(h.evaluate(parse_bits("1100101001"), Counter{7})),
            "0xf9f9bc09c7ee99b8b56b65ae161f2ec52b2f7cc9a42db8b8818e0dde72d5a00a2f56a5089a59ff18");
}

TEST(Sha256CounterHash, DeterministicAndDomainSeparated) {
  const Bits id = parse_bits("0xdeadbeef");
  const Sha256CounterHash a(128, "alice"), a2(128, "alice"), b(128, "bob");
  EXPECT_EQ(a.evaluate(id, Counter{5}), a2.evaluate(id, Counter{5}));
  EXPECT_NE(a.evaluate(id, Counter{5}), b.evaluate(id, Counter{5}));
  EXPECT_NE(a.evaluate(id, Counter{5}), a.evaluate(id, Counter{6}));
  EXPECT_EQ(a.evaluate(id, Counter{5}).size(), 128u);
}

TEST(PatternStubHash, RotatesIdentity) {
  const PatternStubHash h(6);
  EXPECT_EQ(to_bit_string(h.evaluate(parse_bits("1011"), Counter{0})), "101110");
  EXPECT_EQ(to_bit_string(h.evaluate(parse_bits("1011"), Counter{1})), "011101");
  EXPECT_EQ(to_bit_string(h.evaluate(parse_bits("1011"), Counter{5})), "011101");
}

TEST(DeriveKey, ConcatenatesConsecutiveCounters) {
  const PatternStubHash h(4);
  const UserIdentity id(parse_bits("110"), Party::Alice);
  const AuthKey key = derive_key(id, h, Counter{1}, 10);
  // h(1) = 1011, h(2) = 0110, h(3) = 1101, worked out by hand.
  EXPECT_EQ(to_bit_string(key.bits), "101101101101");
  ASSERT_EQ(key.provenance.size(), 3u);
  EXPECT_EQ(key.provenance[0].counter, 1u);
  EXPECT_EQ(key.provenance[2].counter, 3u);
  EXPECT_EQ(key.provenance[2].offset, 8u);
  EXPECT_EQ(key.next_counter(), 4u);
  EXPECT_EQ(blocks_needed(h, 10), 3u);
  EXPECT_EQ(blocks_needed(h, 12), 3u);
  EXPECT_EQ(blocks_needed(h, 13), 4u);
}

TEST(DeriveKey, CounterOverflowIsRejected) {
  const PatternStubHash h(4);
  const UserIdentity id(parse_bits("1"), Party::Bob);
  EXPECT_THROW(Counter({16, 4}).validate(), CounterOverflowError);
  EXPECT_NO_THROW(derive_key(id, h, Counter{14, 4}, 8));
  EXPECT_THROW(derive_key(id, h, Counter{15, 4}, 8), CounterOverflowError);
  EXPECT_THROW(h.evaluate(id.id_bits, Counter{16, 4}), CounterOverflowError);
}

class ShortHash final : public HashContract {
 public:
  int output_bits() const override { return 8; }
  Bits evaluate(const Bits&, const Counter&) const override { return Bits(7, 0); }
  std::string name() const override { return "short"; }
};

TEST(DeriveKey, ContractViolationIsDetected) {
  const UserIdentity id(parse_bits("1"), Party::Alice);
  EXPECT_THROW(derive_key(id, ShortHash{}, Counter{0}, 4), std::logic_error);
}

TEST(UserIdentity, RejectsEmpty) { EXPECT_THROW(UserIdentity({}, Party::Alice), std::invalid_argument); }

TEST(KeyUnitary, MapsBitsToIdentityAndHadamard) {
  EXPECT_EQ(unitary_for_key_bit(0).name, GateName::I);
  EXPECT_EQ(unitary_for_key_bit(1).name, GateName::H);
  EXPECT_THROW(unitary_for_key_bit(2), std::invalid_argument);
}

TEST(Bits, ParseAndRender) {
  EXPECT_EQ(to_bit_string(parse_bits("0x9")), "1001");
  EXPECT_EQ(to_bit_string(parse_bits("0b011")), "011");
  EXPECT_EQ(to_hex(parse_bits("10100101")), "0xa5");
  EXPECT_THROW(parse_bits("0x"), BitParseError);
  EXPECT_THROW(parse_bits("012"), BitParseError);
  EXPECT_THROW(to_hex(parse_bits("101")), BitParseError);
  EXPECT_EQ(to_bit_string(bits_of(5, 4)), "0101");
  EXPECT_EQ(hamming_distance(parse_bits("1100"), parse_bits("1010")), 2u);
}

}  // namespace
}  // namespace ghzqdc
