#include <gtest/gtest.h>

#include "ghzqdc/adversary.hpp"
#include "ghzqdc/protocol.hpp"

namespace ghzqdc {
namespace {

SessionConfig small_config(ProtocolVariant v, std::uint64_t seed = 1) {
  SessionConfig c;
  c.variant = v;
  c.n_ghz = 96;
  c.m_auth_check = 16;
  c.rng_seed = seed;
  return c;
}

// Bit Alice encodes -> joint distribution over (Bell on A,B ; x on T).
PureState encoded(int bit) {
  PureState s = new_ghz3();
  s.apply_local(make_gate(bit ? GateName::HX : GateName::H).matrix, kQubitA);
  return s;
}

TEST(Decoding, Qdc1DecoderAgreesWithExactDistribution) {
  for (int bit : {0, 1}) {
    const PureState s = encoded(bit);
    for (BellOutcome b : kBellOutcomes) {
      for (XOutcome x : kXOutcomes) {
        const std::array<Projector, 2> f{BellProjector{kQubitA, kQubitB, b}, XProjector{kQubitT, x}};
        const double p = probability_of(s, std::span<const Projector>(f));
        if (qdc1_decode(b, x) == bit) {
          EXPECT_NEAR(p, 0.25, 1e-12);
        } else {
          EXPECT_NEAR(p, 0.0, 1e-15);
        }
      }
    }
  }
}

TEST(Decoding, Qdc2DecoderAgreesWithExactDistribution) {
  for (int bit : {0, 1}) {
    const PureState s = encoded(bit);
    for (int t : {0, 1}) {
      for (XOutcome x : kXOutcomes) {
        double p = 0;
        for (BellOutcome b : kBellOutcomes) {
          if (trent_publish(b) != t) continue;
          const std::array<Projector, 2> f{BellProjector{kQubitA, kQubitT, b}, XProjector{kQubitB, x}};
          p += probability_of(s, std::span<const Projector>(f));
        }
        EXPECT_NEAR(p, qdc2_decode(t, x) == bit ? 0.5 : 0.0, 1e-12);
      }
    }
  }
  EXPECT_EQ(qdc2_decode(0, XOutcome::Plus), 1);
  EXPECT_THROW(qdc2_decode(2, XOutcome::Plus), std::invalid_argument);
}

TEST(Session, HonestRunsDeliverExactly) {
  for (auto v : {ProtocolVariant::Qdc1, ProtocolVariant::Qdc2}) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const Bits msg = bits_of(seed * 0x9e3779b97f4a7c15ULL, 40);
      const SessionResult r = run_session(small_config(v, seed), Participants::standard(), msg, nullptr);
      ASSERT_EQ(r.verdict, Verdict::MessageDelivered) << r.diagnostic;
      EXPECT_EQ(r.auth_error_rate, 0.0);
      EXPECT_EQ(r.msg_check_errors, 0u);
      EXPECT_EQ(*r.delivered, msg);
    }
  }
}

TEST(Session, EveryMeasurementOrderIsHonestlyCorrect) {
  for (auto v : {ProtocolVariant::Qdc1, ProtocolVariant::Qdc2}) {
    for (const auto& order : all_measurement_orders()) {
      SessionConfig c = small_config(v, 3);
      c.order = order;
      const SessionResult r = run_session(c, Participants::standard(), parse_bits("0xc0de"), nullptr);
      EXPECT_EQ(r.verdict, Verdict::MessageDelivered) << describe(order, v);
    }
  }
}

TEST(Session, BobMayMeasureBeforeEncodingInQdc2) {
  SessionConfig c = small_config(ProtocolVariant::Qdc2, 4);
  c.bob_measures_first = true;
  const SessionResult r = run_session(c, Participants::standard(), parse_bits("0xfeed"), nullptr);
  EXPECT_EQ(r.verdict, Verdict::MessageDelivered);
  c.variant = ProtocolVariant::Qdc1;
  EXPECT_THROW(run_session(c, Participants::standard(), parse_bits("0xfeed"), nullptr), ConfigError);
}

TEST(Session, MismatchedKeyIsRejected) {
  const Participants p = Participants::standard();
  const SessionConfig c = small_config(ProtocolVariant::Qdc1, 5);
  KeyMaterial keys = KeyMaterial::shared(derive_key(p.alice, *p.alice_hash, Counter{0}, c.n_ghz),
                                         derive_key(p.bob, *p.bob_hash, Counter{0}, c.n_ghz));
  // An impostor holding a different counter's key for Alice.
  keys.alice = derive_key(p.alice, *p.alice_hash, Counter{99}, c.n_ghz);
  const SessionResult r = run_session_with_keys(c, keys, parse_bits("0x1"), nullptr);
  EXPECT_EQ(r.verdict, Verdict::AuthAborted);
  EXPECT_GT(r.auth_error_rate, 0.0);
}

TEST(Session, ZeroCoverageTranscriptMatchesUnattacked) {
  for (auto v : {ProtocolVariant::Qdc1, ProtocolVariant::Qdc2}) {
    AttackModel m;
    m.variant = AttackVariant::EntangleCNOT;
    m.channels = {Channel::TrentToAlice, Channel::TrentToBob,
                  v == ProtocolVariant::Qdc1 ? Channel::AliceToBob : Channel::AliceToTrent};
    m.coverage = 0.0;
    Eavesdropper eve(m, 77);
    const SessionConfig c = small_config(v, 8);
    const auto attacked = run_session(c, Participants::standard(), parse_bits("0xabc"), &eve);
    const auto clean = run_session(c, Participants::standard(), parse_bits("0xabc"), nullptr);
    EXPECT_EQ(attacked.transcript.to_text(), clean.transcript.to_text());
  }
}

TEST(Session, FullInterceptAbortsAuthentication) {
  AttackModel m;
  m.variant = AttackVariant::InterceptResendZ;
  Eavesdropper eve(m, 1);
  SessionConfig c = small_config(ProtocolVariant::Qdc1, 9);
  c.m_auth_check = 40;
  const auto r = run_session(c, Participants::standard(), parse_bits("0x5"), &eve);
  EXPECT_EQ(r.verdict, Verdict::AuthAborted);
  EXPECT_EQ(r.transcript.final_verdict(), Verdict::AuthAborted);
  EXPECT_EQ(r.transcript.find("Alice", "encode"), nullptr);
}

TEST(Session, MessageAttackDiscardsAtZeroThreshold) {
  AttackModel m;
  m.variant = AttackVariant::EntangleCNOT;
  m.channels = {Channel::AliceToBob};
  Eavesdropper eve(m, 2);
  const auto r = run_session(small_config(ProtocolVariant::Qdc1, 10), Participants::standard(),
                             parse_bits("0xff"), &eve);
  EXPECT_EQ(r.verdict, Verdict::MessageDiscarded);
  EXPECT_FALSE(r.delivered);
}

TEST(Config, Validation) {
  SessionConfig c = small_config(ProtocolVariant::Qdc1);
  EXPECT_NO_THROW(c.validate(32));
  EXPECT_THROW(c.validate(200), ConfigError);
  c.m_auth_check = 0;
  EXPECT_THROW(c.validate(8), ConfigError);
  c = small_config(ProtocolVariant::Qdc1);
  c.check_fraction_msg = 1.0;
  EXPECT_THROW(c.validate(8), ConfigError);
  c = small_config(ProtocolVariant::Qdc1);
  c.error_threshold_auth = -0.1;
  EXPECT_THROW(c.validate(8), ConfigError);
  c = small_config(ProtocolVariant::Qdc1);
  c.order = {MessageActor::Eve, MessageActor::Eve, MessageActor::XMeasurer};
  EXPECT_THROW(c.validate(8), ConfigError);
}

TEST(Config, RequiredGhzIsTight) {
  SessionConfig c = small_config(ProtocolVariant::Qdc2);
  c.codec = ecc::Codec::hamming74();
  for (std::size_t bits : {1u, 16u, 64u, 100u}) {
    c.n_ghz = required_ghz(c, bits);
    EXPECT_NO_THROW(c.validate(bits));
    c.n_ghz -= 1;
    EXPECT_THROW(c.validate(bits), ConfigError);
  }
}

TEST(Counters, ReplayIsRejected) {
  CounterLedger ledger;
  const SessionConfig c = small_config(ProtocolVariant::Qdc1);
  const Participants p = Participants::standard();
  EXPECT_NO_THROW(run_session(c, p, parse_bits("0x1"), nullptr, SessionCounters{}, &ledger));
  EXPECT_THROW(run_session(c, p, parse_bits("0x1"), nullptr, SessionCounters{}, &ledger), CounterReplayError);
  const SessionCounters next{Counter{ledger.next(Party::Alice)}, Counter{ledger.next(Party::Bob)}};
  EXPECT_NO_THROW(run_session(c, p, parse_bits("0x1"), nullptr, next, &ledger));
}

TEST(Orders, SixDistinctPermutations) {
  const auto orders = all_measurement_orders();
  EXPECT_EQ(orders[0], kDefaultOrder);
  for (std::size_t i = 0; i < orders.size(); ++i)
    for (std::size_t j = i + 1; j < orders.size(); ++j) EXPECT_NE(orders[i], orders[j]);
}

}  // namespace
}  // namespace ghzqdc
