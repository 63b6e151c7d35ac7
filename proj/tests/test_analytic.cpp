#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ghzqdc/analytic.hpp"

namespace ghzqdc {
namespace {

AttackModel attack(AttackVariant v, std::vector<Channel> channels, double coverage = 1.0) {
  AttackModel m;
  m.variant = v;
  m.channels = std::move(channels);
  m.coverage = coverage;
  return m;
}

TEST(Analytic, InterceptOnOneChannel) {
  const auto m = attack(AttackVariant::InterceptResendZ, {Channel::TrentToAlice});
  EXPECT_NEAR(analytic::auth_error_rate(m), 0.25, 1e-12);
  EXPECT_EQ(analytic::auth_error_rate_given_key_a(m, 0), 0.0);
  EXPECT_NEAR(analytic::auth_error_rate_given_key_a(m, 1), 0.5, 1e-12);
}

TEST(Analytic, CnotMatchesInterceptOnAuthChannel) {
  const auto m = attack(AttackVariant::EntangleCNOT, {Channel::TrentToAlice});
  EXPECT_NEAR(analytic::auth_error_rate(m), 0.25, 1e-12);
  EXPECT_NEAR(analytic::auth_error_given_keys(m, 1, 0), 0.5, 1e-12);
  EXPECT_NEAR(analytic::auth_error_given_keys(m, 1, 1), 0.5, 1e-12);
  EXPECT_EQ(analytic::auth_error_given_keys(m, 0, 1), 0.0);
}

TEST(Analytic, CoverageScalesLinearly) {
  const auto full = attack(AttackVariant::EntangleCNOT, {Channel::TrentToAlice});
  const auto part = attack(AttackVariant::EntangleCNOT, {Channel::TrentToAlice}, 0.4);
  EXPECT_NEAR(analytic::auth_error_rate(part), 0.4 * analytic::auth_error_rate(full), 1e-12);
}

TEST(Analytic, SecondChannelOnlyAddsErrors) {
  const auto one = attack(AttackVariant::InterceptResendZ, {Channel::TrentToAlice});
  const auto both = attack(AttackVariant::InterceptResendZ, {Channel::TrentToAlice, Channel::TrentToBob});
  EXPECT_GT(analytic::auth_error_rate(both), analytic::auth_error_rate(one));
  EXPECT_EQ(analytic::auth_error_given_keys(both, 0, 0), 0.0);
}

TEST(Analytic, DetectionProbability) {
  EXPECT_NEAR(analytic::detection_probability(0.25, 1), 0.25, 1e-12);
  EXPECT_NEAR(analytic::detection_probability(0.25, 2), 0.4375, 1e-12);
  for (std::size_t m : {5u, 10u, 20u}) {
    EXPECT_NEAR(analytic::detection_probability(0.25, m), 1 - std::pow(0.75, m), 1e-12);
  }
  // Threshold 0.5 with m = 2 tolerates one error: abort only on two.
  EXPECT_NEAR(analytic::detection_probability(0.25, 2, 0.5), 0.0625, 1e-12);
  EXPECT_EQ(analytic::detection_probability(0.0, 10), 0.0);
}

TEST(Analytic, MessageErrorForEntanglingAttacks) {
  for (auto v : {ProtocolVariant::Qdc1, ProtocolVariant::Qdc2}) {
    const Channel c = v == ProtocolVariant::Qdc1 ? Channel::AliceToBob : Channel::AliceToTrent;
    EXPECT_NEAR(*analytic::message_error_rate(attack(AttackVariant::EntangleCNOT, {c}), v), 0.5, 1e-12);
    for (double theta : {0.2, std::numbers::pi / 4, 1.0}) {
      auto m = attack(AttackVariant::EntangleGeneral, {c});
      m.general = GeneralAttackParams::rotation(theta);
      EXPECT_NEAR(*analytic::message_error_rate(m, v), 0.5, 1e-12) << theta;
    }
    EXPECT_EQ(*analytic::message_error_rate(AttackModel{}, v), 0.0);
    EXPECT_FALSE(analytic::message_error_rate(attack(AttackVariant::EntangleCNOT, {Channel::TrentToAlice}), v));
  }
}

TEST(Analytic, EveViewIsIndependentOfMessageBit) {
  for (auto v : {ProtocolVariant::Qdc1, ProtocolVariant::Qdc2}) {
    const Channel c = v == ProtocolVariant::Qdc1 ? Channel::AliceToBob : Channel::AliceToTrent;
    for (Basis b : {Basis::Z, Basis::X}) {
      auto m = attack(AttackVariant::EntangleGeneral, {c});
      m.general = GeneralAttackParams::rotation(0.6);
      const auto v0 = analytic::eve_view(m, v, 0, b);
      const auto v1 = analytic::eve_view(m, v, 1, b);
      double total = 0;
      for (double p : v0) total += p;
      EXPECT_NEAR(total, 1.0, 1e-12);
      EXPECT_LT(analytic::total_variation(v0, v1), 1e-12);
    }
  }
}

TEST(Analytic, TotalVariation) {
  const std::array<double, 2> p{1.0, 0.0}, q{0.25, 0.75};
  EXPECT_NEAR(analytic::total_variation(p, q), 0.75, 1e-15);
  const std::array<double, 3> r{};
  EXPECT_THROW(analytic::total_variation(p, r), std::invalid_argument);
}

}  // namespace
}  // namespace ghzqdc
