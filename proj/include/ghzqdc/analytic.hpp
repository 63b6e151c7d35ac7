// Exact reference probabilities computed from the state vector by branch
// enumeration, with no sampling. The harness reports them next to the
// Monte Carlo estimates.
#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>

#include "ghzqdc/adversary.hpp"
#include "ghzqdc/protocol.hpp"

namespace ghzqdc::analytic {

// Probability that one authentication check triple shows non-identical
// z outcomes, for fixed key bits, with every targeted auth channel attacked.
double auth_error_given_keys(const AttackModel& attack, int key_bit_a, int key_bit_b);

// Same, averaged over uniform key bits and the attack's coverage.
double auth_error_rate(const AttackModel& attack);

// Averaged over Bob's key bit and coverage, with Alice's key bit fixed.
double auth_error_rate_given_key_a(const AttackModel& attack, int key_bit_a);

// P(errors / m > threshold) for m independent checks failing with
// probability `per_check`.
double detection_probability(double per_check, std::size_t m, double threshold = 0.0);

// Message-phase probability that Bob decodes the wrong bit. Empty when the
// attack also targets authentication channels.
std::optional<double> message_error_rate(const AttackModel& attack, ProtocolVariant variant);

// Eve's view of one attacked message position: joint distribution of
// (public announcement bit, Eve's outcome), indexed 2 * public + eve. The
// public bit is Trent's x outcome (QDC1) or Trent's published bit (QDC2).
// Requires an attack on the variant's message channel.
std::array<double, 4> eve_view(const AttackModel& attack, ProtocolVariant variant, int message_bit,
                               Basis eve_basis = Basis::Z);

double total_variation(std::span<const double> p, std::span<const double> q);

}  // namespace ghzqdc::analytic
