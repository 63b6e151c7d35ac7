#include "ghzqdc/analytic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace ghzqdc::analytic {

namespace {

struct Branch {
  double weight;
  PureState state;
  int eve_outcome;  // intercept outcome, -1 if none
};

// Applies the attack deterministically to `qubit` of every branch.
std::vector<Branch> attack_branches(std::vector<Branch> in, const AttackModel& attack, int qubit) {
  std::vector<Branch> out;
  for (auto& b : in) {
    switch (attack.variant) {
      case AttackVariant::None:
        out.push_back(std::move(b));
        break;
      case AttackVariant::InterceptResendZ: {
        for (int o : {0, 1}) {
          const Projector p = attack.intercept_basis == Basis::Z
                                  ? Projector{ZProjector{qubit, o ? ZOutcome::One : ZOutcome::Zero}}
                                  : Projector{XProjector{qubit, o ? XOutcome::Minus : XOutcome::Plus}};
          auto s = project(b.state, std::span<const Projector>(&p, 1));
          const double prob = s.norm_squared();
          if (prob < 1e-15) continue;
          s.normalize();
          out.push_back({b.weight * prob, std::move(s), o});
        }
        break;
      }
      case AttackVariant::EntangleCNOT:
      case AttackVariant::EntangleGeneral: {
        entangle_with_fresh_ancilla(b.state, qubit, attack, "E" + std::to_string(b.state.num_qubits()));
        out.push_back(std::move(b));
        break;
      }
    }
  }
  return out;
}

double all_equal_z(const PureState& s) {
  double p = 0.0;
  for (ZOutcome z : kZOutcomes) {
    const std::array<Projector, 3> f{ZProjector{kQubitA, z}, ZProjector{kQubitT, z}, ZProjector{kQubitB, z}};
    p += probability_of(s, std::span<const Projector>(f));
  }
  return p;
}

double auth_error_for_subset(const AttackModel& attack, int ka, int kb, bool hit_a, bool hit_b) {
  PureState s = new_ghz3();
  s.apply_local(unitary_for_key_bit(ka).matrix, kQubitA);
  s.apply_local(unitary_for_key_bit(kb).matrix, kQubitB);
  std::vector<Branch> branches{{1.0, std::move(s), -1}};
  if (hit_a) branches = attack_branches(std::move(branches), attack, kQubitA);
  if (hit_b) branches = attack_branches(std::move(branches), attack, kQubitB);
  double err = 0.0;
  for (auto& b : branches) {
    b.state.apply_local(unitary_for_key_bit(ka).matrix, kQubitA);
    b.state.apply_local(unitary_for_key_bit(kb).matrix, kQubitB);
    err += b.weight * (1.0 - all_equal_z(b.state));
  }
  return err;
}

double mixed_over_coverage(const AttackModel& attack, int ka, int kb) {
  const bool ta = attack.targets(Channel::TrentToAlice);
  const bool tb = attack.targets(Channel::TrentToBob);
  const double c = attack.coverage;
  double total = 0.0;
  for (int ha = 0; ha <= (ta ? 1 : 0); ++ha) {
    for (int hb = 0; hb <= (tb ? 1 : 0); ++hb) {
      const double wa = ta ? (ha ? c : 1.0 - c) : 1.0;
      const double wb = tb ? (hb ? c : 1.0 - c) : 1.0;
      if (wa * wb == 0.0) continue;
      total += wa * wb * auth_error_for_subset(attack, ka, kb, ha != 0, hb != 0);
    }
  }
  return total;
}

Channel message_channel(ProtocolVariant v) {
  return v == ProtocolVariant::Qdc1 ? Channel::AliceToBob : Channel::AliceToTrent;
}

std::vector<Branch> encoded_message_branches(const AttackModel& attack, int bit) {
  PureState s = new_ghz3();
  s.apply_local(make_gate(bit ? GateName::HX : GateName::H).matrix, kQubitA);
  std::vector<Branch> branches{{1.0, std::move(s), -1}};
  return attack_branches(std::move(branches), attack, kQubitA);
}

// Joint probability of a Bell outcome on (A, partner) and an x outcome on
// the remaining protocol qubit, optionally with Eve's ancilla outcome.
double joint(const PureState& s, ProtocolVariant variant, BellOutcome bell, XOutcome x,
             const Projector* eve) {
  const bool qdc1 = variant == ProtocolVariant::Qdc1;
  std::vector<Projector> f{BellProjector{kQubitA, qdc1 ? kQubitB : kQubitT, bell},
                           XProjector{qdc1 ? kQubitT : kQubitB, x}};
  if (eve) f.push_back(*eve);
  return probability_of(s, std::span<const Projector>(f));
}

// Rounds float noise from amplitude arithmetic to exact 0 so that an
// unattacked channel reports an error rate of 0 rather than 1e-16.
double snap(double p) { return std::abs(p) < 1e-12 ? 0.0 : p; }

int decode(ProtocolVariant variant, BellOutcome bell, XOutcome x) {
  return variant == ProtocolVariant::Qdc1 ? qdc1_decode(bell, x) : qdc2_decode(trent_publish(bell), x);
}

}  // namespace

double auth_error_given_keys(const AttackModel& attack, int key_bit_a, int key_bit_b) {
  return snap(auth_error_for_subset(attack, key_bit_a, key_bit_b, attack.targets(Channel::TrentToAlice),
                                    attack.targets(Channel::TrentToBob)));
}

double auth_error_rate(const AttackModel& attack) {
  return 0.5 * (auth_error_rate_given_key_a(attack, 0) + auth_error_rate_given_key_a(attack, 1));
}

double auth_error_rate_given_key_a(const AttackModel& attack, int key_bit_a) {
  return snap(0.5 * (mixed_over_coverage(attack, key_bit_a, 0) + mixed_over_coverage(attack, key_bit_a, 1)));
}

double detection_probability(double per_check, std::size_t m, double threshold) {
  if (m == 0) return 0.0;
  // Aborted iff k / m > threshold.
  const auto max_tolerated = static_cast<long>(std::floor(threshold * static_cast<double>(m) + 1e-9));
  if (per_check <= 0.0) return 0.0;
  if (per_check >= 1.0) return static_cast<long>(m) > max_tolerated ? 1.0 : 0.0;
  double accepted = 0.0;
  const double md = static_cast<double>(m);
  for (long k = 0; k <= max_tolerated && k <= static_cast<long>(m); ++k) {
    const double kd = static_cast<double>(k);
    const double log_term = std::lgamma(md + 1) - std::lgamma(kd + 1) - std::lgamma(md - kd + 1) +
                            kd * std::log(per_check) + (md - kd) * std::log1p(-per_check);
    accepted += std::exp(log_term);
  }
  return std::clamp(1.0 - accepted, 0.0, 1.0);
}

std::optional<double> message_error_rate(const AttackModel& attack, ProtocolVariant variant) {
  if (attack.targets_phase(Phase::Auth)) return std::nullopt;
  const bool hit = attack.targets(message_channel(variant));
  const double c = hit ? attack.coverage : 0.0;
  double err = 0.0;
  for (int bit : {0, 1}) {
    for (int attacked : {0, 1}) {
      const double w = attacked ? c : 1.0 - c;
      if (w == 0.0) continue;
      const AttackModel used = attacked ? attack : AttackModel{};
      for (const auto& b : encoded_message_branches(used, bit)) {
        for (BellOutcome bell : kBellOutcomes) {
          for (XOutcome x : kXOutcomes) {
            if (decode(variant, bell, x) != bit) {
              err += 0.5 * w * b.weight * joint(b.state, variant, bell, x, nullptr);
            }
          }
        }
      }
    }
  }
  return snap(err);
}

std::array<double, 4> eve_view(const AttackModel& attack, ProtocolVariant variant, int message_bit,
                               Basis eve_basis) {
  if (!attack.targets(message_channel(variant))) {
    throw std::invalid_argument("eve_view needs an attack on the message channel");
  }
  std::array<double, 4> dist{};
  for (const auto& b : encoded_message_branches(attack, message_bit)) {
    for (BellOutcome bell : kBellOutcomes) {
      for (XOutcome x : kXOutcomes) {
        const int pub = variant == ProtocolVariant::Qdc1 ? to_bit(x) : trent_publish(bell);
        if (b.eve_outcome >= 0) {
          dist[static_cast<std::size_t>(2 * pub + b.eve_outcome)] +=
              b.weight * joint(b.state, variant, bell, x, nullptr);
          continue;
        }
        const int ancilla = b.state.num_qubits() - 1;
        for (int e : {0, 1}) {
          const Projector eve = eve_basis == Basis::Z
                                    ? Projector{ZProjector{ancilla, e ? ZOutcome::One : ZOutcome::Zero}}
                                    : Projector{XProjector{ancilla, e ? XOutcome::Minus : XOutcome::Plus}};
          dist[static_cast<std::size_t>(2 * pub + e)] += b.weight * joint(b.state, variant, bell, x, &eve);
        }
      }
    }
  }
  return dist;
}

double total_variation(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw std::invalid_argument("total_variation: size mismatch");
  double tv = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) tv += std::abs(p[i] - q[i]);
  return 0.5 * tv;
}

}  // namespace ghzqdc::analytic
