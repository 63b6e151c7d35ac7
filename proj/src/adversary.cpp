#include "ghzqdc/adversary.hpp"

#include <algorithm>
#include <cmath>

namespace ghzqdc {

std::string_view to_string(AttackVariant v) {
  switch (v) {
    case AttackVariant::None: return "none";
    case AttackVariant::InterceptResendZ: return "intercept";
    case AttackVariant::EntangleCNOT: return "entangle-cnot";
    case AttackVariant::EntangleGeneral: return "entangle-general";
  }
  return "?";
}

std::optional<AttackVariant> parse_attack_variant(std::string_view s) {
  for (auto v : {AttackVariant::None, AttackVariant::InterceptResendZ, AttackVariant::EntangleCNOT,
                 AttackVariant::EntangleGeneral}) {
    if (to_string(v) == s) return v;
  }
  return std::nullopt;
}

Phase phase_of(Channel c) {
  return (c == Channel::TrentToAlice || c == Channel::TrentToBob) ? Phase::Auth : Phase::Message;
}

GeneralAttackParams GeneralAttackParams::cnot() { return GeneralAttackParams{}; }

GeneralAttackParams GeneralAttackParams::rotation(double theta) {
  GeneralAttackParams p;
  p.alpha = std::cos(theta);
  p.beta = std::sin(theta);
  p.alpha_p = std::cos(theta);
  p.beta_p = -std::sin(theta);
  return p;
}

namespace {

Vector4<double> column(const std::complex<double>& c0, const Vector2<double>& e0,
                       const std::complex<double>& c1, const Vector2<double>& e1) {
  // Basis order |a e> with the channel qubit a as the high bit.
  Vector4<double> v;
  v << c0 * e0(0), c0 * e0(1), c1 * e1(0), c1 * e1(1);
  return v;
}

}  // namespace

void GeneralAttackParams::validate() const {
  constexpr double tol = kAlgebraTolerance;
  for (const auto* e : {&e00, &e01, &e10, &e11}) {
    if (!e->allFinite() || std::abs(e->squaredNorm() - 1.0) > tol) {
      throw InvalidAttackError("ancilla states e_ij must be normalized");
    }
  }
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > tol) {
    throw InvalidAttackError("|alpha|^2 + |beta|^2 must equal 1");
  }
  if (std::abs(std::norm(alpha_p) + std::norm(beta_p) - 1.0) > tol) {
    throw InvalidAttackError("|alpha'|^2 + |beta'|^2 must equal 1");
  }
  if (std::abs(alpha * std::conj(beta) + std::conj(alpha_p) * beta_p) > tol) {
    throw InvalidAttackError("alpha beta* + alpha'* beta' must vanish");
  }
  const Vector4<double> c0 = column(alpha, e00, beta, e01);
  const Vector4<double> c1 = column(beta_p, e10, alpha_p, e11);
  if (std::abs(c0.squaredNorm() - 1.0) > tol || std::abs(c1.squaredNorm() - 1.0) > tol ||
      std::abs(c0.dot(c1)) > tol) {
    throw InvalidAttackError("attack parameters do not induce a unitary map");
  }
}

Matrix4<double> GeneralAttackParams::unitary(Completion completion) const {
  validate();
  Matrix4<double> u = Matrix4<double>::Zero();
  // Ancilla starts in |0>, so the specified images are columns |00> and |10>.
  u.col(0) = column(alpha, e00, beta, e01);
  u.col(2) = column(beta_p, e10, alpha_p, e11);

  std::vector<Vector4<double>> basis{u.col(0), u.col(2)};
  std::array<int, 4> order{0, 1, 2, 3};
  if (completion == Completion::GramSchmidtReverse) std::reverse(order.begin(), order.end());
  for (int k : order) {
    if (basis.size() == 4) break;
    Vector4<double> v = Vector4<double>::Unit(k);
    for (const auto& b : basis) v -= b.dot(v) * b;
    for (const auto& b : basis) v -= b.dot(v) * b;
    const double n = v.norm();
    if (n > 1e-6) basis.push_back(v / n);
  }
  u.col(1) = basis[2];
  u.col(3) = basis[3];
  if (!is_unitary(u)) throw InvalidAttackError("orthonormal completion failed");
  return u;
}

void AttackModel::validate() const {
  if (!(coverage >= 0.0 && coverage <= 1.0)) throw InvalidAttackError("coverage must be in [0, 1]");
  if (variant == AttackVariant::EntangleGeneral) general.validate();
  if (variant != AttackVariant::None && channels.empty()) {
    throw InvalidAttackError("an attack needs at least one target channel");
  }
}

bool AttackModel::targets(Channel c) const {
  return variant != AttackVariant::None &&
         std::find(channels.begin(), channels.end(), c) != channels.end();
}

bool AttackModel::targets_phase(Phase p) const {
  return std::any_of(channels.begin(), channels.end(),
                     [&](Channel c) { return targets(c) && phase_of(c) == p; });
}

PureState attack_intercept_resend(const PureState& state, int qubit, Rng& rng, EveRecord& record,
                                  const EveContext& where, Basis basis) {
  int outcome = 0;
  PureState out = [&] {
    if (basis == Basis::Z) {
      auto m = measure_z(state, qubit, rng);
      outcome = to_bit(m.outcome);
      return std::move(m.state);
    }
    auto m = measure_x(state, qubit, rng);
    outcome = to_bit(m.outcome);
    return std::move(m.state);
  }();
  record.observations.push_back({where.position, where.channel, where.phase,
                                 EveObservation::Kind::Intercept, basis, outcome});
  return out;
}

namespace {

void require_fresh_ancilla(const PureState& state, int ancilla) {
  if (probability_of(state, ZProjector{ancilla, ZOutcome::One}) > kAlgebraTolerance) {
    throw InvalidAttackError("ancilla must be prepared in |0>");
  }
}

}  // namespace

PureState attack_entangle_cnot(const PureState& state, int qubit, int ancilla) {
  state.check_index(qubit);
  state.check_index(ancilla);
  require_fresh_ancilla(state, ancilla);
  Matrix4<double> cnot = Matrix4<double>::Zero();
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1.0;
  return apply_two_qubit(state, cnot, qubit, ancilla);
}

PureState attack_entangle_general(const PureState& state, int qubit, int ancilla,
                                  const GeneralAttackParams& params, Completion completion) {
  state.check_index(qubit);
  state.check_index(ancilla);
  require_fresh_ancilla(state, ancilla);
  return apply_two_qubit(state, params.unitary(completion), qubit, ancilla);
}

int eve_measure_ancilla(PureState& state, int ancilla, Basis basis, Rng& rng, EveRecord& record,
                        const EveContext& where) {
  int outcome = 0;
  if (basis == Basis::Z) {
    auto m = measure_z(state, ancilla, rng);
    outcome = to_bit(m.outcome);
    state = std::move(m.state);
  } else {
    auto m = measure_x(state, ancilla, rng);
    outcome = to_bit(m.outcome);
    state = std::move(m.state);
  }
  record.observations.push_back({where.position, where.channel, where.phase,
                                 EveObservation::Kind::Ancilla, basis, outcome});
  return outcome;
}

int entangle_with_fresh_ancilla(PureState& state, int qubit, const AttackModel& model,
                                const std::string& label) {
  state = append_qubit(state, z_eigenvector(ZOutcome::Zero), label);
  const int ancilla = state.num_qubits() - 1;
  switch (model.variant) {
    case AttackVariant::EntangleCNOT:
      state = attack_entangle_cnot(state, qubit, ancilla);
      break;
    case AttackVariant::EntangleGeneral:
      state = attack_entangle_general(state, qubit, ancilla, model.general, model.completion);
      break;
    default:
      throw InvalidAttackError("variant does not use an ancilla");
  }
  return ancilla;
}

Eavesdropper::Eavesdropper(AttackModel model, std::uint64_t seed)
    : model_(std::move(model)), rng_(seed) {
  model_.validate();
}

bool Eavesdropper::on_transit(Channel channel, Phase phase, std::size_t position,
                              PureState& state, int qubit) {
  if (!model_.targets(channel)) return false;
  if (model_.coverage < 1.0) {
    if (model_.coverage <= 0.0) return false;
    std::bernoulli_distribution coin(model_.coverage);
    if (!coin(rng_)) return false;
  }
  ++record_.attacked_per_channel[static_cast<std::size_t>(channel)];
  const EveContext where{channel, phase, position};
  if (model_.variant == AttackVariant::InterceptResendZ) {
    state = attack_intercept_resend(state, qubit, rng_, record_, where, model_.intercept_basis);
    return true;
  }
  const std::string label = "E" + std::to_string(next_ancilla_++);
  entangle_with_fresh_ancilla(state, qubit, model_, label);
  pending_[position].push_back({label, channel, phase});
  return true;
}

void Eavesdropper::on_measure_turn(Phase /*phase*/, std::size_t position, PureState& state) {
  const auto it = pending_.find(position);
  if (it == pending_.end()) return;
  for (const auto& anc : it->second) {
    eve_measure_ancilla(state, state.index_of(anc.label), model_.ancilla_basis, rng_, record_,
                        {anc.channel, anc.phase, position});
  }
  pending_.erase(it);
}

}  // namespace ghzqdc
