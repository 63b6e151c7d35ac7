// Eavesdropper models attached to quantum channel hook points.
//
// Every entangling attack uses a fresh single-qubit ancilla labelled
// "E<n>" appended to the attacked position's register. Eve's initial
// ancilla state |E> is |0>.
#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "ghzqdc/channel.hpp"
#include "ghzqdc/random.hpp"
#include "ghzqdc/statevector.hpp"

namespace ghzqdc {

enum class AttackVariant : std::uint8_t { None, InterceptResendZ, EntangleCNOT, EntangleGeneral };
enum class Basis : std::uint8_t { Z, X };

std::string_view to_string(AttackVariant v);
std::optional<AttackVariant> parse_attack_variant(std::string_view s);

class InvalidAttackError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// How the two columns of U_AE fixed by the attack parameters are extended
// to a full 4x4 unitary. Either choice gives the same physics because the
// ancilla always starts in |E>.
enum class Completion : std::uint8_t { GramSchmidtForward, GramSchmidtReverse };

// U|0>|E> = alpha |0>|e00> + beta |1>|e01>
// U|1>|E> = beta' |0>|e10> + alpha' |1>|e11>
struct GeneralAttackParams {
  std::complex<double> alpha{1.0, 0.0};
  std::complex<double> beta{0.0, 0.0};
  std::complex<double> alpha_p{1.0, 0.0};
  std::complex<double> beta_p{0.0, 0.0};
  // e_ij defaults to |j>: the ancilla copies the outgoing z value.
  Vector2<double> e00 = z_eigenvector(ZOutcome::Zero);
  Vector2<double> e01 = z_eigenvector(ZOutcome::One);
  Vector2<double> e10 = z_eigenvector(ZOutcome::Zero);
  Vector2<double> e11 = z_eigenvector(ZOutcome::One);

  // alpha = alpha' = 1, beta = beta' = 0, e00 = |0>, e11 = |1>.
  static GeneralAttackParams cnot();
  // alpha = beta = alpha' = cos/sin(theta) family with beta' = -sin(theta).
  static GeneralAttackParams rotation(double theta);

  // Throws InvalidAttackError unless the normalization, the
  // alpha beta* + alpha'* beta' = 0 constraint and unitarity of the induced
  // map all hold within 1e-9.
  void validate() const;
  Matrix4<double> unitary(Completion completion = Completion::GramSchmidtForward) const;
};

struct AttackModel {
  AttackVariant variant = AttackVariant::None;
  GeneralAttackParams general{};
  std::vector<Channel> channels{Channel::TrentToAlice};
  // Fraction of transmitted qubits attacked on each targeted channel.
  double coverage = 1.0;
  Basis intercept_basis = Basis::Z;
  Basis ancilla_basis = Basis::Z;
  Completion completion = Completion::GramSchmidtForward;

  void validate() const;
  bool targets(Channel c) const;
  bool targets_phase(Phase p) const;
};

Phase phase_of(Channel c);

struct EveObservation {
  enum class Kind : std::uint8_t { Intercept, Ancilla };
  std::size_t position;
  Channel channel;  // channel the observed qubit was taken from
  Phase phase;      // phase in which the attack happened
  Kind kind;
  Basis basis;
  int outcome;
};

struct EveRecord {
  std::vector<EveObservation> observations;
  std::array<std::size_t, 4> attacked_per_channel{};
};

struct EveContext {
  Channel channel;
  Phase phase;
  std::size_t position;
};

PureState attack_intercept_resend(const PureState& state, int qubit, Rng& rng, EveRecord& record,
                                  const EveContext& where, Basis basis = Basis::Z);

// Controlled flip of the ancilla (prepared in |0>) by the channel qubit.
PureState attack_entangle_cnot(const PureState& state, int qubit, int ancilla);

PureState attack_entangle_general(const PureState& state, int qubit, int ancilla,
                                  const GeneralAttackParams& params,
                                  Completion completion = Completion::GramSchmidtForward);

int eve_measure_ancilla(PureState& state, int ancilla, Basis basis, Rng& rng, EveRecord& record,
                        const EveContext& where);

// Appends Eve's ancilla, applies the model's entangling map and returns the
// ancilla index. Not valid for InterceptResendZ / None.
int entangle_with_fresh_ancilla(PureState& state, int qubit, const AttackModel& model,
                                const std::string& label);

class Eavesdropper final : public ChannelTap {
 public:
  Eavesdropper(AttackModel model, std::uint64_t seed);

  bool on_transit(Channel channel, Phase phase, std::size_t position, PureState& state,
                  int qubit) override;
  void on_measure_turn(Phase phase, std::size_t position, PureState& state) override;

  const AttackModel& model() const { return model_; }
  const EveRecord& record() const { return record_; }

 private:
  struct PendingAncilla {
    std::string label;
    Channel channel;
    Phase phase;
  };

  AttackModel model_;
  Rng rng_;
  EveRecord record_;
  std::size_t next_ancilla_ = 0;
  std::map<std::size_t, std::vector<PendingAncilla>> pending_;
};

}  // namespace ghzqdc
