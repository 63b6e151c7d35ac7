// Dense pure-state simulation of small qubit registers.
//
// Qubit 0 is the most significant bit of the basis index, so a register
// labelled (A, T, B) stores |a t b> at index 4a + 2t + b. All types are
// templated on the real scalar; `PureState`, `Gate1Q` etc. are the double
// instantiations used by the rest of the library.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "ghzqdc/outcomes.hpp"

namespace ghzqdc {

inline constexpr int kMaxQubits = 8;
inline constexpr double kAlgebraTolerance = 1e-9;

// Normalization slack for a given scalar; float cannot hold 1e-9.
template <typename Scalar>
constexpr Scalar normalization_tolerance() {
  return std::max(Scalar(kAlgebraTolerance), Scalar(64) * std::numeric_limits<Scalar>::epsilon());
}

template <typename Scalar>
using Complex = std::complex<Scalar>;
template <typename Scalar>
using AmplitudeVector = Eigen::Matrix<Complex<Scalar>, Eigen::Dynamic, 1>;
template <typename Scalar>
using Vector2 = Eigen::Matrix<Complex<Scalar>, 2, 1>;
template <typename Scalar>
using Vector4 = Eigen::Matrix<Complex<Scalar>, 4, 1>;
template <typename Scalar>
using Matrix2 = Eigen::Matrix<Complex<Scalar>, 2, 2>;
template <typename Scalar>
using Matrix4 = Eigen::Matrix<Complex<Scalar>, 4, 4>;

class QubitIndexError : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Raised when a collapse or projection leaves a (numerically) zero vector;
// this only happens on internal logic errors.
class DegenerateStateError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class MalformedProjectorError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

template <typename Derived>
bool is_unitary(const Eigen::MatrixBase<Derived>& m, double tol = kAlgebraTolerance) {
  if (m.rows() != m.cols()) return false;
  using Plain = typename Derived::PlainObject;
  const Plain product = m * m.adjoint();
  return (product - Plain::Identity(m.rows(), m.cols())).cwiseAbs().maxCoeff() <= tol;
}

enum class GateName : std::uint8_t { I, H, X, HX };

inline const char* to_string(GateName g) {
  switch (g) {
    case GateName::I: return "I";
    case GateName::H: return "H";
    case GateName::X: return "X";
    case GateName::HX: return "HX";
  }
  return "?";
}

template <typename Scalar>
struct BasicGate1Q {
  Matrix2<Scalar> matrix;
  GateName name;
};

template <typename Scalar = double>
BasicGate1Q<Scalar> make_gate(GateName name) {
  const Scalar r = Scalar(1) / std::sqrt(Scalar(2));
  Matrix2<Scalar> h;
  h << r, r, r, -r;
  Matrix2<Scalar> x;
  x << 0, 1, 1, 0;
  switch (name) {
    case GateName::I: return {Matrix2<Scalar>::Identity(), name};
    case GateName::H: return {h, name};
    case GateName::X: return {x, name};
    // X acts first, then H.
    case GateName::HX: return {h * x, name};
  }
  throw std::invalid_argument("unknown gate");
}

template <typename Scalar = double>
Vector4<Scalar> bell_vector(BellOutcome which) {
  const Scalar r = Scalar(1) / std::sqrt(Scalar(2));
  Vector4<Scalar> v = Vector4<Scalar>::Zero();
  switch (which) {
    case BellOutcome::PhiPlus: v(0) = r; v(3) = r; break;
    case BellOutcome::PhiMinus: v(0) = r; v(3) = -r; break;
    case BellOutcome::PsiPlus: v(1) = r; v(2) = r; break;
    case BellOutcome::PsiMinus: v(1) = r; v(2) = -r; break;
  }
  return v;
}

template <typename Scalar = double>
Vector2<Scalar> x_eigenvector(XOutcome which) {
  const Scalar r = Scalar(1) / std::sqrt(Scalar(2));
  Vector2<Scalar> v;
  v << r, which == XOutcome::Plus ? r : -r;
  return v;
}

template <typename Scalar = double>
Vector2<Scalar> z_eigenvector(ZOutcome which) {
  Vector2<Scalar> v = Vector2<Scalar>::Zero();
  v(which == ZOutcome::Zero ? 0 : 1) = 1;
  return v;
}

template <typename Scalar>
class BasicPureState {
 public:
  using Amplitudes = AmplitudeVector<Scalar>;

  // |0...0> on `labels.size()` qubits.
  explicit BasicPureState(std::vector<std::string> labels)
      : labels_(std::move(labels)) {
    check_qubit_count(static_cast<int>(labels_.size()));
    amplitudes_ = Amplitudes::Zero(Eigen::Index{1} << labels_.size());
    amplitudes_(0) = 1;
  }

  // Takes the amplitudes as given; they must already be normalized.
  BasicPureState(std::vector<std::string> labels, Amplitudes amplitudes)
      : labels_(std::move(labels)), amplitudes_(std::move(amplitudes)) {
    check_qubit_count(static_cast<int>(labels_.size()));
    if (amplitudes_.size() != (Eigen::Index{1} << labels_.size())) {
      throw std::invalid_argument("amplitude vector length must be 2^num_qubits");
    }
    if (std::abs(norm_squared() - Scalar(1)) > normalization_tolerance<Scalar>()) {
      throw std::invalid_argument("amplitudes are not normalized");
    }
  }

  int num_qubits() const { return static_cast<int>(labels_.size()); }
  Eigen::Index dimension() const { return amplitudes_.size(); }
  const Amplitudes& amplitudes() const { return amplitudes_; }
  Amplitudes& mutable_amplitudes() { return amplitudes_; }
  const Complex<Scalar>& amplitude(Eigen::Index basis_index) const {
    return amplitudes_(basis_index);
  }

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int qubit) const {
    check_index(qubit);
    return labels_[static_cast<std::size_t>(qubit)];
  }
  int index_of(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw QubitIndexError("no qubit labelled " + label);
    return static_cast<int>(it - labels_.begin());
  }

  // Position of `qubit` inside a basis index.
  int bit_of(int qubit) const {
    check_index(qubit);
    return num_qubits() - 1 - qubit;
  }

  Scalar norm_squared() const { return amplitudes_.squaredNorm(); }
  bool all_finite() const { return amplitudes_.allFinite(); }

  void check_index(int qubit) const {
    if (qubit < 0 || qubit >= num_qubits()) {
      throw QubitIndexError("qubit index " + std::to_string(qubit) + " out of range for " +
                            std::to_string(num_qubits()) + "-qubit register");
    }
  }

  void normalize() {
    const Scalar n = std::sqrt(norm_squared());
    if (!(n > Scalar(1e-12))) throw DegenerateStateError("cannot normalize a zero state");
    amplitudes_ /= n;
  }

  // Applies a 2x2 operator (not necessarily unitary) to one qubit in place.
  void apply_local(const Matrix2<Scalar>& m, int target) {
    const Eigen::Index stride = Eigen::Index{1} << bit_of(target);
    for (Eigen::Index i = 0; i < dimension(); ++i) {
      if (i & stride) continue;
      const Complex<Scalar> a0 = amplitudes_(i);
      const Complex<Scalar> a1 = amplitudes_(i | stride);
      amplitudes_(i) = m(0, 0) * a0 + m(0, 1) * a1;
      amplitudes_(i | stride) = m(1, 0) * a0 + m(1, 1) * a1;
    }
  }

  // Applies a 4x4 operator on (first, second), with `first` the high bit
  // of the operator's basis |first second>.
  void apply_local(const Matrix4<Scalar>& m, int first, int second) {
    if (first == second) throw QubitIndexError("two-qubit operator needs distinct qubits");
    const Eigen::Index hi = Eigen::Index{1} << bit_of(first);
    const Eigen::Index lo = Eigen::Index{1} << bit_of(second);
    for (Eigen::Index i = 0; i < dimension(); ++i) {
      if ((i & hi) || (i & lo)) continue;
      const std::array<Eigen::Index, 4> idx{i, i | lo, i | hi, i | hi | lo};
      Vector4<Scalar> v;
      for (int k = 0; k < 4; ++k) v(k) = amplitudes_(idx[static_cast<std::size_t>(k)]);
      const Vector4<Scalar> w = m * v;
      for (int k = 0; k < 4; ++k) amplitudes_(idx[static_cast<std::size_t>(k)]) = w(k);
    }
  }

 private:
  static void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits) {
      throw std::invalid_argument("register size must be between 1 and " +
                                  std::to_string(kMaxQubits) + " qubits");
    }
  }

  std::vector<std::string> labels_;
  Amplitudes amplitudes_;
};

using PureState = BasicPureState<double>;
using Gate1Q = BasicGate1Q<double>;

template <typename Scalar = double>
BasicPureState<Scalar> new_ghz3() {
  const Scalar r = Scalar(1) / std::sqrt(Scalar(2));
  AmplitudeVector<Scalar> amps = AmplitudeVector<Scalar>::Zero(8);
  amps(0) = r;
  amps(7) = r;
  return BasicPureState<Scalar>({"A", "T", "B"}, std::move(amps));
}

template <typename Scalar>
BasicPureState<Scalar> apply_gate(BasicPureState<Scalar> state, const BasicGate1Q<Scalar>& gate,
                                  int target) {
  state.apply_local(gate.matrix, target);
  return state;
}

template <typename Scalar>
BasicPureState<Scalar> apply_two_qubit(BasicPureState<Scalar> state, const Matrix4<Scalar>& u,
                                       int first, int second) {
  state.apply_local(u, first, second);
  return state;
}

// Tensors a fresh single-qubit state onto the end of the register.
template <typename Scalar>
BasicPureState<Scalar> append_qubit(const BasicPureState<Scalar>& state,
                                    const Vector2<Scalar>& qubit, std::string label) {
  std::vector<std::string> labels = state.labels();
  labels.push_back(std::move(label));
  const Eigen::Index dim = state.dimension();
  AmplitudeVector<Scalar> amps(dim * 2);
  for (Eigen::Index i = 0; i < dim; ++i) {
    amps(2 * i) = state.amplitude(i) * qubit(0);
    amps(2 * i + 1) = state.amplitude(i) * qubit(1);
  }
  return BasicPureState<Scalar>(std::move(labels), std::move(amps));
}

// Projector descriptions understood by probability_of / project.
struct ZProjector {
  int qubit;
  ZOutcome outcome;
};
struct XProjector {
  int qubit;
  XOutcome outcome;
};
struct BellProjector {
  int first;
  int second;
  BellOutcome outcome;
};
using Projector = std::variant<ZProjector, XProjector, BellProjector>;

namespace detail {

inline void touched_qubits(const Projector& p, std::vector<int>& out) {
  std::visit(
      [&](const auto& q) {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, BellProjector>) {
          out.push_back(q.first);
          out.push_back(q.second);
        } else {
          out.push_back(q.qubit);
        }
      },
      p);
}

template <typename Scalar>
void apply_projector(BasicPureState<Scalar>& s, const Projector& p) {
  std::visit(
      [&](const auto& q) {
        using T = std::decay_t<decltype(q)>;
        if constexpr (std::is_same_v<T, ZProjector>) {
          const Vector2<Scalar> v = z_eigenvector<Scalar>(q.outcome);
          s.apply_local(Matrix2<Scalar>(v * v.adjoint()), q.qubit);
        } else if constexpr (std::is_same_v<T, XProjector>) {
          const Vector2<Scalar> v = x_eigenvector<Scalar>(q.outcome);
          s.apply_local(Matrix2<Scalar>(v * v.adjoint()), q.qubit);
        } else {
          if (q.first == q.second) {
            throw MalformedProjectorError("Bell projector needs two distinct qubits");
          }
          const Vector4<Scalar> v = bell_vector<Scalar>(q.outcome);
          s.apply_local(Matrix4<Scalar>(v * v.adjoint()), q.first, q.second);
        }
      },
      p);
}

template <typename Scalar, typename Rng>
std::size_t sample_index(std::span<const Scalar> probabilities, Rng& rng) {
  // Branches below the cutoff are rounding residue and are never sampled,
  // so outcomes with exact probability one stay deterministic.
  constexpr Scalar kCutoff = Scalar(1e-14);
  Scalar total = 0;
  for (Scalar p : probabilities) total += p > kCutoff ? p : Scalar(0);
  if (!(total > Scalar(0))) throw DegenerateStateError("no outcome has positive probability");
  std::uniform_real_distribution<Scalar> uniform(Scalar(0), total);
  const Scalar u = uniform(rng);
  Scalar cumulative = 0;
  std::size_t last_nonzero = 0;
  for (std::size_t k = 0; k < probabilities.size(); ++k) {
    if (probabilities[k] <= kCutoff) continue;
    last_nonzero = k;
    cumulative += probabilities[k];
    if (u < cumulative) return k;
  }
  return last_nonzero;
}

}  // namespace detail

// Unnormalized image of `state` under a product of commuting projectors on
// disjoint qubits.
template <typename Scalar>
BasicPureState<Scalar> project(BasicPureState<Scalar> state, std::span<const Projector> factors) {
  std::vector<int> touched;
  for (const auto& p : factors) detail::touched_qubits(p, touched);
  for (int q : touched) {
    if (q < 0 || q >= state.num_qubits()) {
      throw MalformedProjectorError("projector qubit " + std::to_string(q) + " out of range");
    }
  }
  std::vector<int> sorted = touched;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw MalformedProjectorError("projector factors must act on disjoint qubits");
  }
  for (const auto& p : factors) detail::apply_projector(state, p);
  return state;
}

template <typename Scalar>
Scalar probability_of(const BasicPureState<Scalar>& state, std::span<const Projector> factors) {
  return project(state, factors).norm_squared();
}

template <typename Scalar>
Scalar probability_of(const BasicPureState<Scalar>& state, const Projector& projector) {
  return probability_of(state, std::span<const Projector>(&projector, 1));
}

template <typename Outcome, typename Scalar>
struct Measurement {
  Outcome outcome;
  BasicPureState<Scalar> state;
};

namespace detail {

template <typename Outcome, typename Scalar, typename Rng, std::size_t K>
Measurement<Outcome, Scalar> measure_with(const BasicPureState<Scalar>& state,
                                          const std::array<Outcome, K>& outcomes,
                                          const std::array<Projector, K>& projectors, Rng& rng) {
  std::array<Scalar, K> probs{};
  for (std::size_t k = 0; k < K; ++k) probs[k] = probability_of(state, projectors[k]);
  const std::size_t pick = sample_index<Scalar>(std::span<const Scalar>(probs), rng);
  auto collapsed = project(state, std::span<const Projector>(&projectors[pick], 1));
  if (collapsed.norm_squared() < Scalar(1e-24)) {
    throw DegenerateStateError("measurement collapsed onto a zero-probability branch");
  }
  collapsed.normalize();
  return {outcomes[pick], std::move(collapsed)};
}

}  // namespace detail

template <typename Scalar, typename Rng>
Measurement<ZOutcome, Scalar> measure_z(const BasicPureState<Scalar>& state, int target, Rng& rng) {
  state.check_index(target);
  return detail::measure_with<ZOutcome>(
      state, std::array{ZOutcome::Zero, ZOutcome::One},
      std::array<Projector, 2>{ZProjector{target, ZOutcome::Zero},
                               ZProjector{target, ZOutcome::One}},
      rng);
}

template <typename Scalar, typename Rng>
Measurement<XOutcome, Scalar> measure_x(const BasicPureState<Scalar>& state, int target, Rng& rng) {
  state.check_index(target);
  return detail::measure_with<XOutcome>(
      state, std::array{XOutcome::Plus, XOutcome::Minus},
      std::array<Projector, 2>{XProjector{target, XOutcome::Plus},
                               XProjector{target, XOutcome::Minus}},
      rng);
}

template <typename Scalar, typename Rng>
Measurement<BellOutcome, Scalar> measure_bell(const BasicPureState<Scalar>& state, int first,
                                              int second, Rng& rng) {
  state.check_index(first);
  state.check_index(second);
  if (first == second) throw QubitIndexError("Bell measurement needs two distinct qubits");
  std::array<Projector, 4> projectors;
  for (std::size_t k = 0; k < 4; ++k) {
    projectors[k] = BellProjector{first, second, kBellOutcomes[k]};
  }
  return detail::measure_with<BellOutcome>(state, kBellOutcomes, projectors, rng);
}

}  // namespace ghzqdc
