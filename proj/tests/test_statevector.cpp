#include <gtest/gtest.h>

#include <random>

#include "ghzqdc/statevector.hpp"

namespace ghzqdc {
namespace {

using Mat = Eigen::MatrixXcd;

// Dense kron built element by element, used as an independent reference
// for apply_local.
Mat kron(const Mat& a, const Mat& b) {
  Mat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      for (Eigen::Index k = 0; k < b.rows(); ++k)
        for (Eigen::Index l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

Mat embed(const Mat& g, int target, int n) {
  Mat out = Mat::Identity(1, 1);
  for (int q = 0; q < n; ++q) out = kron(out, q == target ? g : Mat(Mat::Identity(2, 2)));
  return out;
}

PureState random_state(int n, std::mt19937_64& rng) {
  std::normal_distribution<double> g;
  AmplitudeVector<double> v(Eigen::Index{1} << n);
  for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = {g(rng), g(rng)};
  v.normalize();
  std::vector<std::string> labels;
  for (int q = 0; q < n; ++q) labels.push_back("q" + std::to_string(q));
  return PureState(labels, v);
}

TEST(StateVector, GhzHasTwoEqualAmplitudes) {
  const PureState s = new_ghz3();
  EXPECT_EQ(s.dimension(), 8);
  EXPECT_NEAR(std::abs(s.amplitude(0)), 1 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(std::abs(s.amplitude(7)), 1 / std::sqrt(2.0), 1e-15);
  for (int i = 1; i < 7; ++i) EXPECT_EQ(s.amplitude(i), Complex<double>(0));
  EXPECT_EQ(s.index_of("T"), 1);
}

TEST(StateVector, ApplyLocalMatchesKroneckerReference) {
  std::mt19937_64 rng(7);
  for (GateName g : {GateName::H, GateName::X, GateName::HX}) {
    for (int target = 0; target < 3; ++target) {
      const PureState s = random_state(3, rng);
      const auto gate = make_gate(g);
      const PureState out = apply_gate(s, gate, target);
      const Eigen::VectorXcd ref = embed(gate.matrix, target, 3) * s.amplitudes();
      EXPECT_LT((out.amplitudes() - ref).norm(), 1e-12) << to_string(g) << " on " << target;
    }
  }
}

TEST(StateVector, TwoQubitOperatorOrderMatchesReference) {
  std::mt19937_64 rng(9);
  Matrix4<double> cnot = Matrix4<double>::Zero();
  cnot(0, 0) = cnot(1, 1) = cnot(2, 3) = cnot(3, 2) = 1;
  const PureState s = random_state(3, rng);
  // CNOT with qubit 0 as control, qubit 2 as target, built from projectors.
  const Mat p0 = Mat(Eigen::Matrix2cd{{1, 0}, {0, 0}});
  const Mat p1 = Mat(Eigen::Matrix2cd{{0, 0}, {0, 1}});
  const Mat x = make_gate(GateName::X).matrix;
  const Mat i2 = Mat::Identity(2, 2);
  const Mat ref = kron(kron(p0, i2), i2) + kron(kron(p1, i2), x);
  const PureState out = apply_two_qubit(s, cnot, 0, 2);
  EXPECT_LT((out.amplitudes() - ref * s.amplitudes()).norm(), 1e-12);
}

TEST(StateVector, HXMeansXFirst) {
  const auto hx = make_gate(GateName::HX).matrix;
  const Eigen::Matrix2cd expected = make_gate(GateName::H).matrix * make_gate(GateName::X).matrix;
  EXPECT_LT((hx - expected).norm(), 1e-15);
}

TEST(StateVector, GatesAreUnitaryAndInvolutions) {
  for (GateName g : {GateName::I, GateName::H, GateName::X, GateName::HX}) {
    EXPECT_TRUE(is_unitary(make_gate(g).matrix)) << to_string(g);
  }
  for (GateName g : {GateName::H, GateName::X}) {
    const auto m = make_gate(g).matrix;
    EXPECT_LT((m * m - Eigen::Matrix2cd::Identity()).norm(), 1e-15);
  }
}

TEST(StateVector, NormPreservedOnRandomStates) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> gate(0, 3), qubit(0, 3);
  for (int trial = 0; trial < 200; ++trial) {
    PureState s = random_state(4, rng);
    for (int k = 0; k < 10; ++k) s.apply_local(make_gate(static_cast<GateName>(gate(rng))).matrix, qubit(rng));
    EXPECT_NEAR(s.norm_squared(), 1.0, 1e-12);
  }
}

TEST(StateVector, BellBasisIsOrthonormal) {
  for (BellOutcome a : kBellOutcomes) {
    for (BellOutcome b : kBellOutcomes) {
      const auto ip = bell_vector(a).dot(bell_vector(b));
      EXPECT_NEAR(std::abs(ip), a == b ? 1.0 : 0.0, 1e-15);
    }
  }
}

TEST(StateVector, MeasurementProbabilitiesSumToOne) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const PureState s = random_state(3, rng);
    double z = 0, x = 0, bell = 0;
    for (ZOutcome o : kZOutcomes) z += probability_of(s, ZProjector{1, o});
    for (XOutcome o : kXOutcomes) x += probability_of(s, XProjector{2, o});
    for (BellOutcome o : kBellOutcomes) bell += probability_of(s, BellProjector{0, 2, o});
    EXPECT_NEAR(z, 1.0, 1e-12);
    EXPECT_NEAR(x, 1.0, 1e-12);
    EXPECT_NEAR(bell, 1.0, 1e-12);
  }
}

TEST(StateVector, RepeatedMeasurementIsStable) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 100; ++trial) {
    const PureState s = random_state(3, rng);
    const auto first = measure_bell(s, 0, 1, rng);
    const auto again = measure_bell(first.state, 0, 1, rng);
    EXPECT_EQ(first.outcome, again.outcome);
    EXPECT_LT((first.state.amplitudes() - again.state.amplitudes()).norm(), 1e-12);
    const auto x1 = measure_x(s, 2, rng);
    EXPECT_EQ(measure_x(x1.state, 2, rng).outcome, x1.outcome);
  }
}

TEST(StateVector, GhzZOutcomesAlwaysAgree) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    auto a = measure_z(new_ghz3(), 0, rng);
    auto t = measure_z(a.state, 1, rng);
    auto b = measure_z(t.state, 2, rng);
    EXPECT_EQ(a.outcome, t.outcome);
    EXPECT_EQ(t.outcome, b.outcome);
  }
}

TEST(StateVector, ProjectorValidation) {
  const PureState s = new_ghz3();
  const std::array<Projector, 2> overlapping{BellProjector{0, 1, BellOutcome::PhiPlus}, XProjector{1, XOutcome::Plus}};
  EXPECT_THROW(probability_of(s, std::span<const Projector>(overlapping)), MalformedProjectorError);
  EXPECT_THROW(probability_of(s, Projector{ZProjector{3, ZOutcome::Zero}}), MalformedProjectorError);
  EXPECT_THROW(probability_of(s, Projector{BellProjector{2, 2, BellOutcome::PsiMinus}}), MalformedProjectorError);
}

TEST(StateVector, RejectsBadRegisters) {
  EXPECT_THROW(PureState(std::vector<std::string>{}), std::invalid_argument);
  EXPECT_THROW(PureState(std::vector<std::string>(9, "q")), std::invalid_argument);
  AmplitudeVector<double> v = AmplitudeVector<double>::Zero(4);
  v(0) = 2;
  EXPECT_THROW(PureState({"a", "b"}, v), std::invalid_argument);
  PureState s({"a"});
  EXPECT_THROW(s.apply_local(make_gate(GateName::H).matrix, 1), QubitIndexError);
  std::mt19937_64 rng(1);
  EXPECT_THROW(measure_bell(new_ghz3(), 1, 1, rng), QubitIndexError);
}

TEST(StateVector, AppendQubitTensorsOnTheRight) {
  const PureState s = append_qubit(new_ghz3(), x_eigenvector(XOutcome::Minus), "E");
  EXPECT_EQ(s.num_qubits(), 4);
  EXPECT_EQ(s.label(3), "E");
  const double r = 0.5;
  EXPECT_NEAR(s.amplitude(0).real(), r, 1e-15);
  EXPECT_NEAR(s.amplitude(1).real(), -r, 1e-15);
  EXPECT_NEAR(s.amplitude(14).real(), r, 1e-15);
  EXPECT_NEAR(s.amplitude(15).real(), -r, 1e-15);
}

TEST(StateVector, FloatScalarInstantiates) {
  auto s = new_ghz3<float>();
  s.apply_local(make_gate<float>(GateName::H).matrix, 0);
  EXPECT_NEAR(s.norm_squared(), 1.0f, 1e-6f);
}

}  // namespace
}  // namespace ghzqdc
