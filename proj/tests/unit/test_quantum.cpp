#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracle.hpp"
#include "qq/quantum.hpp"

using namespace qq::quantum;

namespace {

oracle::Vec to_vec(const StateVector& s) { return {s.amplitudes().begin(), s.amplitudes().end()}; }

const double kR = 1.0 / std::sqrt(2.0);

}  // namespace

TEST(StateVector, RejectsBadInput) {
  EXPECT_THROW(StateVector({1, 0, 0}), QuantumError);
  EXPECT_THROW(StateVector({1, 1}), QuantumError);
  EXPECT_THROW(StateVector({Complex(NAN, 0), 0}), QuantumError);
  EXPECT_THROW(StateVector({}), QuantumError);
  EXPECT_NO_THROW(StateVector({kR, Complex(0, kR)}));
}

TEST(UnitaryMatrix, RejectsNonUnitary) {
  EXPECT_THROW(UnitaryMatrix(2, {1, 1, 0, 1}), QuantumError);
  EXPECT_THROW(UnitaryMatrix(3, std::vector<Complex>(9, 0)), QuantumError);
  EXPECT_THROW(UnitaryMatrix(2, {1, 0, 0}), QuantumError);
}

TEST(Gates, MatchLiteralTables) {
  for (auto k : kSingleQubitGates) {
    const auto m = gate_matrix(Gate::single(k), 1);
    EXPECT_LT(oracle::max_diff(oracle::literal(k), m), 1e-15) << gate_name(k);
    EXPECT_LT(m.unitarity_deviation(), 1e-12);
  }
  EXPECT_LT(oracle::max_diff(oracle::cnot_literal(0, 1), gate_matrix(Gate::cnot(0, 1), 2)), 0.0 + 1e-15);
  EXPECT_LT(oracle::max_diff(oracle::cnot_literal(1, 0), gate_matrix(Gate::cnot(1, 0), 2)), 0.0 + 1e-15);
  EXPECT_THROW(gate_matrix(Gate::cnot(0, 1), 1), QuantumError);
  EXPECT_THROW(gate_matrix(Gate::cnot(1, 1), 2), QuantumError);
}

TEST(Gates, LiftUsesLeftSymbolAsWireZero) {
  // X on wire 0 sends |00> to |10> (index 2).
  const auto out = apply_gate(StateVector::basis(2, 0), Gate::single(GateKind::X), 0);
  EXPECT_NEAR(std::abs(out[2]), 1.0, 1e-12);
  const auto out1 = apply_gate(StateVector::basis(2, 0), Gate::single(GateKind::X), 1);
  EXPECT_NEAR(std::abs(out1[1]), 1.0, 1e-12);
  for (auto k : kSingleQubitGates)
    for (int w = 0; w < 2; ++w)
      EXPECT_LT(oracle::max_diff(oracle::embed(oracle::literal(k), w), lift_single_qubit_gate(Gate::single(k), w)),
                1e-15);
}

TEST(Gates, NameRoundTrip) {
  for (auto k : {GateKind::X, GateKind::Y, GateKind::Z, GateKind::H, GateKind::S, GateKind::CNOT})
    EXPECT_EQ(parse_gate_kind(gate_name(k)), k);
  EXPECT_FALSE(parse_gate_kind("h").has_value());
  EXPECT_FALSE(parse_gate_kind("T").has_value());
}

TEST(ApplyGate, RejectsBadWires) {
  const auto one = StateVector::basis(1, 0);
  const auto two = StateVector::basis(2, 0);
  EXPECT_THROW(apply_gate(one, Gate::cnot(0, 1)), QuantumError);
  EXPECT_THROW(apply_gate(one, Gate::single(GateKind::X), 1), QuantumError);
  EXPECT_THROW(apply_gate(two, Gate::single(GateKind::X)), QuantumError);
  EXPECT_THROW(apply_gate(two, Gate::single(GateKind::X), 2), QuantumError);
  EXPECT_THROW(apply_gate(two, Gate::cnot(0, 1), 0), QuantumError);
}

TEST(ApplyGate, MatchesMatrixRouteOnRandomStates) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 2;
    const StateVector psi(oracle::random_state(rng, n == 1 ? 2 : 4));
    auto circuit = oracle::random_circuit(rng, n, 1);
    if (circuit.empty()) continue;
    const auto& p = circuit.front();
    const auto expected = oracle::mat_vec(oracle::placement_table(p, n), to_vec(psi));
    EXPECT_LT(oracle::max_diff(expected, apply_gate(psi, p.gate, p.wire)), 1e-12);
  }
}

TEST(ComposeCircuit, EmptyIsIdentity) {
  EXPECT_LT(max_entry_diff(compose_circuit({}, 1), UnitaryMatrix::identity(2)), 1e-15);
  EXPECT_LT(max_entry_diff(compose_circuit({}, 2), UnitaryMatrix::identity(4)), 1e-15);
}

TEST(ComposeCircuit, FirstPlacementIsRightmostFactor) {
  // X then H on one qubit: H X, not X H.
  const std::vector<Placement> c{{Gate::single(GateKind::X), {}}, {Gate::single(GateKind::H), {}}};
  const auto expected = oracle::mul(oracle::literal(GateKind::H), oracle::literal(GateKind::X));
  EXPECT_LT(oracle::max_diff(expected, compose_circuit(c, 1)), 1e-15);
}

TEST(ComposeCircuit, ReportsOffendingIndex) {
  const std::vector<Placement> c{{Gate::single(GateKind::H), 0}, {Gate::single(GateKind::X), 5}};
  try {
    compose_circuit(c, 2);
    FAIL();
  } catch (const CircuitError& e) {
    EXPECT_EQ(e.index(), 1u);
  }
}

TEST(ComposeCircuit, BellColumn) {
  const std::vector<Placement> c{{Gate::single(GateKind::H), 0}, {Gate::cnot(0, 1), {}}};
  const auto m = compose_circuit(c, 2);
  const auto ref = oracle::fold_apply(c, 2);
  EXPECT_LT(oracle::max_diff(ref, m), 1e-12);
  // frozen from the fold-apply oracle
  EXPECT_NEAR(m(0, 0).real(), 0.70710678118654752, 1e-12);
  EXPECT_NEAR(std::abs(m(1, 0)), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(m(2, 0)), 0.0, 1e-12);
  EXPECT_NEAR(m(3, 0).real(), 0.70710678118654752, 1e-12);
}

TEST(ComposeCircuit, AgreesWithFoldApplyOnRandomCircuits) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 2;
    const auto c = oracle::random_circuit(rng, n);
    const auto m = compose_circuit(c, n);
    EXPECT_LT(oracle::max_diff(oracle::fold_apply(c, n), m), 1e-9);
    EXPECT_LT(m.unitarity_deviation(), 1e-9);
  }
}

TEST(ComposeCircuit, CnotTripleIsSwap) {
  const std::vector<Placement> c{{Gate::cnot(0, 1), {}}, {Gate::cnot(1, 0), {}}, {Gate::cnot(0, 1), {}}};
  const auto out = compose_circuit(c, 2).apply(StateVector::basis(2, 2));
  EXPECT_NEAR(std::abs(out[1]), 1.0, 1e-12);
}

TEST(Bloch, SixCardinalStates) {
  const auto zero = StateVector::basis(1, 0);
  const auto one = StateVector::basis(1, 1);
  const auto H = Gate::single(GateKind::H);
  const auto S = Gate::single(GateKind::S);
  const std::vector<StateVector> states{zero,
                                        one,
                                        apply_gate(zero, H),
                                        apply_gate(one, H),
                                        apply_gate(apply_gate(zero, H), S),
                                        apply_gate(apply_gate(one, H), S)};
  const std::vector<std::array<double, 3>> expected{{0, 0, 1}, {0, 0, -1}, {1, 0, 0},
                                                    {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}};
  for (std::size_t k = 0; k < states.size(); ++k) {
    const auto p = bloch_coordinates(states[k]);
    const auto o = oracle::pauli_expectations(to_vec(states[k]));
    EXPECT_NEAR(p.x, o.x, 1e-12);
    EXPECT_NEAR(p.y, o.y, 1e-12);
    EXPECT_NEAR(p.z, o.z, 1e-12);
    EXPECT_NEAR(p.x, expected[k][0], 1e-9);
    EXPECT_NEAR(p.y, expected[k][1], 1e-9);
    EXPECT_NEAR(p.z, expected[k][2], 1e-9);
  }
}

TEST(Bloch, RandomStatesOnUnitSphereAndPhaseInvariant) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> angle(0, 2 * M_PI);
  for (int k = 0; k < 500; ++k) {
    const StateVector s(oracle::random_state(rng, 2));
    const auto p = bloch_coordinates(s);
    EXPECT_NEAR(p.x * p.x + p.y * p.y + p.z * p.z, 1.0, 1e-9);
    const auto q = bloch_coordinates(s.scaled(std::polar(1.0, angle(rng))));
    EXPECT_NEAR(p.x, q.x, 1e-12);
    EXPECT_NEAR(p.y, q.y, 1e-12);
    EXPECT_NEAR(p.z, q.z, 1e-12);
  }
  EXPECT_THROW(bloch_coordinates(StateVector::basis(2, 0)), QuantumError);
}

TEST(Measurement, ProbabilitiesSumToOne) {
  std::mt19937_64 rng(9);
  for (int k = 0; k < 100; ++k) {
    const StateVector s(oracle::random_state(rng, 4));
    double total = 0;
    for (double p : measurement_probabilities(s)) total += p;
    EXPECT_NEAR(total, 1.0, 1e-12);
  }
  const auto plus = measurement_probabilities(apply_gate(StateVector::basis(1, 0), Gate::single(GateKind::H)));
  EXPECT_NEAR(plus[0], 0.5, 1e-12);
}

TEST(GlobalPhase, Comparator) {
  const auto zero = StateVector::basis(1, 0);
  EXPECT_TRUE(equal_up_to_global_phase(zero, zero.scaled({0, 1}), 1e-9));
  EXPECT_TRUE(equal_up_to_global_phase(zero, zero.scaled(-1), 1e-9));
  EXPECT_FALSE(equal_up_to_global_phase(zero, StateVector::basis(1, 1), 1e-6));
  const auto plus = apply_gate(zero, Gate::single(GateKind::H));
  const auto minus = apply_gate(StateVector::basis(1, 1), Gate::single(GateKind::H));
  EXPECT_FALSE(equal_up_to_global_phase(plus, minus, 1e-6));
  std::mt19937_64 rng(3);
  for (int k = 0; k < 100; ++k) {
    const StateVector s(oracle::random_state(rng, 4));
    EXPECT_TRUE(equal_up_to_global_phase(s, s.scaled(std::polar(1.0, 0.1 * k)), 1e-9));
  }
}

TEST(ColorClass, FourClassesAndZero) {
  EXPECT_EQ(classify_entry({0.5, 0}).primary, ColorTag::Pink);
  EXPECT_EQ(classify_entry({-0.5, 0}).primary, ColorTag::Yellow);
  EXPECT_EQ(classify_entry({0, 0.5}).primary, ColorTag::Blue);
  EXPECT_EQ(classify_entry({0, -0.5}).primary, ColorTag::Orange);
  EXPECT_EQ(classify_entry({1e-12, -1e-12}).primary, ColorTag::Zero);
  const auto mixed = classify_entry({0.5, -0.5});
  EXPECT_EQ(mixed.primary, ColorTag::Pink);
  EXPECT_EQ(mixed.secondary, ColorTag::Orange);
  EXPECT_FALSE(classify_entry({0.5, 0}).secondary.has_value());
}

TEST(ColorClass, SGateIntroducesBlue) {
  const auto m = lift_single_qubit_gate(Gate::single(GateKind::S), 0);
  int blue = 0;
  for (const auto& z : m.entries()) blue += classify_entry(z).primary == ColorTag::Blue;
  EXPECT_EQ(blue, 2);
}
