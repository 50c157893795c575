#include <gtest/gtest.h>

#include "paths.hpp"
#include "qq/content.hpp"
#include "qq/solver.hpp"

using namespace qq;
using quantum::Gate;
using quantum::GateKind;
using quantum::StateVector;

TEST(Solver, PhaseNormalizedKey) {
  const auto plus = quantum::apply_gate(StateVector::basis(1, 0), Gate::single(GateKind::H));
  EXPECT_EQ(solver::phase_normalized_key(plus), solver::phase_normalized_key(plus.scaled({0, 1})));
  EXPECT_EQ(solver::phase_normalized_key(plus), solver::phase_normalized_key(plus.scaled(-1)));
  EXPECT_NE(solver::phase_normalized_key(plus), solver::phase_normalized_key(StateVector::basis(1, 0)));
}

TEST(Solver, BlochShortest) {
  bloch::BlochLevel l;
  l.allowed_gates = {GateKind::H, GateKind::S};
  const auto sol = solver::solve_bloch(l);
  ASSERT_TRUE(sol);
  EXPECT_EQ(sol->size(), 4u);
  l.allowed_gates = {GateKind::Z, GateKind::S};
  EXPECT_FALSE(solver::solve_bloch(l).has_value());
  l.allowed_gates = {GateKind::H, GateKind::S};
  EXPECT_FALSE(solver::solve_bloch(l, 3).has_value());
}

TEST(Solver, CircuitFewestColumns) {
  circuits::CircuitLevel l;
  l.allowed_gates = {GateKind::CNOT};
  l.max_columns = 3;
  const std::vector<quantum::Placement> swap{{Gate::cnot(0, 1), {}}, {Gate::cnot(1, 0), {}}, {Gate::cnot(0, 1), {}}};
  l.target_matrix = quantum::compose_circuit(swap, 2);
  l.target_state = l.target_matrix.apply(l.input_state);
  const auto sol = solver::solve_circuit(l);
  ASSERT_TRUE(sol);
  EXPECT_EQ(solver::columns_used(*sol), 3);
  EXPECT_FALSE(solver::solve_circuit(l, 2).has_value());
}

TEST(Solver, ShippedLevelsSolve) {
  const auto loaded = content::load_content(testpaths::levels(), testpaths::quizzes());
  for (const auto& [id, l] : loaded.content.bloch) {
    const auto sol = solver::solve_bloch(*l);
    ASSERT_TRUE(sol) << "bloch " << id;
    EXPECT_EQ(static_cast<int>(sol->size()), l->min_solution_length) << "bloch " << id;
  }
  for (const auto& [id, l] : loaded.content.circuits) {
    const auto sol = solver::solve_circuit(*l);
    ASSERT_TRUE(sol) << "circuits " << id;
    EXPECT_LE(solver::columns_used(*sol), l->max_columns);
  }
}
