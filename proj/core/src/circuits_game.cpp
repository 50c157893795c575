#include "qq/circuits_game.hpp"

#include <algorithm>

namespace qq::circuits {
namespace {

void require_in_progress(const CircuitSession& s) {
  if (s.status() != Status::InProgress)
    throw RuleError(RuleErrorCode::TerminalState, "level already " + std::string(status_name(s.status())));
}

void require_column(const CircuitSession& s, int column) {
  if (column < 0 || column >= s.level().max_columns)
    throw RuleError(RuleErrorCode::ColumnOutOfRange, "column " + std::to_string(column) + " outside 0.." +
                                                         std::to_string(s.level().max_columns - 1));
}

int require_wire(std::optional<int> wire, std::string_view what) {
  if (!wire) throw RuleError(RuleErrorCode::InvalidMove, std::string(what) + " needs a wire");
  if (*wire != 0 && *wire != 1)
    throw RuleError(RuleErrorCode::InvalidMove, "wire " + std::to_string(*wire) + " out of range");
  return *wire;
}

}  // namespace

bool CircuitLevel::allows(GateKind kind) const {
  return std::find(allowed_gates.begin(), allowed_gates.end(), kind) != allowed_gates.end();
}

UnitaryMatrix column_matrix(const Column& column) {
  if (column.cnot) return quantum::gate_matrix(*column.cnot, 2);
  const auto wire_matrix = [](const std::optional<GateKind>& g) {
    return g ? quantum::gate_matrix(Gate::single(*g), 1) : UnitaryMatrix::identity(2);
  };
  return quantum::kron(wire_matrix(column.singles[0]), wire_matrix(column.singles[1]));
}

std::vector<GridPlacement> CircuitGrid::placements() const {
  std::vector<GridPlacement> out;
  for (std::size_t c = 0; c < columns.size(); ++c) {
    const auto& col = columns[c];
    if (col.cnot) out.push_back({*col.cnot, static_cast<int>(c), std::nullopt});
    for (int w = 0; w < 2; ++w)
      if (col.singles[static_cast<std::size_t>(w)])
        out.push_back({Gate::single(*col.singles[static_cast<std::size_t>(w)]), static_cast<int>(c), w});
  }
  return out;
}

FishState FishState::with_fish(int fish) {
  const int lost = kStartingFish - fish;
  return FishState{fish, kMaxLevelScore - lost, lost / kFishPerOutfitPiece};
}

Evaluation evaluate_grid(const CircuitGrid& grid, const StateVector& input) {
  if (input.num_qubits() != 2) throw quantum::QuantumError("circuit input must be a two-qubit state");
  auto total = UnitaryMatrix::identity(4);
  for (const auto& col : grid.columns)
    if (!col.empty()) total = column_matrix(col) * total;
  auto output = total.apply(input);
  std::array<quantum::ColorClass, 16> colors{};
  for (std::size_t i = 0; i < 16; ++i) colors[i] = quantum::classify_entry(total.entries()[i]);
  return Evaluation{std::move(total), std::move(output), colors};
}

std::string_view status_name(Status s) noexcept {
  switch (s) {
    case Status::InProgress: return "InProgress";
    case Status::Won: return "Won";
    case Status::Exhausted: return "Exhausted";
  }
  return "?";
}

CircuitSession start_level(std::shared_ptr<const CircuitLevel> level) {
  if (!level) throw std::invalid_argument("null level");
  if (level->max_columns < 1) throw std::invalid_argument("level needs at least one column");
  CircuitSession session(std::move(level));
  if (check_win(session)) session.status_ = Status::Won;
  return session;
}

CircuitSession place_gate(const CircuitSession& session, const Gate& gate, int column, std::optional<int> wire) {
  require_in_progress(session);
  if (!session.level().allows(gate.kind))
    throw RuleError(RuleErrorCode::GateNotAllowed,
                    "gate " + std::string(quantum::gate_name(gate.kind)) + " is not allowed on this level");
  require_column(session, column);
  CircuitSession next = session;
  auto& col = next.grid_.columns[static_cast<std::size_t>(column)];
  if (gate.kind == GateKind::CNOT) {
    if (wire) throw RuleError(RuleErrorCode::InvalidMove, "CNOT spans both wires and takes no wire");
    if (gate.control == gate.target || gate.control < 0 || gate.control > 1 || gate.target < 0 || gate.target > 1)
      throw RuleError(RuleErrorCode::InvalidMove, "CNOT needs distinct control and target wires");
    if (!col.empty())
      throw RuleError(RuleErrorCode::SlotOccupied, "column " + std::to_string(column) + " is not empty");
    col.cnot = gate;
  } else {
    const int w = require_wire(wire, quantum::gate_name(gate.kind));
    auto& slot = col.singles[static_cast<std::size_t>(w)];
    if (col.cnot || slot)
      throw RuleError(RuleErrorCode::SlotOccupied,
                      "slot (" + std::to_string(column) + ", " + std::to_string(w) + ") is occupied");
    slot = gate.kind;
  }
  if (check_win(next)) next.status_ = Status::Won;
  return next;
}

CircuitSession remove_gate(const CircuitSession& session, int column, std::optional<int> wire) {
  require_in_progress(session);
  require_column(session, column);
  CircuitSession next = session;
  auto& col = next.grid_.columns[static_cast<std::size_t>(column)];
  if (col.cnot) {
    col.cnot.reset();
  } else {
    const int w = require_wire(wire, "removal");
    auto& slot = col.singles[static_cast<std::size_t>(w)];
    if (!slot)
      throw RuleError(RuleErrorCode::SlotEmpty,
                      "slot (" + std::to_string(column) + ", " + std::to_string(w) + ") is empty");
    slot.reset();
  }
  ++next.removals_;
  if (next.level().penalty_enabled) {
    next.fish_ = FishState::with_fish(next.fish_.fish_remaining - 1);
    if (next.fish_.fish_remaining == 0) {
      next.status_ = Status::Exhausted;
      return next;
    }
  }
  if (check_win(next)) next.status_ = Status::Won;
  return next;
}

Evaluation evaluate(const CircuitSession& session) {
  return evaluate_grid(session.grid(), session.level().input_state);
}

bool check_win(const CircuitSession& session) {
  const auto eval = evaluate(session);
  const auto& level = session.level();
  return quantum::max_entry_diff(eval.circuit_matrix, level.target_matrix) <= quantum::kPlayerTolerance &&
         quantum::max_entry_diff(eval.output_state, level.target_state) <= quantum::kPlayerTolerance;
}

int level_score(const CircuitSession& session) {
  if (session.status() != Status::Won) throw RuleError(RuleErrorCode::NotWon, "level not won yet");
  return std::max(1, session.fish().points_remaining);
}

std::vector<Violation> validate_level(const CircuitLevel& level) {
  std::vector<Violation> out;
  if (level.id < 1 || level.id > kLevelsPerGame)
    out.push_back({"level id " + std::to_string(level.id) + " outside 1..12"});
  if (level.penalty_enabled != (level.id >= 2))
    out.push_back({"penalty_enabled must be " + std::string(level.id >= 2 ? "true" : "false") + " on level " +
                   std::to_string(level.id)});
  if (level.max_columns < 1) {
    out.push_back({"max_columns must be at least 1"});
    return out;
  }
  if (level.allowed_gates.empty()) out.push_back({"allowed_gates is empty"});
  if (level.input_state.num_qubits() != 2 || level.target_state.num_qubits() != 2 || level.target_matrix.dim() != 4) {
    out.push_back({"circuit levels need two-qubit states and a 4x4 target matrix"});
    return out;
  }
  const auto expected = level.target_matrix.apply(level.input_state);
  if (quantum::max_entry_diff(expected, level.target_state) > quantum::kInternalTolerance)
    out.push_back({"target_state differs from target_matrix * input_state"});

  auto session = start_level(std::make_shared<const CircuitLevel>(level));
  if (session.status() == Status::Won) out.push_back({"empty grid already matches the target"});
  if (level.solution.empty()) {
    out.push_back({"no authored solution"});
    return out;
  }
  try {
    for (const auto& p : level.solution) session = place_gate(session, p.gate, p.column, p.wire);
    if (session.status() != Status::Won) out.push_back({"authored solution does not match the target"});
  } catch (const RuleError& e) {
    out.push_back({std::string("authored solution rejected: ") + e.what()});
  }
  return out;
}

}  // namespace qq::circuits
