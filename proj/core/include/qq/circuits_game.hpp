#pragma once

#include <array>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qq/quantum.hpp"
#include "qq/rules.hpp"

namespace qq::circuits {

using quantum::Gate;
using quantum::GateKind;
using quantum::StateVector;
using quantum::UnitaryMatrix;

inline constexpr int kStartingFish = 9;
inline constexpr int kFishPerOutfitPiece = 3;

/// A gate at a grid position. Single-qubit gates carry a wire; CNOT spans
/// the whole column.
struct GridPlacement {
  Gate gate;
  int column = 0;
  std::optional<int> wire;

  friend bool operator==(const GridPlacement&, const GridPlacement&) = default;
};

struct CircuitLevel {
  int id = 1;
  StateVector input_state = StateVector::basis(2, 0);
  UnitaryMatrix target_matrix = UnitaryMatrix::identity(4);
  StateVector target_state = StateVector::basis(2, 0);
  std::vector<GateKind> allowed_gates;
  int max_columns = 1;
  bool penalty_enabled = false;
  std::optional<std::string> intro_popup;
  std::map<GateKind, std::string> tooltips;
  /// Author's reference solution, replayed by the content checks.
  std::vector<GridPlacement> solution;

  bool allows(GateKind kind) const;
};

struct Column {
  std::array<std::optional<GateKind>, 2> singles;
  std::optional<Gate> cnot;

  bool empty() const noexcept { return !cnot && !singles[0] && !singles[1]; }
  friend bool operator==(const Column&, const Column&) = default;
};

/// 4x4 matrix of one column; empty wires are identity, two single-qubit
/// gates compose as a tensor product.
UnitaryMatrix column_matrix(const Column& column);

struct CircuitGrid {
  std::vector<Column> columns;

  explicit CircuitGrid(int num_columns = 0) : columns(static_cast<std::size_t>(num_columns)) {}
  std::vector<GridPlacement> placements() const;
  friend bool operator==(const CircuitGrid&, const CircuitGrid&) = default;
};

struct FishState {
  int fish_remaining = kStartingFish;
  int points_remaining = kMaxLevelScore;
  int outfit_stage = 0;

  /// Derives points and outfit from the fish count.
  static FishState with_fish(int fish);
  friend bool operator==(const FishState&, const FishState&) = default;
};

struct Evaluation {
  UnitaryMatrix circuit_matrix;
  StateVector output_state;
  std::array<quantum::ColorClass, 16> colors;  // row-major
};

/// Left-to-right composition of the grid applied to input.
Evaluation evaluate_grid(const CircuitGrid& grid, const StateVector& input);

enum class Status { InProgress, Won, Exhausted };

std::string_view status_name(Status s) noexcept;

class CircuitSession {
 public:
  int level_id() const noexcept { return level_->id; }
  const CircuitLevel& level() const noexcept { return *level_; }
  const std::shared_ptr<const CircuitLevel>& level_ptr() const noexcept { return level_; }
  const CircuitGrid& grid() const noexcept { return grid_; }
  const FishState& fish() const noexcept { return fish_; }
  int removals() const noexcept { return removals_; }
  Status status() const noexcept { return status_; }

 private:
  explicit CircuitSession(std::shared_ptr<const CircuitLevel> level)
      : level_(std::move(level)), grid_(level_->max_columns) {}

  std::shared_ptr<const CircuitLevel> level_;
  CircuitGrid grid_;
  FishState fish_;
  int removals_ = 0;
  Status status_ = Status::InProgress;

  friend CircuitSession start_level(std::shared_ptr<const CircuitLevel> level);
  friend CircuitSession place_gate(const CircuitSession&, const Gate&, int, std::optional<int>);
  friend CircuitSession remove_gate(const CircuitSession&, int, std::optional<int>);
};

CircuitSession start_level(std::shared_ptr<const CircuitLevel> level);

/// Penalty-free. Throws RuleError for a disallowed gate, an occupied slot,
/// a column past max_columns, a missing wire, or a terminal session.
/// Winning placements set the status to Won.
CircuitSession place_gate(const CircuitSession& session, const Gate& gate, int column,
                          std::optional<int> wire = std::nullopt);

/// Clears a slot. A CNOT column is cleared whatever wire is given. On
/// penalty levels costs one fish and one point; the ninth lost fish ends
/// the attempt as Exhausted.
CircuitSession remove_gate(const CircuitSession& session, int column, std::optional<int> wire = std::nullopt);

Evaluation evaluate(const CircuitSession& session);

/// Entry-wise match of both the circuit matrix and the output state, within
/// the player tolerance. No global-phase freedom.
bool check_win(const CircuitSession& session);

/// The fish bowl's points_remaining once Won.
int level_score(const CircuitSession& session);

struct Violation {
  std::string message;
};

/// Structural checks that need no search: id range, penalty rule, target
/// consistency, and that the authored solution fits the grid and wins.
std::vector<Violation> validate_level(const CircuitLevel& level);

}  // namespace qq::circuits
