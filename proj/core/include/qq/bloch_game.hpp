#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qq/quantum.hpp"
#include "qq/rules.hpp"

namespace qq::bloch {

using quantum::GateKind;
using quantum::StateVector;

struct BlochLevel {
  int id = 1;
  StateVector start_state = StateVector::basis(1, 0);
  StateVector target_state = StateVector::basis(1, 1);
  std::vector<GateKind> allowed_gates;
  int min_solution_length = 0;
  std::optional<std::string> intro_popup;
  std::optional<std::string> hint;
  std::map<GateKind, std::string> tooltips;

  bool allows(GateKind kind) const;
};

enum class Status { InProgress, Won };

std::string_view status_name(Status s) noexcept;

class BlochSession {
 public:
  int level_id() const noexcept { return level_->id; }
  const BlochLevel& level() const noexcept { return *level_; }
  const std::shared_ptr<const BlochLevel>& level_ptr() const noexcept { return level_; }
  const StateVector& current_state() const noexcept { return current_; }
  const std::vector<GateKind>& moves() const noexcept { return moves_; }
  Status status() const noexcept { return status_; }

 private:
  BlochSession(std::shared_ptr<const BlochLevel> level, StateVector current)
      : level_(std::move(level)), current_(std::move(current)) {}

  std::shared_ptr<const BlochLevel> level_;
  StateVector current_;
  std::vector<GateKind> moves_;
  Status status_ = Status::InProgress;

  friend BlochSession start_level(std::shared_ptr<const BlochLevel> level);
  friend BlochSession apply_player_gate(const BlochSession& session, GateKind gate);
};

/// A session whose start already matches the target is immediately Won.
BlochSession start_level(std::shared_ptr<const BlochLevel> level);

/// Throws RuleError(GateNotAllowed) for gates outside the level roster and
/// RuleError(TerminalState) once the session is Won.
BlochSession apply_player_gate(const BlochSession& session, GateKind gate);

/// Same level, fresh state and empty move log.
inline BlochSession reset_level(const BlochSession& session) {
  return start_level(session.level_ptr());
}

/// max(1, 10 - excess moves over the level minimum), capped at 10.
int level_score(const BlochSession& session);

/// Rebuilds the state from the start state and the move log.
StateVector replay_moves(const BlochLevel& level, const std::vector<GateKind>& moves);

}  // namespace qq::bloch
