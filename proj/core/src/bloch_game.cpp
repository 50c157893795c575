#include "qq/bloch_game.hpp"

#include <algorithm>

namespace qq::bloch {

bool BlochLevel::allows(GateKind kind) const {
  return std::find(allowed_gates.begin(), allowed_gates.end(), kind) != allowed_gates.end();
}

std::string_view status_name(Status s) noexcept { return s == Status::Won ? "Won" : "InProgress"; }

BlochSession start_level(std::shared_ptr<const BlochLevel> level) {
  if (!level) throw std::invalid_argument("null level");
  BlochSession session(level, level->start_state);
  if (quantum::equal_up_to_global_phase(session.current_, level->target_state, quantum::kPlayerTolerance))
    session.status_ = Status::Won;
  return session;
}

BlochSession apply_player_gate(const BlochSession& session, GateKind gate) {
  if (session.status_ == Status::Won) throw RuleError(RuleErrorCode::TerminalState, "level already won");
  if (gate == GateKind::CNOT || !session.level_->allows(gate))
    throw RuleError(RuleErrorCode::GateNotAllowed,
                    "gate " + std::string(quantum::gate_name(gate)) + " is not allowed on this level");
  BlochSession next = session;
  next.current_ = quantum::apply_gate(session.current_, quantum::Gate::single(gate));
  next.moves_.push_back(gate);
  if (quantum::equal_up_to_global_phase(next.current_, next.level_->target_state, quantum::kPlayerTolerance))
    next.status_ = Status::Won;
  return next;
}

int level_score(const BlochSession& session) {
  if (session.status() != Status::Won) throw RuleError(RuleErrorCode::NotWon, "level not won yet");
  const int excess = static_cast<int>(session.moves().size()) - session.level().min_solution_length;
  return std::clamp(kMaxLevelScore - excess, 1, kMaxLevelScore);
}

StateVector replay_moves(const BlochLevel& level, const std::vector<GateKind>& moves) {
  StateVector s = level.start_state;
  for (auto g : moves) s = quantum::apply_gate(s, quantum::Gate::single(g));
  return s;
}

}  // namespace qq::bloch
