#include "qq/entanglement_game.hpp"

#include <algorithm>

namespace qq::entanglement {

std::string_view action_name(Action a) noexcept {
  switch (a) {
    case Action::Jump: return "Jump";
    case Action::Crawl: return "Crawl";
    case Action::Balance: return "Balance";
    case Action::Weave: return "Weave";
    case Action::Climb: return "Climb";
    case Action::Pause: return "Pause";
  }
  return "?";
}

std::optional<Action> parse_action(std::string_view name) noexcept {
  for (auto a : kAllActions)
    if (action_name(a) == name) return a;
  return std::nullopt;
}

std::string_view mode_name(Mode m) noexcept { return m == Mode::Correlated ? "correlated" : "anti_correlated"; }

std::optional<Mode> parse_mode(std::string_view name) noexcept {
  if (name == "correlated") return Mode::Correlated;
  if (name == "anti_correlated") return Mode::AntiCorrelated;
  return std::nullopt;
}

Action partner_action(Action action, Mode mode) noexcept {
  if (mode == Mode::Correlated) return action;
  switch (action) {
    case Action::Jump: return Action::Crawl;
    case Action::Crawl: return Action::Jump;
    case Action::Balance: return Action::Weave;
    case Action::Weave: return Action::Balance;
    case Action::Climb: return Action::Pause;
    case Action::Pause: return Action::Climb;
  }
  return action;
}

Mode expected_mode(int level_id) noexcept {
  return level_id >= kAntiCorrelatedFromLevel ? Mode::AntiCorrelated : Mode::Correlated;
}

std::vector<Violation> validate_level(const EntanglementLevel& level) {
  std::vector<Violation> out;
  if (level.id < 1 || level.id > kLevelsPerGame)
    out.push_back({std::nullopt, "level id " + std::to_string(level.id) + " outside 1..12"});
  if (level.course_a.empty()) out.push_back({std::nullopt, "course_a is empty"});
  if (level.course_a.size() != level.course_b.size())
    out.push_back({std::nullopt, "course lengths differ (" + std::to_string(level.course_a.size()) + " vs " +
                                     std::to_string(level.course_b.size()) + ")"});
  if (level.mode != expected_mode(level.id))
    out.push_back({std::nullopt, "level " + std::to_string(level.id) + " must be " +
                                     std::string(mode_name(expected_mode(level.id)))});
  if (!level.decoherence_enabled && level.wrong_move_limit < 0)
    out.push_back({std::nullopt, "wrong_move_limit must be non-negative"});
  const auto n = std::min(level.course_a.size(), level.course_b.size());
  for (std::size_t i = 0; i < n; ++i) {
    const auto a = level.course_a[i].required_action;
    const auto b = level.course_b[i].required_action;
    if (partner_action(a, level.mode) != b)
      out.push_back({i, "obstacle " + std::to_string(i) + ": pair (" + std::string(action_name(a)) + ", " +
                            std::string(action_name(b)) + ") cannot be cleared in " +
                            std::string(mode_name(level.mode)) + " mode"});
  }
  return out;
}

std::string_view status_name(Status s) noexcept {
  switch (s) {
    case Status::InProgress: return "InProgress";
    case Status::Won: return "Won";
    case Status::Failed: return "Failed";
  }
  return "?";
}

EntanglementSession start_level(std::shared_ptr<const EntanglementLevel> level) {
  if (!level) throw std::invalid_argument("null level");
  if (level->course_a.empty() || level->course_a.size() != level->course_b.size())
    throw std::invalid_argument("level courses must be non-empty and of equal length");
  return EntanglementSession(std::move(level));
}

EntanglementSession step(const EntanglementSession& session, Action player_action) {
  if (session.status_ != Status::InProgress)
    throw RuleError(RuleErrorCode::TerminalState,
                    "level already " + std::string(status_name(session.status_)));
  const auto& level = *session.level_;
  EntanglementSession next = session;
  const Action partner = partner_action(player_action, level.mode);
  const bool a_clears = player_action == level.course_a[session.position_].required_action;
  const bool b_clears = partner == level.course_b[session.position_].required_action;
  next.last_partner_ = partner;

  if (a_clears && b_clears) {
    next.last_outcome_ = StepOutcome::Synced;
    ++next.position_;
    ++next.synced_;
    next.decoherence_ = std::max(0, next.decoherence_ - kDecoherenceOnSynced);
    if (next.position_ == level.course_a.size()) next.status_ = Status::Won;
    return next;
  }

  next.last_outcome_ = StepOutcome::Wrong;
  ++next.wrong_;
  if (level.decoherence_enabled) {
    next.decoherence_ = std::min(kDecoherenceMax, next.decoherence_ + kDecoherenceOnWrong);
    if (next.decoherence_ >= kDecoherenceMax) next.status_ = Status::Failed;
  } else if (next.wrong_ > level.wrong_move_limit) {
    next.status_ = Status::Failed;
  }
  return next;
}

int level_score(const EntanglementSession& session) {
  if (session.status() != Status::Won) throw RuleError(RuleErrorCode::NotWon, "level not won yet");
  const int synced = session.synced_count();
  const int attempts = synced + session.wrong_count();
  // floor(10 s / n + 1/2) in integers
  const int rounded = (2 * kMaxLevelScore * synced + attempts) / (2 * attempts);
  return std::max(1, rounded);
}

}  // namespace qq::entanglement
