#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qq/rules.hpp"

namespace qq::entanglement {

enum class Action { Jump, Crawl, Balance, Weave, Climb, Pause };

inline constexpr std::array<Action, 6> kAllActions{Action::Jump,  Action::Crawl, Action::Balance,
                                                   Action::Weave, Action::Climb, Action::Pause};

std::string_view action_name(Action a) noexcept;
std::optional<Action> parse_action(std::string_view name) noexcept;

enum class Mode { Correlated, AntiCorrelated };

std::string_view mode_name(Mode m) noexcept;
std::optional<Mode> parse_mode(std::string_view name) noexcept;

/// Correlated: the partner copies the action. Anti-correlated: the partner
/// does the opposite (Jump/Crawl, Balance/Weave, Climb/Pause).
Action partner_action(Action action, Mode mode) noexcept;

struct Obstacle {
  Action required_action = Action::Jump;
  std::string label;
};

using Course = std::vector<Obstacle>;

inline constexpr int kDecoherenceMax = 100;
inline constexpr int kDecoherenceOnWrong = 20;
inline constexpr int kDecoherenceOnSynced = 10;
inline constexpr int kDefaultWrongMoveLimit = 5;
inline constexpr int kDecoherenceFromLevel = 4;
inline constexpr int kAntiCorrelatedFromLevel = 7;

struct EntanglementLevel {
  int id = 1;
  Course course_a;
  Course course_b;
  Mode mode = Mode::Correlated;
  bool decoherence_enabled = false;
  int wrong_move_limit = kDefaultWrongMoveLimit;  // only used without decoherence
  std::optional<std::string> intro_popup;
};

/// Mode the level index dictates: 1-6 correlated, 7-12 anti-correlated.
Mode expected_mode(int level_id) noexcept;

struct Violation {
  std::optional<std::size_t> index;  // obstacle index, when the problem is local
  std::string message;
};

/// Empty iff the courses have equal non-zero length, the mode follows the
/// level index, and every obstacle pair is clearable by one action.
std::vector<Violation> validate_level(const EntanglementLevel& level);

enum class Status { InProgress, Won, Failed };

std::string_view status_name(Status s) noexcept;

/// Result of the last step, for display.
enum class StepOutcome { None, Synced, Wrong };

class EntanglementSession {
 public:
  int level_id() const noexcept { return level_->id; }
  const EntanglementLevel& level() const noexcept { return *level_; }
  const std::shared_ptr<const EntanglementLevel>& level_ptr() const noexcept { return level_; }
  std::size_t position() const noexcept { return position_; }
  int synced_count() const noexcept { return synced_; }
  int wrong_count() const noexcept { return wrong_; }
  int decoherence() const noexcept { return decoherence_; }
  Status status() const noexcept { return status_; }
  StepOutcome last_outcome() const noexcept { return last_outcome_; }
  /// What cat B did on the last step (cat A did the player's action).
  std::optional<Action> last_partner_action() const noexcept { return last_partner_; }

 private:
  explicit EntanglementSession(std::shared_ptr<const EntanglementLevel> level) : level_(std::move(level)) {}

  std::shared_ptr<const EntanglementLevel> level_;
  std::size_t position_ = 0;
  int synced_ = 0;
  int wrong_ = 0;
  int decoherence_ = 0;
  Status status_ = Status::InProgress;
  StepOutcome last_outcome_ = StepOutcome::None;
  std::optional<Action> last_partner_;

  friend EntanglementSession start_level(std::shared_ptr<const EntanglementLevel> level);
  friend EntanglementSession step(const EntanglementSession& session, Action player_action);
};

EntanglementSession start_level(std::shared_ptr<const EntanglementLevel> level);

/// One obstacle attempt by both cats. The player only ever drives cat A.
/// Throws RuleError(TerminalState) after Won or Failed.
EntanglementSession step(const EntanglementSession& session, Action player_action);

/// round_half_up(10 * synced / (synced + wrong)), at least 1.
int level_score(const EntanglementSession& session);

}  // namespace qq::entanglement
