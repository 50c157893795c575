#pragma once

#include <stdexcept>
#include <string>

namespace qq {

enum class RuleErrorCode {
  GateNotAllowed,
  TerminalState,  // move after Won / Failed / Exhausted
  SlotOccupied,
  SlotEmpty,
  ColumnOutOfRange,
  InvalidMove,
  NotWon,  // score requested before the level was won
};

/// A move the game rules refuse. The session it was attempted on is unchanged.
class RuleError : public std::runtime_error {
 public:
  RuleError(RuleErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  RuleErrorCode code() const noexcept { return code_; }

 private:
  RuleErrorCode code_;
};

inline constexpr int kLevelsPerGame = 12;
inline constexpr int kMaxLevelScore = 10;

}  // namespace qq
