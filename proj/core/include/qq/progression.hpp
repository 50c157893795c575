#pragma once

#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "qq/rules.hpp"

namespace qq::progression {

enum class GameId { Bloch, Entanglement, Circuits };

inline constexpr std::array<GameId, 3> kAllGames{GameId::Bloch, GameId::Entanglement, GameId::Circuits};

std::string_view game_name(GameId g) noexcept;
std::optional<GameId> parse_game(std::string_view name) noexcept;

inline constexpr int kCircuitsUnlockBlochLevels = 6;
inline constexpr std::size_t kMaxNicknameLength = 20;

struct AwardLedgerEntry {
  GameId game = GameId::Bloch;
  int level_id = 1;
  int raw_score = 0;
  int awarded = 0;
  bool replay = false;
  std::string timestamp;   // ISO-8601 UTC
  std::string session_id;  // empty when not awarded through a service session

  friend bool operator==(const AwardLedgerEntry&, const AwardLedgerEntry&) = default;
};

struct QuizRecord {
  int attempts = 0;
  int high_score = 0;

  friend bool operator==(const QuizRecord&, const QuizRecord&) = default;
};

struct PlayerProfile {
  std::string id;
  std::string nickname;
  int total_points = 0;
  std::map<GameId, std::set<int>> completed;
  std::set<GameId> jester_outfits;
  std::map<std::string, QuizRecord> quiz_records;
  std::vector<AwardLedgerEntry> ledger;

  std::size_t completed_count(GameId g) const;
  bool has_completed(GameId g, int level_id) const;

  friend bool operator==(const PlayerProfile&, const PlayerProfile&) = default;
};

/// Error message, or nullopt for a valid nickname (1-20 code points, not
/// blank, no control characters, valid UTF-8).
std::optional<std::string> nickname_error(std::string_view nickname);

/// Throws std::invalid_argument on a bad nickname.
PlayerProfile make_profile(std::string id, std::string nickname);

struct AwardResult {
  PlayerProfile profile;
  int awarded = 0;
  bool replay = false;
};

/// First completion awards raw_score; every replay awards floor(raw_score / 2).
/// Appends to the ledger and refreshes rewards.
AwardResult award_points(const PlayerProfile& profile, GameId game, int level_id, int raw_score,
                         std::string timestamp, std::string session_id = {});

bool is_circuits_unlocked(const PlayerProfile& profile);

/// Grants the jester outfit for every game with all 12 levels completed.
PlayerProfile check_rewards(const PlayerProfile& profile);

int recompute_total(const PlayerProfile& profile);

/// Consistency problems between the ledger and the stored fields; empty
/// when the profile is sound.
std::vector<std::string> verify_profile(const PlayerProfile& profile);

}  // namespace qq::progression
