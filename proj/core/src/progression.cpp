#include "qq/progression.hpp"

#include <numeric>
#include <stdexcept>

namespace qq::progression {
namespace {

// Code points of valid UTF-8, nullopt otherwise. Rejects C0/C1 controls.
std::optional<std::vector<char32_t>> decode_utf8(std::string_view s) {
  std::vector<char32_t> out;
  for (std::size_t i = 0; i < s.size();) {
    const auto c = static_cast<unsigned char>(s[i]);
    int len = 0;
    char32_t cp = 0;
    if (c < 0x80) {
      len = 1;
      cp = c;
    } else if ((c & 0xE0) == 0xC0) {
      len = 2;
      cp = c & 0x1F;
    } else if ((c & 0xF0) == 0xE0) {
      len = 3;
      cp = c & 0x0F;
    } else if ((c & 0xF8) == 0xF0) {
      len = 4;
      cp = c & 0x07;
    } else {
      return std::nullopt;
    }
    if (i + static_cast<std::size_t>(len) > s.size()) return std::nullopt;
    for (int k = 1; k < len; ++k) {
      const auto cc = static_cast<unsigned char>(s[i + static_cast<std::size_t>(k)]);
      if ((cc & 0xC0) != 0x80) return std::nullopt;
      cp = (cp << 6) | (cc & 0x3F);
    }
    out.push_back(cp);
    i += static_cast<std::size_t>(len);
  }
  return out;
}

bool is_space(char32_t cp) { return cp == U' ' || cp == 0xA0 || cp == 0x3000 || (cp >= 0x2000 && cp <= 0x200B); }

}  // namespace

std::string_view game_name(GameId g) noexcept {
  switch (g) {
    case GameId::Bloch: return "bloch";
    case GameId::Entanglement: return "entanglement";
    case GameId::Circuits: return "circuits";
  }
  return "?";
}

std::optional<GameId> parse_game(std::string_view name) noexcept {
  for (auto g : kAllGames)
    if (game_name(g) == name) return g;
  return std::nullopt;
}

std::size_t PlayerProfile::completed_count(GameId g) const {
  const auto it = completed.find(g);
  return it == completed.end() ? 0 : it->second.size();
}

bool PlayerProfile::has_completed(GameId g, int level_id) const {
  const auto it = completed.find(g);
  return it != completed.end() && it->second.contains(level_id);
}

std::optional<std::string> nickname_error(std::string_view nickname) {
  const auto cps = decode_utf8(nickname);
  if (!cps) return "nickname is not valid UTF-8";
  if (cps->empty()) return "nickname is empty";
  if (cps->size() > kMaxNicknameLength) return "nickname is longer than 20 characters";
  bool visible = false;
  for (auto cp : *cps) {
    if (cp < 0x20 || (cp >= 0x7F && cp < 0xA0)) return "nickname contains control characters";
    if (!is_space(cp)) visible = true;
  }
  if (!visible) return "nickname is blank";
  return std::nullopt;
}

PlayerProfile make_profile(std::string id, std::string nickname) {
  if (auto err = nickname_error(nickname)) throw std::invalid_argument(*err);
  PlayerProfile p;
  p.id = std::move(id);
  p.nickname = std::move(nickname);
  return p;
}

AwardResult award_points(const PlayerProfile& profile, GameId game, int level_id, int raw_score,
                         std::string timestamp, std::string session_id) {
  if (raw_score < 0 || raw_score > kMaxLevelScore)
    throw std::invalid_argument("raw score " + std::to_string(raw_score) + " outside 0..10");
  if (level_id < 1 || level_id > kLevelsPerGame)
    throw std::invalid_argument("level " + std::to_string(level_id) + " outside 1..12");
  AwardResult result{profile, 0, profile.has_completed(game, level_id)};
  result.awarded = result.replay ? raw_score / 2 : raw_score;
  auto& p = result.profile;
  p.completed[game].insert(level_id);
  p.ledger.push_back({game, level_id, raw_score, result.awarded, result.replay, std::move(timestamp),
                      std::move(session_id)});
  p.total_points += result.awarded;
  p = check_rewards(p);
  return result;
}

bool is_circuits_unlocked(const PlayerProfile& profile) {
  return profile.completed_count(GameId::Bloch) >= static_cast<std::size_t>(kCircuitsUnlockBlochLevels);
}

PlayerProfile check_rewards(const PlayerProfile& profile) {
  PlayerProfile p = profile;
  for (auto g : kAllGames)
    if (p.completed_count(g) >= static_cast<std::size_t>(kLevelsPerGame)) p.jester_outfits.insert(g);
  return p;
}

int recompute_total(const PlayerProfile& profile) {
  return std::accumulate(profile.ledger.begin(), profile.ledger.end(), 0,
                         [](int acc, const AwardLedgerEntry& e) { return acc + e.awarded; });
}

std::vector<std::string> verify_profile(const PlayerProfile& profile) {
  std::vector<std::string> problems;
  if (auto err = nickname_error(profile.nickname)) problems.push_back(*err);
  if (recompute_total(profile) != profile.total_points)
    problems.push_back("total_points " + std::to_string(profile.total_points) + " != ledger sum " +
                       std::to_string(recompute_total(profile)));
  std::map<GameId, std::set<int>> seen;
  for (std::size_t i = 0; i < profile.ledger.size(); ++i) {
    const auto& e = profile.ledger[i];
    const bool replay = seen[e.game].contains(e.level_id);
    if (replay != e.replay) problems.push_back("ledger entry " + std::to_string(i) + " has a wrong replay flag");
    const int expected = e.replay ? e.raw_score / 2 : e.raw_score;
    if (e.awarded != expected) problems.push_back("ledger entry " + std::to_string(i) + " awarded the wrong amount");
    seen[e.game].insert(e.level_id);
  }
  for (auto g : kAllGames) {
    const auto it = profile.completed.find(g);
    const std::set<int> stored = it == profile.completed.end() ? std::set<int>{} : it->second;
    if (stored != seen[g])
      problems.push_back("completed levels of " + std::string(game_name(g)) + " disagree with the ledger");
    for (int id : stored)
      if (id < 1 || id > kLevelsPerGame) problems.push_back("completed level id out of range");
  }
  if (check_rewards(profile).jester_outfits != profile.jester_outfits)
    problems.push_back("rewards are out of date");
  for (auto g : profile.jester_outfits)
    if (profile.completed_count(g) < static_cast<std::size_t>(kLevelsPerGame))
      problems.push_back("jester outfit for " + std::string(game_name(g)) + " was never earned");
  for (const auto& [quiz, rec] : profile.quiz_records)
    if (rec.high_score < 0 || rec.high_score > kMaxLevelScore || rec.attempts < 0 ||
        (rec.attempts == 0 && rec.high_score != 0))
      problems.push_back("quiz record " + quiz + " is out of range");
  return problems;
}

}  // namespace qq::progression
