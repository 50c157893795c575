#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <tuple>
#include <variant>

#include "qq/codec.hpp"
#include "qq/content.hpp"
#include "qq/profile_store.hpp"

namespace qq::service {

struct Request {
  std::string method;
  std::string path;
  std::string authorization;  // raw Authorization header value
  std::string body;
};

struct Response {
  int status = 200;
  codec::json body;
};

struct Config {
  std::filesystem::path data_dir = "data";
  bool shuffle_options = false;
};

/// ISO-8601 UTC timestamp source, injectable for tests.
using Clock = std::function<std::string()>;
std::string utc_now();

/// All game rules run here; the HTTP layer only moves bytes.
///
/// Requests for different profiles proceed in parallel; requests for one
/// profile are serialized on that profile's lock.
class Service {
 public:
  Service(Config config, content::Content content, Clock clock = utc_now);

  Response handle(const Request& request);

  const content::Content& content() const noexcept { return content_; }
  ProfileStore& store() noexcept { return store_; }

 private:
  using GameSession = std::variant<bloch::BlochSession, entanglement::EntanglementSession, circuits::CircuitSession>;

  struct ActiveSession {
    std::string id;
    GameSession session;
    bool awarded = false;
    int raw_score = 0;
    int awarded_points = 0;
    bool replay = false;
  };

  using SessionKey = std::tuple<progression::GameId, int>;

  struct ProfileSlot {
    std::mutex mutex;
    std::map<SessionKey, ActiveSession> sessions;
  };

  struct Authed {
    std::string profile_id;
    std::shared_ptr<ProfileSlot> slot;
  };

  std::shared_ptr<ProfileSlot> slot_for(const std::string& profile_id);
  std::optional<std::string> authenticate(const Request& request) const;

  Response create_profile(const Request& request);
  Response get_profile(const progression::PlayerProfile& profile) const;
  Response list_games(const progression::PlayerProfile& profile) const;
  Response list_levels(const progression::PlayerProfile& profile, progression::GameId game) const;
  Response level_detail(progression::GameId game, int level_id) const;
  Response start_session(progression::PlayerProfile& profile, ProfileSlot& slot, progression::GameId game,
                         int level_id);
  Response get_session(const ProfileSlot& slot, progression::GameId game, int level_id) const;
  Response apply_move(progression::PlayerProfile& profile, ProfileSlot& slot, progression::GameId game, int level_id,
                      const codec::json& move);
  Response list_quizzes(const progression::PlayerProfile& profile) const;
  Response get_quiz(const progression::PlayerProfile& profile, const std::string& quiz_id) const;
  Response submit_quiz(progression::PlayerProfile& profile, const std::string& quiz_id, const codec::json& body);
  Response check_quiz_answer(const progression::PlayerProfile& profile, const std::string& quiz_id,
                             const codec::json& body) const;

  /// Awards points once per session when it has just been won.
  void settle(progression::PlayerProfile& profile, progression::GameId game, int level_id, ActiveSession& active);
  codec::json session_view(progression::GameId game, const ActiveSession& active) const;
  std::shared_ptr<const quiz::Quiz> quiz_for(const progression::PlayerProfile& profile, const std::string& id) const;

  Config config_;
  content::Content content_;
  Clock clock_;
  ProfileStore store_;
  std::mutex slots_mutex_;
  std::map<std::string, std::shared_ptr<ProfileSlot>> slots_;
};

}  // namespace qq::service
