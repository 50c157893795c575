#include "qq/service.hpp"

#include <chrono>
#include <ctime>
#include <functional>
#include <sstream>

namespace qq::service {
namespace {

using codec::json;
using progression::GameId;

Response error(int status, const std::string& message) { return {status, json{{"error", message}}}; }

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::string clean = path.substr(0, path.find('?'));
  std::stringstream ss(clean);
  std::string part;
  while (std::getline(ss, part, '/'))
    if (!part.empty()) parts.push_back(part);
  return parts;
}

std::optional<int> parse_level_id(const std::string& s) {
  if (s.empty() || s.size() > 2) return std::nullopt;
  int v = 0;
  for (char c : s) {
    if (c < '0' || c > '9') return std::nullopt;
    v = v * 10 + (c - '0');
  }
  if (v < 1 || v > kLevelsPerGame) return std::nullopt;
  return v;
}

int status_for(const RuleError& e) { return e.code() == RuleErrorCode::TerminalState ? 409 : 422; }

json gate_tooltips(const std::map<quantum::GateKind, std::string>& tips, bool with_matrices) {
  json out = json::array();
  for (const auto& [gate, text] : tips) {
    json t = {{"gate", quantum::gate_name(gate)}, {"text", text}};
    if (with_matrices) {
      if (gate == quantum::GateKind::CNOT) {
        t["matrix"] = {{"control_0", codec::to_json(quantum::gate_matrix(quantum::Gate::cnot(0, 1), 2))},
                       {"control_1", codec::to_json(quantum::gate_matrix(quantum::Gate::cnot(1, 0), 2))}};
      } else {
        const auto g = quantum::Gate::single(gate);
        t["matrix"] = {{"wire_0", codec::to_json(quantum::lift_single_qubit_gate(g, 0))},
                       {"wire_1", codec::to_json(quantum::lift_single_qubit_gate(g, 1))}};
      }
    }
    out.push_back(std::move(t));
  }
  return out;
}

json gate_list(const std::vector<quantum::GateKind>& gates) {
  json out = json::array();
  for (auto g : gates) out.push_back(quantum::gate_name(g));
  return out;
}

json color_grid(const std::array<quantum::ColorClass, 16>& colors) {
  json rows = json::array();
  for (std::size_t r = 0; r < 4; ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < 4; ++c) row.push_back(codec::to_json(colors[r * 4 + c]));
    rows.push_back(std::move(row));
  }
  return rows;
}

json color_grid(const quantum::UnitaryMatrix& m) {
  std::array<quantum::ColorClass, 16> colors{};
  for (std::size_t i = 0; i < 16; ++i) colors[i] = quantum::classify_entry(m.entries()[i]);
  return color_grid(colors);
}

std::optional<int> optional_int(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  if (!it->is_number_integer()) throw RuleError(RuleErrorCode::InvalidMove, std::string(key) + " must be an integer");
  return it->get<int>();
}

int required_int(const json& j, const char* key) {
  auto v = optional_int(j, key);
  if (!v) throw RuleError(RuleErrorCode::InvalidMove, std::string("move needs '") + key + "'");
  return *v;
}

std::string required_string(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || !it->is_string())
    throw RuleError(RuleErrorCode::InvalidMove, std::string("move needs a string '") + key + "'");
  return it->get<std::string>();
}

quiz::Answer parse_answer(const json& a) {
  if (a.is_null() || (a.is_string() && a.get<std::string>() == "idk")) return std::nullopt;
  if (a.is_number_integer()) return a.get<int>();
  throw quiz::QuizError("answers are option indices or \"idk\"");
}

std::uint64_t shuffle_seed(const std::string& profile_id, const std::string& quiz_id, int attempts) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (char c : profile_id + "/" + quiz_id + "/" + std::to_string(attempts))
    h = (h ^ static_cast<unsigned char>(c)) * 0x100000001b3ULL;
  return h;
}

}  // namespace

std::string utc_now() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

Service::Service(Config config, content::Content content, Clock clock)
    : config_(std::move(config)), content_(std::move(content)), clock_(std::move(clock)), store_(config_.data_dir) {}

std::shared_ptr<Service::ProfileSlot> Service::slot_for(const std::string& profile_id) {
  std::lock_guard lock(slots_mutex_);
  auto& slot = slots_[profile_id];
  if (!slot) slot = std::make_shared<ProfileSlot>();
  return slot;
}

std::optional<std::string> Service::authenticate(const Request& request) const {
  static constexpr std::string_view kBearer = "Bearer ";
  if (!request.authorization.starts_with(kBearer)) return std::nullopt;
  return store_.profile_for_token(request.authorization.substr(kBearer.size()));
}

Response Service::handle(const Request& request) {
  try {
    const auto parts = split_path(request.path);
    if (parts.empty() || parts[0] != "api") return error(404, "not found");
    const auto& method = request.method;

    json body = json::object();
    if (method == "POST" && !request.body.empty()) {
      body = json::parse(request.body, nullptr, false);
      if (body.is_discarded() || !body.is_object()) return error(400, "request body must be a JSON object");
    }

    if (parts.size() == 2 && parts[1] == "health" && method == "GET") return {200, json{{"ok", true}}};
    if (parts.size() == 2 && parts[1] == "profiles" && method == "POST") return create_profile(request);

    const auto profile_id = authenticate(request);
    if (!profile_id) return error(401, "missing or unknown bearer token");
    const auto slot = slot_for(*profile_id);
    std::lock_guard lock(slot->mutex);
    auto loaded = store_.load(*profile_id);
    if (!loaded) return error(401, "profile no longer exists");
    auto& profile = *loaded;
    const auto before = profile;

    Response response = error(404, "not found");
    if (parts.size() == 2 && parts[1] == "profile" && method == "GET") {
      response = get_profile(profile);
    } else if (parts.size() >= 2 && parts[1] == "games") {
      if (parts.size() == 2 && method == "GET") {
        response = list_games(profile);
      } else if (const auto game = parts.size() >= 3 ? progression::parse_game(parts[2]) : std::nullopt; !game) {
        response = error(404, "unknown game");
      } else if (parts.size() == 4 && parts[3] == "levels" && method == "GET") {
        response = list_levels(profile, *game);
      } else if (parts.size() >= 5 && parts[3] == "levels") {
        const auto level_id = parse_level_id(parts[4]);
        if (!level_id || !content_.has_level(*game, *level_id)) {
          response = error(404, "unknown level");
        } else if (parts.size() == 5 && method == "GET") {
          response = level_detail(*game, *level_id);
        } else if (parts.size() == 6 && parts[5] == "session" && method == "POST") {
          response = start_session(profile, *slot, *game, *level_id);
        } else if (parts.size() == 6 && parts[5] == "session" && method == "GET") {
          response = get_session(*slot, *game, *level_id);
        } else if (parts.size() == 6 && parts[5] == "moves" && method == "POST") {
          const auto move = body.contains("move") && body.at("move").is_object() ? body.at("move") : body;
          response = apply_move(profile, *slot, *game, *level_id, move);
        }
      }
    } else if (parts.size() >= 2 && parts[1] == "quizzes") {
      if (parts.size() == 2 && method == "GET") {
        response = list_quizzes(profile);
      } else if (parts.size() == 3 && method == "GET") {
        response = get_quiz(profile, parts[2]);
      } else if (parts.size() == 4 && parts[3] == "submit" && method == "POST") {
        response = submit_quiz(profile, parts[2], body);
      } else if (parts.size() == 4 && parts[3] == "check" && method == "POST") {
        response = check_quiz_answer(profile, parts[2], body);
      }
    }

    if (!(profile == before)) store_.save(profile);
    return response;
  } catch (const codec::SchemaError& e) {
    return error(400, e.what());
  } catch (const json::exception& e) {
    return error(400, e.what());
  } catch (const std::exception& e) {
    return error(500, e.what());
  }
}

Response Service::create_profile(const Request& request) {
  const auto body = json::parse(request.body, nullptr, false);
  if (body.is_discarded() || !body.is_object() || !body.contains("nickname") || !body.at("nickname").is_string())
    return error(400, "body must be {\"nickname\": string}");
  const auto nickname = body.at("nickname").get<std::string>();
  if (const auto err = progression::nickname_error(nickname)) return error(400, *err);

  std::string id;
  do {
    id = "p" + random_hex(8);
  } while (std::filesystem::exists(store_.path_for(id)));
  const auto profile = progression::make_profile(id, nickname);
  const auto slot = slot_for(id);
  {
    std::lock_guard lock(slot->mutex);
    store_.save(profile);
  }
  const auto token = random_hex(16);
  store_.register_token(token, id);
  return {201, json{{"profile_id", id}, {"token", token}, {"nickname", nickname}}};
}

Response Service::get_profile(const progression::PlayerProfile& profile) const {
  auto view = codec::to_json(profile);
  view.erase("schema_version");
  view["profile_id"] = profile.id;
  view["circuits_unlocked"] = progression::is_circuits_unlocked(profile);
  return {200, view};
}

Response Service::list_games(const progression::PlayerProfile& profile) const {
  json games = json::array();
  for (auto g : progression::kAllGames)
    games.push_back({{"game_id", progression::game_name(g)},
                     {"unlocked", g != GameId::Circuits || progression::is_circuits_unlocked(profile)},
                     {"levels_completed", profile.completed_count(g)},
                     {"total", kLevelsPerGame},
                     {"jester_outfit", profile.jester_outfits.contains(g)}});
  return {200, json{{"games", std::move(games)}}};
}

Response Service::list_levels(const progression::PlayerProfile& profile, GameId game) const {
  const bool unlocked = game != GameId::Circuits || progression::is_circuits_unlocked(profile);
  json levels = json::array();
  for (int id = 1; id <= kLevelsPerGame; ++id)
    if (content_.has_level(game, id))
      levels.push_back({{"level_id", id}, {"completed", profile.has_completed(game, id)}, {"unlocked", unlocked}});
  return {200, json{{"game_id", progression::game_name(game)}, {"levels", std::move(levels)}}};
}

Response Service::level_detail(GameId game, int level_id) const {
  json j = {{"game_id", progression::game_name(game)}, {"level_id", level_id}};
  switch (game) {
    case GameId::Bloch: {
      const auto& l = *content_.bloch.at(level_id);
      j["start_state"] = codec::to_json(l.start_state);
      j["target_state"] = codec::to_json(l.target_state);
      j["start_bloch"] = codec::to_json(quantum::bloch_coordinates(l.start_state));
      j["target_bloch"] = codec::to_json(quantum::bloch_coordinates(l.target_state));
      j["allowed_gates"] = gate_list(l.allowed_gates);
      j["min_solution_length"] = l.min_solution_length;
      j["tooltips"] = gate_tooltips(l.tooltips, false);
      if (l.intro_popup) j["intro_popup"] = *l.intro_popup;
      if (l.hint) j["hint"] = *l.hint;
      break;
    }
    case GameId::Entanglement: {
      auto full = codec::to_json(*content_.entanglement.at(level_id));
      full.erase("game");
      full.erase("id");
      j.update(full);
      break;
    }
    case GameId::Circuits: {
      const auto& l = *content_.circuits.at(level_id);
      j["input_state"] = codec::to_json(l.input_state);
      j["target_matrix"] = codec::to_json(l.target_matrix);
      j["target_colors"] = color_grid(l.target_matrix);
      j["target_state"] = codec::to_json(l.target_state);
      j["allowed_gates"] = gate_list(l.allowed_gates);
      j["max_columns"] = l.max_columns;
      j["penalty_enabled"] = l.penalty_enabled;
      j["tooltips"] = gate_tooltips(l.tooltips, true);
      if (l.intro_popup) j["intro_popup"] = *l.intro_popup;
      break;
    }
  }
  return {200, j};
}

Response Service::start_session(progression::PlayerProfile& profile, ProfileSlot& slot, GameId game, int level_id) {
  if (game == GameId::Circuits && !progression::is_circuits_unlocked(profile))
    return error(403, "complete six Bloch sphere levels to unlock quantum circuits");
  const auto fresh = [&]() -> GameSession {
    switch (game) {
      case GameId::Bloch: return bloch::start_level(content_.bloch.at(level_id));
      case GameId::Entanglement: return entanglement::start_level(content_.entanglement.at(level_id));
      case GameId::Circuits: break;
    }
    return circuits::start_level(content_.circuits.at(level_id));
  };
  ActiveSession active{random_hex(16), fresh()};
  settle(profile, game, level_id, active);
  auto& stored = slot.sessions.insert_or_assign(SessionKey{game, level_id}, std::move(active)).first->second;
  return {201, session_view(game, stored)};
}

Response Service::get_session(const ProfileSlot& slot, GameId game, int level_id) const {
  const auto it = slot.sessions.find(SessionKey{game, level_id});
  if (it == slot.sessions.end()) return error(404, "no active session for this level");
  return {200, session_view(game, it->second)};
}

Response Service::apply_move(progression::PlayerProfile& profile, ProfileSlot& slot, GameId game, int level_id,
                             const json& move) {
  if (game == GameId::Circuits && !progression::is_circuits_unlocked(profile))
    return error(403, "complete six Bloch sphere levels to unlock quantum circuits");
  const auto it = slot.sessions.find(SessionKey{game, level_id});
  if (it == slot.sessions.end()) return error(404, "no active session for this level; POST .../session first");
  auto& active = it->second;
  try {
    switch (game) {
      case GameId::Bloch: {
        const auto name = required_string(move, "gate");
        const auto gate = quantum::parse_gate_kind(name);
        if (!gate) throw RuleError(RuleErrorCode::InvalidMove, "unknown gate '" + name + "'");
        active.session = bloch::apply_player_gate(std::get<bloch::BlochSession>(active.session), *gate);
        break;
      }
      case GameId::Entanglement: {
        const auto name = required_string(move, "action");
        const auto action = entanglement::parse_action(name);
        if (!action) throw RuleError(RuleErrorCode::InvalidMove, "unknown action '" + name + "'");
        active.session = entanglement::step(std::get<entanglement::EntanglementSession>(active.session), *action);
        break;
      }
      case GameId::Circuits: {
        const auto& current = std::get<circuits::CircuitSession>(active.session);
        const auto op = required_string(move, "op");
        const int column = required_int(move, "column");
        if (op == "place") {
          const auto name = required_string(move, "gate");
          const auto kind = quantum::parse_gate_kind(name);
          if (!kind) throw RuleError(RuleErrorCode::InvalidMove, "unknown gate '" + name + "'");
          if (*kind == quantum::GateKind::CNOT) {
            active.session = circuits::place_gate(
                current, quantum::Gate::cnot(required_int(move, "control"), required_int(move, "target")), column);
          } else {
            active.session =
                circuits::place_gate(current, quantum::Gate::single(*kind), column, optional_int(move, "wire"));
          }
        } else if (op == "remove") {
          active.session = circuits::remove_gate(current, column, optional_int(move, "wire"));
        } else {
          throw RuleError(RuleErrorCode::InvalidMove, "op must be 'place' or 'remove'");
        }
        break;
      }
    }
  } catch (const RuleError& e) {
    return {status_for(e), json{{"error", e.what()}, {"session", session_view(game, active)}}};
  }
  settle(profile, game, level_id, active);
  return {200, session_view(game, active)};
}

void Service::settle(progression::PlayerProfile& profile, GameId game, int level_id, ActiveSession& active) {
  if (active.awarded) return;
  std::optional<int> raw;
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<S, bloch::BlochSession>) {
          if (s.status() == bloch::Status::Won) raw = bloch::level_score(s);
        } else if constexpr (std::is_same_v<S, entanglement::EntanglementSession>) {
          if (s.status() == entanglement::Status::Won) raw = entanglement::level_score(s);
        } else {
          if (s.status() == circuits::Status::Won) raw = circuits::level_score(s);
        }
      },
      active.session);
  if (!raw) return;
  auto result = progression::award_points(profile, game, level_id, *raw, clock_(), active.id);
  profile = std::move(result.profile);
  active.awarded = true;
  active.raw_score = *raw;
  active.awarded_points = result.awarded;
  active.replay = result.replay;
}

json Service::session_view(GameId game, const ActiveSession& active) const {
  json j = {{"game_id", progression::game_name(game)}, {"session_id", active.id}};
  std::visit(
      [&](const auto& s) {
        using S = std::decay_t<decltype(s)>;
        j["level_id"] = s.level_id();
        if constexpr (std::is_same_v<S, bloch::BlochSession>) {
          j["status"] = bloch::status_name(s.status());
          json moves = json::array();
          for (auto g : s.moves()) moves.push_back(quantum::gate_name(g));
          j["moves"] = std::move(moves);
          j["state"] = codec::to_json(s.current_state());
          j["bloch"] = codec::to_json(quantum::bloch_coordinates(s.current_state()));
          j["probabilities"] = quantum::measurement_probabilities(s.current_state());
          j["target_state"] = codec::to_json(s.level().target_state);
          j["target_bloch"] = codec::to_json(quantum::bloch_coordinates(s.level().target_state));
          j["allowed_gates"] = gate_list(s.level().allowed_gates);
        } else if constexpr (std::is_same_v<S, entanglement::EntanglementSession>) {
          j["status"] = entanglement::status_name(s.status());
          j["mode"] = entanglement::mode_name(s.level().mode);
          j["position"] = s.position();
          j["course_length"] = s.level().course_a.size();
          j["synced_count"] = s.synced_count();
          j["wrong_count"] = s.wrong_count();
          j["decoherence"] = s.decoherence();
          j["decoherence_enabled"] = s.level().decoherence_enabled;
          j["wrong_move_limit"] = s.level().wrong_move_limit;
          switch (s.last_outcome()) {
            case entanglement::StepOutcome::None: j["last_outcome"] = nullptr; break;
            case entanglement::StepOutcome::Synced: j["last_outcome"] = "synced"; break;
            case entanglement::StepOutcome::Wrong: j["last_outcome"] = "wrong"; break;
          }
          if (s.last_partner_action()) j["last_partner_action"] = entanglement::action_name(*s.last_partner_action());
        } else {
          const auto eval = circuits::evaluate(s);
          j["status"] = circuits::status_name(s.status());
          json grid = json::array();
          for (const auto& p : s.grid().placements()) grid.push_back(codec::to_json(p));
          j["grid"] = std::move(grid);
          j["max_columns"] = s.level().max_columns;
          j["fish"] = {{"fish_remaining", s.fish().fish_remaining},
                       {"points_remaining", s.fish().points_remaining},
                       {"outfit_stage", s.fish().outfit_stage}};
          j["removals"] = s.removals();
          j["penalty_enabled"] = s.level().penalty_enabled;
          j["circuit_matrix"] = codec::to_json(eval.circuit_matrix);
          j["colors"] = color_grid(eval.colors);
          j["output_state"] = codec::to_json(eval.output_state);
          j["target_matrix"] = codec::to_json(s.level().target_matrix);
          j["target_state"] = codec::to_json(s.level().target_state);
          if (s.status() == circuits::Status::Exhausted) j["prompt"] = "The cat is sad and starving. Retry the level!";
        }
      },
      active.session);
  if (active.awarded) {
    j["score"] = active.raw_score;
    j["awarded"] = active.awarded_points;
    j["replay"] = active.replay;
  }
  return j;
}

std::shared_ptr<const quiz::Quiz> Service::quiz_for(const progression::PlayerProfile& profile,
                                                    const std::string& id) const {
  const auto it = content_.quizzes.find(id);
  if (it == content_.quizzes.end()) return nullptr;
  if (!config_.shuffle_options) return it->second;
  const auto rec = profile.quiz_records.find(id);
  const int attempts = rec == profile.quiz_records.end() ? 0 : rec->second.attempts;
  return std::make_shared<const quiz::Quiz>(quiz::shuffle_options(*it->second, shuffle_seed(profile.id, id, attempts)));
}

Response Service::list_quizzes(const progression::PlayerProfile& profile) const {
  json list = json::array();
  for (const auto& [id, q] : content_.quizzes) {
    json item = {{"id", id}, {"kind", quiz::kind_name(q->kind)}, {"title", q->title}};
    if (q->game) item["game"] = progression::game_name(*q->game);
    const auto rec = profile.quiz_records.find(id);
    item["attempts"] = rec == profile.quiz_records.end() ? 0 : rec->second.attempts;
    item["high_score"] = rec == profile.quiz_records.end() ? 0 : rec->second.high_score;
    list.push_back(std::move(item));
  }
  return {200, json{{"quizzes", std::move(list)}}};
}

Response Service::get_quiz(const progression::PlayerProfile& profile, const std::string& quiz_id) const {
  const auto q = quiz_for(profile, quiz_id);
  if (!q) return error(404, "unknown quiz");
  return {200, codec::quiz_client_view(*q)};
}

Response Service::submit_quiz(progression::PlayerProfile& profile, const std::string& quiz_id, const json& body) {
  const auto q = quiz_for(profile, quiz_id);
  if (!q) return error(404, "unknown quiz");
  if (!body.contains("answers") || !body.at("answers").is_array()) return error(422, "body needs an answers array");
  quiz::GradeResult result;
  try {
    std::vector<quiz::Answer> answers;
    for (const auto& a : body.at("answers")) answers.push_back(parse_answer(a));
    result = quiz::grade(*q, answers);
  } catch (const quiz::QuizError& e) {
    return error(422, e.what());
  }
  profile = quiz::record_attempt(profile, quiz_id, result.score);
  const auto& rec = profile.quiz_records.at(quiz_id);
  json out = {{"quiz_id", quiz_id},
              {"score", result.score},
              {"out_of", q->questions.size()},
              {"record", {{"attempts", rec.attempts}, {"high_score", rec.high_score}}}};
  // Assessments report only the total.
  if (q->kind == quiz::Kind::InGame) out["per_question"] = codec::to_json(result).at("per_question");
  return {200, out};
}

Response Service::check_quiz_answer(const progression::PlayerProfile& profile, const std::string& quiz_id,
                                    const json& body) const {
  const auto q = quiz_for(profile, quiz_id);
  if (!q) return error(404, "unknown quiz");
  if (q->kind != quiz::Kind::InGame) return error(403, "assessment answers are not revealed");
  if (!body.contains("question") || !body.at("question").is_number_unsigned() || !body.contains("answer"))
    return error(422, "body needs question and answer");
  try {
    const auto fb = quiz::check_answer(*q, body.at("question").get<std::size_t>(), parse_answer(body.at("answer")));
    return {200, codec::to_json(fb)};
  } catch (const quiz::QuizError& e) {
    return error(422, e.what());
  }
}

}  // namespace qq::service
