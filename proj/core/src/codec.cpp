#include "qq/codec.hpp"

namespace qq::codec {
namespace {

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object()) throw SchemaError("expected an object");
  const auto it = j.find(key);
  if (it == j.end()) throw SchemaError(std::string("missing field '") + key + "'");
  try {
    return it->template get<T>();
  } catch (const json::exception&) {
    throw SchemaError(std::string("field '") + key + "' has the wrong type");
  }
}

template <typename T>
std::optional<T> optional_field(const json& j, const char* key) {
  const auto it = j.find(key);
  if (it == j.end() || it->is_null()) return std::nullopt;
  return field<T>(j, key);
}

const json& required(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

const json& array_field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  const auto& v = j.at(key);
  if (!v.is_array()) throw SchemaError(std::string("field '") + key + "' must be an array");
  return v;
}

void expect_game(const json& j, std::string_view game) {
  if (j.contains("game") && field<std::string>(j, "game") != game)
    throw SchemaError("document is not a " + std::string(game) + " level");
}

quantum::GateKind gate_kind_from(const std::string& name) {
  const auto k = quantum::parse_gate_kind(name);
  if (!k) throw SchemaError("unknown gate '" + name + "'");
  return *k;
}

std::vector<quantum::GateKind> gate_list(const json& arr) {
  std::vector<quantum::GateKind> out;
  for (const auto& g : arr) {
    if (!g.is_string()) throw SchemaError("gate names must be strings");
    out.push_back(gate_kind_from(g.get<std::string>()));
  }
  return out;
}

json gate_names(const std::vector<quantum::GateKind>& gates) {
  json arr = json::array();
  for (auto g : gates) arr.push_back(quantum::gate_name(g));
  return arr;
}

std::map<quantum::GateKind, std::string> tooltips_from(const json& j) {
  std::map<quantum::GateKind, std::string> out;
  if (!j.contains("tooltips")) return out;
  const auto& t = j.at("tooltips");
  if (!t.is_object()) throw SchemaError("tooltips must be an object");
  for (const auto& [name, text] : t.items()) {
    if (!text.is_string()) throw SchemaError("tooltip text must be a string");
    out[gate_kind_from(name)] = text.get<std::string>();
  }
  return out;
}

json tooltips_to(const std::map<quantum::GateKind, std::string>& tips) {
  json t = json::object();
  for (const auto& [g, text] : tips) t[std::string(quantum::gate_name(g))] = text;
  return t;
}

void put_optional(json& j, const char* key, const std::optional<std::string>& v) {
  if (v) j[key] = *v;
}

template <typename Fn>
auto wrap_domain(Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const quantum::QuantumError& e) {
    throw SchemaError(e.what());
  }
}

json course_to_json(const entanglement::Course& course) {
  json arr = json::array();
  for (const auto& o : course)
    arr.push_back({{"required_action", entanglement::action_name(o.required_action)}, {"label", o.label}});
  return arr;
}

entanglement::Course course_from_json(const json& arr) {
  entanglement::Course course;
  for (const auto& o : arr) {
    const auto name = field<std::string>(o, "required_action");
    const auto action = entanglement::parse_action(name);
    if (!action) throw SchemaError("unknown action '" + name + "'");
    course.push_back({*action, optional_field<std::string>(o, "label").value_or("")});
  }
  return course;
}

}  // namespace

json to_json(quantum::Complex z) { return json::array({z.real(), z.imag()}); }

json to_json(const quantum::StateVector& s) {
  json arr = json::array();
  for (const auto& a : s.amplitudes()) arr.push_back(to_json(a));
  return arr;
}

json to_json(const quantum::UnitaryMatrix& m) {
  json rows = json::array();
  for (int r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.dim(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const quantum::BlochPoint& p) { return {{"x", p.x}, {"y", p.y}, {"z", p.z}}; }

json to_json(const quantum::ColorClass& c) {
  json j = {{"primary", quantum::color_name(c.primary)}};
  if (c.secondary) j["secondary"] = quantum::color_name(*c.secondary);
  return j;
}

quantum::Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw SchemaError("complex numbers are [re, im] pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

quantum::StateVector state_from_json(const json& j) {
  if (!j.is_array()) throw SchemaError("a state is an array of complex numbers");
  std::vector<quantum::Complex> amps;
  for (const auto& a : j) amps.push_back(complex_from_json(a));
  return wrap_domain([&] { return quantum::StateVector(std::move(amps)); });
}

quantum::UnitaryMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw SchemaError("a matrix is an array of rows");
  const auto dim = j.size();
  std::vector<quantum::Complex> entries;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != dim) throw SchemaError("matrix rows must be square");
    for (const auto& e : row) entries.push_back(complex_from_json(e));
  }
  return wrap_domain([&] { return quantum::UnitaryMatrix(static_cast<int>(dim), std::move(entries)); });
}

json to_json(const circuits::GridPlacement& p) {
  json j = {{"gate", quantum::gate_name(p.gate.kind)}, {"column", p.column}};
  if (p.gate.kind == quantum::GateKind::CNOT) {
    j["control"] = p.gate.control;
    j["target"] = p.gate.target;
  } else if (p.wire) {
    j["wire"] = *p.wire;
  }
  return j;
}

circuits::GridPlacement grid_placement_from_json(const json& j) {
  circuits::GridPlacement p;
  const auto kind = gate_kind_from(field<std::string>(j, "gate"));
  p.column = field<int>(j, "column");
  if (kind == quantum::GateKind::CNOT) {
    p.gate = quantum::Gate::cnot(field<int>(j, "control"), field<int>(j, "target"));
  } else {
    p.gate = quantum::Gate::single(kind);
    p.wire = field<int>(j, "wire");
  }
  return p;
}

json to_json(const bloch::BlochLevel& level) {
  json j = {{"game", "bloch"},
            {"id", level.id},
            {"start_state", to_json(level.start_state)},
            {"target_state", to_json(level.target_state)},
            {"allowed_gates", gate_names(level.allowed_gates)},
            {"min_solution_length", level.min_solution_length},
            {"tooltips", tooltips_to(level.tooltips)}};
  put_optional(j, "intro_popup", level.intro_popup);
  put_optional(j, "hint", level.hint);
  return j;
}

bloch::BlochLevel bloch_level_from_json(const json& j) {
  expect_game(j, "bloch");
  bloch::BlochLevel level;
  level.id = field<int>(j, "id");
  level.start_state = state_from_json(required(j, "start_state"));
  level.target_state = state_from_json(required(j, "target_state"));
  if (level.start_state.num_qubits() != 1 || level.target_state.num_qubits() != 1)
    throw SchemaError("Bloch levels use single-qubit states");
  level.allowed_gates = gate_list(array_field(j, "allowed_gates"));
  for (auto g : level.allowed_gates)
    if (g == quantum::GateKind::CNOT) throw SchemaError("CNOT is not available in the Bloch game");
  level.min_solution_length = field<int>(j, "min_solution_length");
  if (level.min_solution_length < 0) throw SchemaError("min_solution_length must be non-negative");
  level.intro_popup = optional_field<std::string>(j, "intro_popup");
  level.hint = optional_field<std::string>(j, "hint");
  level.tooltips = tooltips_from(j);
  return level;
}

json to_json(const entanglement::EntanglementLevel& level) {
  json j = {{"game", "entanglement"},
            {"id", level.id},
            {"mode", entanglement::mode_name(level.mode)},
            {"decoherence_enabled", level.decoherence_enabled},
            {"wrong_move_limit", level.wrong_move_limit},
            {"course_a", course_to_json(level.course_a)},
            {"course_b", course_to_json(level.course_b)}};
  put_optional(j, "intro_popup", level.intro_popup);
  return j;
}

entanglement::EntanglementLevel entanglement_level_from_json(const json& j) {
  expect_game(j, "entanglement");
  entanglement::EntanglementLevel level;
  level.id = field<int>(j, "id");
  const auto mode = field<std::string>(j, "mode");
  const auto parsed = entanglement::parse_mode(mode);
  if (!parsed) throw SchemaError("unknown mode '" + mode + "'");
  level.mode = *parsed;
  level.decoherence_enabled = field<bool>(j, "decoherence_enabled");
  level.wrong_move_limit =
      optional_field<int>(j, "wrong_move_limit").value_or(entanglement::kDefaultWrongMoveLimit);
  level.course_a = course_from_json(array_field(j, "course_a"));
  level.course_b = course_from_json(array_field(j, "course_b"));
  level.intro_popup = optional_field<std::string>(j, "intro_popup");
  return level;
}

json to_json(const circuits::CircuitLevel& level) {
  json solution = json::array();
  for (const auto& p : level.solution) solution.push_back(to_json(p));
  json j = {{"game", "circuits"},
            {"id", level.id},
            {"input_state", to_json(level.input_state)},
            {"target_matrix", to_json(level.target_matrix)},
            {"target_state", to_json(level.target_state)},
            {"allowed_gates", gate_names(level.allowed_gates)},
            {"max_columns", level.max_columns},
            {"penalty_enabled", level.penalty_enabled},
            {"tooltips", tooltips_to(level.tooltips)},
            {"solution", std::move(solution)}};
  put_optional(j, "intro_popup", level.intro_popup);
  return j;
}

circuits::CircuitLevel circuit_level_from_json(const json& j) {
  expect_game(j, "circuits");
  circuits::CircuitLevel level;
  level.id = field<int>(j, "id");
  level.input_state = state_from_json(required(j, "input_state"));
  level.target_matrix = matrix_from_json(required(j, "target_matrix"));
  level.target_state = state_from_json(required(j, "target_state"));
  if (level.input_state.num_qubits() != 2 || level.target_state.num_qubits() != 2 || level.target_matrix.dim() != 4)
    throw SchemaError("circuit levels use two-qubit states and a 4x4 matrix");
  level.allowed_gates = gate_list(array_field(j, "allowed_gates"));
  level.max_columns = field<int>(j, "max_columns");
  level.penalty_enabled = field<bool>(j, "penalty_enabled");
  level.intro_popup = optional_field<std::string>(j, "intro_popup");
  level.tooltips = tooltips_from(j);
  if (j.contains("solution"))
    for (const auto& p : array_field(j, "solution")) level.solution.push_back(grid_placement_from_json(p));
  return level;
}

json to_json(const quiz::Quiz& q) {
  json questions = json::array();
  for (const auto& qu : q.questions)
    questions.push_back({{"id", qu.id},
                         {"prompt", qu.prompt},
                         {"options", qu.options},
                         {"correct_index", qu.correct_index}});
  json j = {{"id", q.id}, {"kind", quiz::kind_name(q.kind)}, {"title", q.title}, {"questions", std::move(questions)}};
  if (q.game) j["game"] = progression::game_name(*q.game);
  return j;
}

quiz::Quiz quiz_from_json(const json& j) {
  quiz::Quiz q;
  q.id = field<std::string>(j, "id");
  const auto kind = field<std::string>(j, "kind");
  const auto parsed = quiz::parse_kind(kind);
  if (!parsed) throw SchemaError("unknown quiz kind '" + kind + "'");
  q.kind = *parsed;
  q.title = optional_field<std::string>(j, "title").value_or(q.id);
  if (const auto game = optional_field<std::string>(j, "game")) {
    q.game = progression::parse_game(*game);
    if (!q.game) throw SchemaError("unknown game '" + *game + "'");
  }
  int n = 0;
  for (const auto& item : array_field(j, "questions")) {
    ++n;
    quiz::Question qu;
    qu.id = optional_field<std::string>(item, "id").value_or(q.id + "-q" + std::to_string(n));
    qu.prompt = field<std::string>(item, "prompt");
    const auto& opts = array_field(item, "options");
    if (opts.size() != quiz::kOptionsPerQuestion)
      throw SchemaError("question " + std::to_string(n) + " must have exactly 4 options");
    for (std::size_t i = 0; i < quiz::kOptionsPerQuestion; ++i) {
      if (!opts[i].is_string()) throw SchemaError("options must be strings");
      qu.options[i] = opts[i].get<std::string>();
    }
    qu.correct_index = field<int>(item, "correct_index");
    qu.allow_idk = q.kind == quiz::Kind::Assessment;
    q.questions.push_back(std::move(qu));
  }
  return q;
}

json quiz_client_view(const quiz::Quiz& q) {
  json questions = json::array();
  for (const auto& qu : q.questions) {
    json item = {{"id", qu.id}, {"prompt", qu.prompt}, {"options", qu.options}, {"allow_idk", qu.allow_idk}};
    questions.push_back(std::move(item));
  }
  json j = {{"id", q.id},
            {"kind", quiz::kind_name(q.kind)},
            {"title", q.title},
            {"reveal_correct", q.reveal_correct()},
            {"questions", std::move(questions)}};
  if (q.game) j["game"] = progression::game_name(*q.game);
  if (q.kind == quiz::Kind::Assessment) j["default_answers"] = json(std::vector<std::string>(q.questions.size(), "idk"));
  return j;
}

json to_json(const quiz::QuestionFeedback& fb) {
  json j = {{"correct", fb.correct}};
  if (fb.reveal) j["correct_index"] = *fb.reveal;
  return j;
}

json to_json(const quiz::GradeResult& r) {
  json per = json::array();
  for (const auto& fb : r.per_question) per.push_back(to_json(fb));
  return {{"score", r.score}, {"per_question", std::move(per)}};
}

json to_json(const progression::PlayerProfile& p) {
  json completed = json::object();
  for (auto g : progression::kAllGames) {
    json ids = json::array();
    if (const auto it = p.completed.find(g); it != p.completed.end())
      for (int id : it->second) ids.push_back(id);
    completed[std::string(progression::game_name(g))] = std::move(ids);
  }
  json outfits = json::array();
  for (auto g : p.jester_outfits) outfits.push_back(progression::game_name(g));
  json quizzes = json::object();
  for (const auto& [id, rec] : p.quiz_records) quizzes[id] = {{"attempts", rec.attempts}, {"high_score", rec.high_score}};
  json ledger = json::array();
  for (const auto& e : p.ledger)
    ledger.push_back({{"game", progression::game_name(e.game)},
                      {"level_id", e.level_id},
                      {"raw_score", e.raw_score},
                      {"awarded", e.awarded},
                      {"replay", e.replay},
                      {"timestamp", e.timestamp},
                      {"session_id", e.session_id}});
  return {{"schema_version", 1},
          {"id", p.id},
          {"nickname", p.nickname},
          {"total_points", p.total_points},
          {"completed", std::move(completed)},
          {"jester_outfits", std::move(outfits)},
          {"quiz_records", std::move(quizzes)},
          {"ledger", std::move(ledger)}};
}

progression::PlayerProfile profile_from_json(const json& j) {
  progression::PlayerProfile p;
  const auto game_of = [](const std::string& name) {
    const auto g = progression::parse_game(name);
    if (!g) throw SchemaError("unknown game '" + name + "'");
    return *g;
  };
  p.id = field<std::string>(j, "id");
  p.nickname = field<std::string>(j, "nickname");
  p.total_points = field<int>(j, "total_points");
  if (j.contains("completed")) {
    const auto& c = j.at("completed");
    if (!c.is_object()) throw SchemaError("completed must be an object");
    for (const auto& [name, ids] : c.items()) {
      const auto g = game_of(name);
      auto& set = p.completed[g];
      for (const auto& id : ids) set.insert(id.get<int>());
      if (set.empty()) p.completed.erase(g);
    }
  }
  if (j.contains("jester_outfits"))
    for (const auto& g : array_field(j, "jester_outfits")) p.jester_outfits.insert(game_of(g.get<std::string>()));
  if (j.contains("quiz_records"))
    for (const auto& [id, rec] : j.at("quiz_records").items())
      p.quiz_records[id] = {field<int>(rec, "attempts"), field<int>(rec, "high_score")};
  if (j.contains("ledger"))
    for (const auto& e : array_field(j, "ledger"))
      p.ledger.push_back({game_of(field<std::string>(e, "game")), field<int>(e, "level_id"),
                          field<int>(e, "raw_score"), field<int>(e, "awarded"), field<bool>(e, "replay"),
                          field<std::string>(e, "timestamp"),
                          optional_field<std::string>(e, "session_id").value_or("")});
  return p;
}

std::string canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace qq::codec
