#include "qq/authoring.hpp"

#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

#include "qq/solver.hpp"

namespace qq::authoring {
namespace {

using progression::GameId;

std::string where(GameId game, int id) {
  std::ostringstream s;
  s << progression::game_name(game) << "/" << std::setw(2) << std::setfill('0') << id;
  return s.str();
}

double clean(double v) { return std::abs(v) < 5e-5 ? 0.0 : v; }

std::string fmt(double v) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(4) << clean(v);
  return s.str();
}

std::string fmt(quantum::Complex z) {
  std::ostringstream s;
  s << "(" << fmt(z.real()) << (clean(z.imag()) < 0 ? "-" : "+") << fmt(std::abs(z.imag())) << "i)";
  return s.str();
}

std::string fmt(const quantum::StateVector& st) {
  std::string out = "[";
  for (std::size_t i = 0; i < st.dim(); ++i) out += (i ? " " : "") + fmt(st[i]);
  return out + "]";
}

std::string fmt(const quantum::BlochPoint& p) {
  return "(" + fmt(p.x) + ", " + fmt(p.y) + ", " + fmt(p.z) + ")";
}

std::string join_gates(const std::vector<quantum::GateKind>& gates) {
  std::string out;
  for (auto g : gates) out += (out.empty() ? "" : " ") + std::string(quantum::gate_name(g));
  return out.empty() ? "(none)" : out;
}

std::string join_placements(const std::vector<circuits::GridPlacement>& ps) {
  std::string out;
  for (const auto& p : ps) {
    out += out.empty() ? "" : " ";
    out += "c" + std::to_string(p.column) + ":" + quantum::Placement{p.gate, p.wire}.to_string();
  }
  return out.empty() ? "(none)" : out;
}

void check_bloch(const content::Content& c, Report& r) {
  int previous_min = -1;
  for (const auto& [id, level] : c.bloch) {
    const auto at = where(GameId::Bloch, id);
    const auto problems_before = r.problems.size();
    if (level->allowed_gates.empty()) r.problems.push_back({at, "no allowed gates"});
    for (auto g : level->allowed_gates)
      if (!level->tooltips.contains(g))
        r.problems.push_back({at, "gate " + std::string(quantum::gate_name(g)) + " has no tooltip"});
    if (level->min_solution_length < previous_min)
      r.problems.push_back({at, "min_solution_length decreases from the previous level"});
    previous_min = level->min_solution_length;
    const auto solution = solver::solve_bloch(*level, solver::kDefaultMaxDepth);
    if (!solution) {
      r.problems.push_back({at, "no solution within depth 8"});
      continue;
    }
    if (static_cast<int>(solution->size()) != level->min_solution_length)
      r.problems.push_back({at, "min_solution_length is " + std::to_string(level->min_solution_length) +
                                    " but the solver needs " + std::to_string(solution->size())});
    if (r.problems.size() == problems_before)
      r.lines.push_back(at + ": ok, shortest " + join_gates(*solution) + " (length " +
                        std::to_string(solution->size()) + ")");
  }
}

void check_entanglement(const content::Content& c, Report& r) {
  for (const auto& [id, level] : c.entanglement) {
    const auto at = where(GameId::Entanglement, id);
    const auto violations = entanglement::validate_level(*level);
    for (const auto& v : violations) r.problems.push_back({at, v.message});
    if (!violations.empty()) continue;
    auto session = entanglement::start_level(level);
    const auto run = solver::solve_entanglement(*level);
    for (auto a : *run) session = entanglement::step(session, a);
    if (session.status() != entanglement::Status::Won || session.wrong_count() != 0) {
      r.problems.push_back({at, "perfect run does not win"});
      continue;
    }
    r.lines.push_back(at + ": ok, " + std::string(entanglement::mode_name(level->mode)) + ", " +
                      std::to_string(level->course_a.size()) + " obstacles" +
                      (level->decoherence_enabled ? ", decoherence" : ""));
  }
}

void check_circuits(const content::Content& c, Report& r) {
  for (const auto& [id, level] : c.circuits) {
    const auto at = where(GameId::Circuits, id);
    const auto problems_before = r.problems.size();
    for (const auto& v : circuits::validate_level(*level)) r.problems.push_back({at, v.message});
    for (auto g : level->allowed_gates)
      if (!level->tooltips.contains(g))
        r.problems.push_back({at, "gate " + std::string(quantum::gate_name(g)) + " has no tooltip"});
    const auto solution = solver::solve_circuit(*level);
    if (!solution) {
      r.problems.push_back({at, "no grid within " + std::to_string(level->max_columns) + " columns"});
      continue;
    }
    if (r.problems.size() == problems_before)
      r.lines.push_back(at + ": ok, shortest " + join_placements(*solution) + " (" +
                        std::to_string(solver::columns_used(*solution)) + " columns)");
  }
}

void check_quizzes(const content::Content& c, Report& r) {
  int assessments = 0;
  std::set<GameId> covered;
  std::set<std::string> assessment_prompts;
  for (const auto& [id, q] : c.quizzes)
    if (q->kind == quiz::Kind::Assessment)
      for (const auto& qu : q->questions) assessment_prompts.insert(qu.prompt);
  for (const auto& [id, q] : c.quizzes) {
    const auto at = "quizzes/" + id;
    const auto problems_before = r.problems.size();
    for (const auto& msg : quiz::validate_quiz(*q)) r.problems.push_back({at, msg});
    if (q->kind == quiz::Kind::Assessment) {
      ++assessments;
    } else {
      if (q->game && !covered.insert(*q->game).second)
        r.problems.push_back({at, "second in-game quiz for " + std::string(progression::game_name(*q->game))});
      for (const auto& qu : q->questions)
        if (assessment_prompts.contains(qu.prompt))
          r.problems.push_back({at, "question overlaps the assessment: " + qu.prompt});
    }
    if (r.problems.size() == problems_before)
      r.lines.push_back(at + ": ok, " + std::string(quiz::kind_name(q->kind)) + ", " +
                        std::to_string(q->questions.size()) + " questions");
  }
  if (assessments != 1)
    r.problems.push_back({"quizzes", "expected one assessment bank, found " + std::to_string(assessments)});
  for (auto g : progression::kAllGames)
    if (!covered.contains(g))
      r.problems.push_back({"quizzes", "no in-game quiz for " + std::string(progression::game_name(g))});
}

}  // namespace

Report validate_content(const content::Content& c) {
  Report r;
  for (auto g : progression::kAllGames)
    for (int id = 1; id <= kLevelsPerGame; ++id)
      if (!c.has_level(g, id)) r.problems.push_back({where(g, id), "level missing"});
  check_bloch(c, r);
  check_entanglement(c, r);
  check_circuits(c, r);
  check_quizzes(c, r);
  return r;
}

Report validate_all(const std::filesystem::path& levels_dir, const std::filesystem::path& quizzes_dir) {
  auto loaded = content::load_content(levels_dir, quizzes_dir);
  auto r = validate_content(loaded.content);
  r.problems.insert(r.problems.begin(), loaded.issues.begin(), loaded.issues.end());
  return r;
}

namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream in(line.substr(0, line.find('#')));
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

int to_int(const std::string& s, std::size_t line_no) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(s, &used);
    if (used == s.size()) return v;
  } catch (const std::exception&) {
  }
  throw ScriptError("line " + std::to_string(line_no) + ": '" + s + "' is not an integer");
}

std::string simulate_bloch(const content::Content& c, int level_id, std::istream& script) {
  const auto it = c.bloch.find(level_id);
  if (it == c.bloch.end()) throw ScriptError("no Bloch level " + std::to_string(level_id));
  std::ostringstream out;
  auto session = bloch::start_level(it->second);
  out << "bloch level " << level_id << ": start " << fmt(it->second->start_state) << " target "
      << fmt(it->second->target_state) << " " << fmt(quantum::bloch_coordinates(it->second->target_state)) << "\n";
  std::size_t line_no = 0;
  int step = 0;
  for (std::string line; std::getline(script, line);) {
    ++line_no;
    const auto tok = tokens_of(line);
    if (tok.empty()) continue;
    if (tok.size() != 1) throw ScriptError("line " + std::to_string(line_no) + ": expected one gate");
    out << ++step << ". " << tok[0] << " -> ";
    if (tok[0] == "reset") {
      session = bloch::reset_level(session);
    } else {
      const auto gate = quantum::parse_gate_kind(tok[0]);
      if (!gate) throw ScriptError("line " + std::to_string(line_no) + ": unknown gate '" + tok[0] + "'");
      try {
        session = bloch::apply_player_gate(session, *gate);
      } catch (const RuleError& e) {
        out << "rejected: " << e.what() << "\n";
        continue;
      }
    }
    out << "state " << fmt(session.current_state()) << " bloch " << fmt(quantum::bloch_coordinates(session.current_state()))
        << " " << bloch::status_name(session.status()) << "\n";
  }
  if (session.status() == bloch::Status::Won) {
    out << "Won, score " << bloch::level_score(session) << "\n";
  } else {
    out << "InProgress\n";
  }
  return out.str();
}

std::string simulate_entanglement(const content::Content& c, int level_id, std::istream& script) {
  const auto it = c.entanglement.find(level_id);
  if (it == c.entanglement.end()) throw ScriptError("no entanglement level " + std::to_string(level_id));
  std::ostringstream out;
  auto session = entanglement::start_level(it->second);
  out << "entanglement level " << level_id << ": " << entanglement::mode_name(it->second->mode) << ", "
      << it->second->course_a.size() << " obstacles" << (it->second->decoherence_enabled ? ", decoherence on" : "")
      << "\n";
  std::size_t line_no = 0;
  int step = 0;
  for (std::string line; std::getline(script, line);) {
    ++line_no;
    const auto tok = tokens_of(line);
    if (tok.empty()) continue;
    const auto action = tok.size() == 1 ? entanglement::parse_action(tok[0]) : std::nullopt;
    if (!action) throw ScriptError("line " + std::to_string(line_no) + ": expected one action");
    out << ++step << ". A " << tok[0] << " -> ";
    try {
      session = entanglement::step(session, *action);
    } catch (const RuleError& e) {
      out << "rejected: " << e.what() << "\n";
      continue;
    }
    out << "B " << entanglement::action_name(*session.last_partner_action()) << " "
        << (session.last_outcome() == entanglement::StepOutcome::Synced ? "synced" : "wrong") << " position "
        << session.position() << "/" << session.level().course_a.size() << " synced " << session.synced_count()
        << " wrong_count " << session.wrong_count() << " decoherence " << session.decoherence() << " "
        << entanglement::status_name(session.status()) << "\n";
  }
  switch (session.status()) {
    case entanglement::Status::Won: out << "Won, score " << entanglement::level_score(session) << "\n"; break;
    case entanglement::Status::Failed: out << "Failed\n"; break;
    case entanglement::Status::InProgress: out << "InProgress\n"; break;
  }
  return out.str();
}

std::string simulate_circuits(const content::Content& c, int level_id, std::istream& script) {
  const auto it = c.circuits.find(level_id);
  if (it == c.circuits.end()) throw ScriptError("no circuits level " + std::to_string(level_id));
  std::ostringstream out;
  auto session = circuits::start_level(it->second);
  out << "circuits level " << level_id << ": " << it->second->max_columns << " columns, penalty "
      << (it->second->penalty_enabled ? "on" : "off") << ", target state " << fmt(it->second->target_state) << "\n";
  std::size_t line_no = 0;
  int step = 0;
  for (std::string line; std::getline(script, line);) {
    ++line_no;
    const auto tok = tokens_of(line);
    if (tok.empty()) continue;
    const auto bad = [&] { return ScriptError("line " + std::to_string(line_no) + ": cannot parse '" + line + "'"); };
    std::string move;
    for (const auto& t : tok) move += (move.empty() ? "" : " ") + t;
    out << ++step << ". " << move << " -> ";
    try {
      if (tok[0] == "place" && tok.size() >= 4) {
        const auto kind = quantum::parse_gate_kind(tok[1]);
        if (!kind) throw bad();
        if (*kind == quantum::GateKind::CNOT) {
          if (tok.size() != 5) throw bad();
          session = circuits::place_gate(
              session, quantum::Gate::cnot(to_int(tok[3], line_no), to_int(tok[4], line_no)), to_int(tok[2], line_no));
        } else {
          if (tok.size() != 4) throw bad();
          session = circuits::place_gate(session, quantum::Gate::single(*kind), to_int(tok[2], line_no),
                                         to_int(tok[3], line_no));
        }
      } else if (tok[0] == "remove" && (tok.size() == 2 || tok.size() == 3)) {
        session = circuits::remove_gate(session, to_int(tok[1], line_no),
                                        tok.size() == 3 ? std::optional<int>(to_int(tok[2], line_no)) : std::nullopt);
      } else {
        throw bad();
      }
    } catch (const RuleError& e) {
      out << "rejected: " << e.what() << "\n";
      continue;
    }
    const auto eval = circuits::evaluate(session);
    out << "output " << fmt(eval.output_state) << " fish " << session.fish().fish_remaining << " points "
        << session.fish().points_remaining << " outfit " << session.fish().outfit_stage << " "
        << circuits::status_name(session.status()) << "\n";
  }
  switch (session.status()) {
    case circuits::Status::Won: out << "Won, score " << circuits::level_score(session) << "\n"; break;
    case circuits::Status::Exhausted: out << "Exhausted, retry the level\n"; break;
    case circuits::Status::InProgress: out << "InProgress\n"; break;
  }
  return out.str();
}

}  // namespace

std::string simulate(const content::Content& content, GameId game, int level_id, std::istream& script) {
  switch (game) {
    case GameId::Bloch: return simulate_bloch(content, level_id, script);
    case GameId::Entanglement: return simulate_entanglement(content, level_id, script);
    case GameId::Circuits: return simulate_circuits(content, level_id, script);
  }
  throw ScriptError("unknown game");
}

}  // namespace qq::authoring
