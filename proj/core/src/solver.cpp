#include "qq/solver.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <memory>
#include <stdexcept>
#include <unordered_set>

namespace qq::solver {
namespace {

using quantum::Complex;
using quantum::GateKind;

std::int64_t quantize(double v) { return std::llround(v / kDedupResolution); }

template <std::size_t N>
struct ArrayHash {
  std::size_t operator()(const std::array<std::int64_t, N>& a) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto v : a) h = (h ^ std::hash<std::int64_t>{}(v)) * 0x100000001b3ULL;
    return h;
  }
};

using MatrixKey = std::array<std::int64_t, 32>;

MatrixKey matrix_key(const quantum::UnitaryMatrix& m) {
  MatrixKey k{};
  for (std::size_t i = 0; i < 16; ++i) {
    k[2 * i] = quantize(m.entries()[i].real());
    k[2 * i + 1] = quantize(m.entries()[i].imag());
  }
  return k;
}

struct ColumnOption {
  circuits::Column column;
  quantum::UnitaryMatrix matrix;
};

std::vector<ColumnOption> column_options(const circuits::CircuitLevel& level) {
  std::vector<GateKind> singles;
  for (auto g : level.allowed_gates)
    if (g != GateKind::CNOT) singles.push_back(g);
  std::vector<circuits::Column> cols;
  for (auto g : singles)
    for (std::size_t w = 0; w < 2; ++w) {
      circuits::Column c;
      c.singles[w] = g;
      cols.push_back(c);
    }
  if (level.allows(GateKind::CNOT))
    for (auto [control, target] : {std::pair{0, 1}, std::pair{1, 0}}) {
      circuits::Column c;
      c.cnot = quantum::Gate::cnot(control, target);
      cols.push_back(c);
    }
  for (auto g0 : singles)
    for (auto g1 : singles) {
      circuits::Column c;
      c.singles = {g0, g1};
      cols.push_back(c);
    }
  std::vector<ColumnOption> out;
  for (auto& c : cols) out.push_back({c, circuits::column_matrix(c)});
  return out;
}

std::vector<circuits::GridPlacement> column_placements(const circuits::Column& c, int index) {
  circuits::CircuitGrid grid(1);
  grid.columns[0] = c;
  auto ps = grid.placements();
  for (auto& p : ps) p.column = index;
  return ps;
}

}  // namespace

StateKey phase_normalized_key(const quantum::StateVector& state) {
  std::size_t k = 0;
  for (std::size_t i = 1; i < state.dim(); ++i)
    if (std::abs(state[i]) > std::abs(state[k]) + kDedupResolution) k = i;
  const Complex phase = std::abs(state[k]) > 0 ? std::conj(state[k]) / std::abs(state[k]) : Complex{1, 0};
  StateKey key{};
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const Complex a = state[i] * phase;
    key[2 * i] = quantize(a.real());
    key[2 * i + 1] = quantize(a.imag());
  }
  return key;
}

std::optional<std::vector<GateKind>> solve_bloch(const bloch::BlochLevel& level, int max_depth) {
  const auto shared = std::make_shared<const bloch::BlochLevel>(level);
  const auto reaches_target = [&](const quantum::StateVector& s) {
    return quantum::equal_up_to_global_phase(s, level.target_state, quantum::kPlayerTolerance);
  };

  struct Node {
    quantum::StateVector state;
    int parent;
    GateKind gate;
    int depth;
  };
  std::vector<Node> nodes;
  std::deque<int> frontier;
  std::unordered_set<StateKey, ArrayHash<8>> seen;

  const auto path_to = [&](int idx) {
    std::vector<GateKind> gates;
    for (int i = idx; i > 0; i = nodes[static_cast<std::size_t>(i)].parent)
      gates.push_back(nodes[static_cast<std::size_t>(i)].gate);
    std::reverse(gates.begin(), gates.end());
    return gates;
  };

  std::optional<std::vector<GateKind>> found;
  nodes.push_back({level.start_state, -1, GateKind::X, 0});
  seen.insert(phase_normalized_key(level.start_state));
  if (reaches_target(level.start_state)) found = std::vector<GateKind>{};
  frontier.push_back(0);

  while (!found && !frontier.empty()) {
    const int idx = frontier.front();
    frontier.pop_front();
    const int depth = nodes[static_cast<std::size_t>(idx)].depth;
    if (depth >= max_depth) continue;
    for (auto g : level.allowed_gates) {
      if (g == GateKind::CNOT) continue;
      auto next = quantum::apply_gate(nodes[static_cast<std::size_t>(idx)].state, quantum::Gate::single(g));
      if (!seen.insert(phase_normalized_key(next)).second) continue;
      const bool hit = reaches_target(next);
      nodes.push_back({std::move(next), idx, g, depth + 1});
      if (hit) {
        found = path_to(static_cast<int>(nodes.size()) - 1);
        break;
      }
      frontier.push_back(static_cast<int>(nodes.size()) - 1);
    }
  }
  if (!found) return std::nullopt;

  auto session = bloch::start_level(shared);
  for (auto g : *found) session = bloch::apply_player_gate(session, g);
  if (session.status() != bloch::Status::Won) throw std::logic_error("solver produced a non-winning sequence");
  return found;
}

std::optional<std::vector<circuits::GridPlacement>> solve_circuit(const circuits::CircuitLevel& level,
                                                                  int max_columns) {
  if (max_columns < 0) max_columns = level.max_columns;
  const auto options = column_options(level);
  const auto matches = [&](const quantum::UnitaryMatrix& m) {
    return quantum::max_entry_diff(m, level.target_matrix) <= quantum::kPlayerTolerance &&
           quantum::max_entry_diff(m.apply(level.input_state), level.target_state) <= quantum::kPlayerTolerance;
  };

  struct Node {
    quantum::UnitaryMatrix matrix;
    int parent;
    int option;
    int depth;
  };
  std::vector<Node> nodes;
  std::deque<int> frontier;
  std::unordered_set<MatrixKey, ArrayHash<32>> seen;

  std::optional<int> hit_node;
  nodes.push_back({quantum::UnitaryMatrix::identity(4), -1, -1, 0});
  seen.insert(matrix_key(nodes.front().matrix));
  if (matches(nodes.front().matrix)) hit_node = 0;
  frontier.push_back(0);

  while (!hit_node && !frontier.empty()) {
    const int idx = frontier.front();
    frontier.pop_front();
    const int depth = nodes[static_cast<std::size_t>(idx)].depth;
    if (depth >= max_columns) continue;
    for (std::size_t o = 0; o < options.size(); ++o) {
      auto m = options[o].matrix * nodes[static_cast<std::size_t>(idx)].matrix;
      if (!seen.insert(matrix_key(m)).second) continue;
      const bool hit = matches(m);
      nodes.push_back({std::move(m), idx, static_cast<int>(o), depth + 1});
      if (hit) {
        hit_node = static_cast<int>(nodes.size()) - 1;
        break;
      }
      frontier.push_back(static_cast<int>(nodes.size()) - 1);
    }
  }
  if (!hit_node) return std::nullopt;

  std::vector<int> chosen;
  for (int i = *hit_node; i > 0; i = nodes[static_cast<std::size_t>(i)].parent)
    chosen.push_back(nodes[static_cast<std::size_t>(i)].option);
  std::reverse(chosen.begin(), chosen.end());
  std::vector<circuits::GridPlacement> placements;
  for (std::size_t c = 0; c < chosen.size(); ++c) {
    auto ps = column_placements(options[static_cast<std::size_t>(chosen[c])].column, static_cast<int>(c));
    placements.insert(placements.end(), ps.begin(), ps.end());
  }

  // Half of a two-gate final column can already match; keep only what the engine needed.
  auto session = circuits::start_level(std::make_shared<const circuits::CircuitLevel>(level));
  std::size_t used = 0;
  while (used < placements.size() && session.status() == circuits::Status::InProgress) {
    const auto& p = placements[used++];
    session = circuits::place_gate(session, p.gate, p.column, p.wire);
  }
  if (session.status() != circuits::Status::Won) throw std::logic_error("solver produced a non-winning grid");
  placements.resize(used);
  return placements;
}

int columns_used(const std::vector<circuits::GridPlacement>& placements) {
  int n = 0;
  for (const auto& p : placements) n = std::max(n, p.column + 1);
  return n;
}

std::optional<std::vector<entanglement::Action>> solve_entanglement(const entanglement::EntanglementLevel& level) {
  if (!entanglement::validate_level(level).empty()) return std::nullopt;
  std::vector<entanglement::Action> out;
  for (const auto& o : level.course_a) out.push_back(o.required_action);
  return out;
}

}  // namespace qq::solver
