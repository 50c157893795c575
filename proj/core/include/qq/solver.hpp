#pragma once

// Breadth-first level solvers used by the authoring tools.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "qq/bloch_game.hpp"
#include "qq/circuits_game.hpp"
#include "qq/entanglement_game.hpp"

namespace qq::solver {

inline constexpr int kDefaultMaxDepth = 8;
inline constexpr double kDedupResolution = 1e-6;

/// Phase-normalized, rounded key: the state is rotated so its first
/// largest-magnitude amplitude is real positive, then each component is
/// rounded to kDedupResolution.
using StateKey = std::array<std::int64_t, 8>;
StateKey phase_normalized_key(const quantum::StateVector& state);

/// Shortest gate sequence from start to target (global phase ignored), or
/// nullopt when none exists within max_depth. Gates are tried in the
/// level's allowed_gates order, so ties resolve deterministically. The
/// result is replayed through the game engine before being returned.
std::optional<std::vector<quantum::GateKind>> solve_bloch(const bloch::BlochLevel& level,
                                                          int max_depth = kDefaultMaxDepth);

/// Fewest-column grid whose matrix equals the target entry-wise. Grids
/// are searched column by column up to max_columns (level.max_columns
/// when negative). Single-gate columns are tried before CNOT and before
/// two-gate columns. The result is replayed through the game engine.
std::optional<std::vector<circuits::GridPlacement>> solve_circuit(const circuits::CircuitLevel& level,
                                                                  int max_columns = -1);

/// Number of columns a placement list occupies.
int columns_used(const std::vector<circuits::GridPlacement>& placements);

/// The perfect run (cat A's required actions), if the level is valid.
std::optional<std::vector<entanglement::Action>> solve_entanglement(const entanglement::EntanglementLevel& level);

}  // namespace qq::solver
