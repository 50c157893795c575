#pragma once

// JSON encodings shared by level files, quiz banks, profiles and the HTTP API.
// A complex number is [re, im], a state an array of complex numbers and a
// matrix a row-major array of rows.

#include <nlohmann/json.hpp>
#include <stdexcept>
#include <string>

#include "qq/bloch_game.hpp"
#include "qq/circuits_game.hpp"
#include "qq/entanglement_game.hpp"
#include "qq/progression.hpp"
#include "qq/quantum.hpp"
#include "qq/quiz_engine.hpp"

namespace qq::codec {

using nlohmann::json;

/// Malformed document: missing field, wrong type, or a value the domain
/// types reject (unnormalized state, non-unitary matrix, unknown gate...).
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

json to_json(quantum::Complex z);
json to_json(const quantum::StateVector& s);
json to_json(const quantum::UnitaryMatrix& m);
json to_json(const quantum::BlochPoint& p);
json to_json(const quantum::ColorClass& c);

quantum::Complex complex_from_json(const json& j);
quantum::StateVector state_from_json(const json& j);
quantum::UnitaryMatrix matrix_from_json(const json& j);

/// {"gate":"H","column":0,"wire":0} or {"gate":"CNOT","column":1,"control":0,"target":1}
json to_json(const circuits::GridPlacement& p);
circuits::GridPlacement grid_placement_from_json(const json& j);

json to_json(const bloch::BlochLevel& level);
json to_json(const entanglement::EntanglementLevel& level);
json to_json(const circuits::CircuitLevel& level);
bloch::BlochLevel bloch_level_from_json(const json& j);
entanglement::EntanglementLevel entanglement_level_from_json(const json& j);
circuits::CircuitLevel circuit_level_from_json(const json& j);

json to_json(const quiz::Quiz& quiz);
quiz::Quiz quiz_from_json(const json& j);
/// What a client may see: never a correct_index.
json quiz_client_view(const quiz::Quiz& quiz);
json to_json(const quiz::GradeResult& result);
json to_json(const quiz::QuestionFeedback& feedback);

json to_json(const progression::PlayerProfile& profile);
progression::PlayerProfile profile_from_json(const json& j);

/// Canonical text of a document: two-space indent, sorted keys, trailing
/// newline. Persisted files use this form so reloading is byte-stable.
std::string canonical_dump(const json& j);

}  // namespace qq::codec
