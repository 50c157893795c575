#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "qq/content.hpp"
#include "qq/progression.hpp"

namespace qq::authoring {

struct Report {
  std::vector<std::string> lines;     // one per checked item
  std::vector<content::Issue> problems;

  bool ok() const noexcept { return problems.empty(); }
};

/// Schema, engine invariants and solver checks over all shipped content.
Report validate_all(const std::filesystem::path& levels_dir, const std::filesystem::path& quizzes_dir);

/// Same checks on already-loaded content.
Report validate_content(const content::Content& content);

/// A script line that does not parse for the chosen game.
class ScriptError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Replays a move script (one move per line, '#' comments) and returns the
/// transcript. Rule rejections are reported in the transcript and the replay
/// continues; the last line is the final status.
///
///   bloch:         X | H | reset
///   entanglement:  Jump | Crawl | ...
///   circuits:      place H <column> <wire> | place CNOT <column> <control> <target>
///                  | remove <column> [<wire>]
std::string simulate(const content::Content& content, progression::GameId game, int level_id, std::istream& script);

}  // namespace qq::authoring
