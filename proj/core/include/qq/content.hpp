#pragma once

#include <filesystem>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "qq/codec.hpp"

namespace qq::content {

/// levels_dir/<game>/NN.json
std::filesystem::path level_path(const std::filesystem::path& levels_dir, progression::GameId game, int level_id);

/// Throws codec::SchemaError when the file is missing or not JSON.
codec::json read_json_file(const std::filesystem::path& path);

/// Writes through a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, const std::string& text);

struct Content {
  std::map<int, std::shared_ptr<const bloch::BlochLevel>> bloch;
  std::map<int, std::shared_ptr<const entanglement::EntanglementLevel>> entanglement;
  std::map<int, std::shared_ptr<const circuits::CircuitLevel>> circuits;
  std::map<std::string, std::shared_ptr<const quiz::Quiz>> quizzes;

  bool has_level(progression::GameId game, int level_id) const;
};

struct Issue {
  std::string where;
  std::string message;
};

struct LoadResult {
  Content content;
  std::vector<Issue> issues;  // files that failed to parse, misnamed or missing levels
};

/// Loads every level and quiz bank it can; problems are collected rather than
/// thrown so one bad file does not hide the rest.
LoadResult load_content(const std::filesystem::path& levels_dir, const std::filesystem::path& quizzes_dir);

}  // namespace qq::content
