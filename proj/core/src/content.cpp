#include "qq/content.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <system_error>

namespace qq::content {
namespace fs = std::filesystem;
using progression::GameId;

fs::path level_path(const fs::path& levels_dir, GameId game, int level_id) {
  std::ostringstream name;
  name << std::setw(2) << std::setfill('0') << level_id << ".json";
  return levels_dir / std::string(progression::game_name(game)) / name.str();
}

codec::json read_json_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw codec::SchemaError("cannot open " + path.string());
  try {
    return codec::json::parse(in);
  } catch (const codec::json::parse_error& e) {
    throw codec::SchemaError("invalid JSON: " + std::string(e.what()));
  }
}

void write_file_atomic(const fs::path& path, const std::string& text) {
  fs::create_directories(path.parent_path());
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << text;
    out.flush();
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  fs::rename(tmp, path);
}

bool Content::has_level(GameId game, int level_id) const {
  switch (game) {
    case GameId::Bloch: return bloch.contains(level_id);
    case GameId::Entanglement: return entanglement.contains(level_id);
    case GameId::Circuits: return circuits.contains(level_id);
  }
  return false;
}

namespace {

std::vector<fs::path> json_files(const fs::path& dir) {
  std::vector<fs::path> files;
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) return files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  return files;
}

template <typename Level, typename Parse>
void load_game(const fs::path& levels_dir, GameId game, Parse parse, std::map<int, std::shared_ptr<const Level>>& out,
               std::vector<Issue>& issues) {
  const fs::path dir = levels_dir / std::string(progression::game_name(game));
  for (const auto& file : json_files(dir)) {
    try {
      auto level = std::make_shared<const Level>(parse(read_json_file(file)));
      if (file.filename() != level_path(levels_dir, game, level->id).filename()) {
        issues.push_back({file.string(), "file name does not match level id " + std::to_string(level->id)});
        continue;
      }
      out.emplace(level->id, std::move(level));
    } catch (const codec::SchemaError& e) {
      issues.push_back({file.string(), e.what()});
    }
  }
  for (int id = 1; id <= kLevelsPerGame; ++id)
    if (!out.contains(id) && !fs::exists(level_path(levels_dir, game, id)))
      issues.push_back({level_path(levels_dir, game, id).string(), "level file missing"});
}

}  // namespace

LoadResult load_content(const fs::path& levels_dir, const fs::path& quizzes_dir) {
  LoadResult r;
  load_game<bloch::BlochLevel>(levels_dir, GameId::Bloch, codec::bloch_level_from_json, r.content.bloch, r.issues);
  load_game<entanglement::EntanglementLevel>(levels_dir, GameId::Entanglement, codec::entanglement_level_from_json,
                                             r.content.entanglement, r.issues);
  load_game<circuits::CircuitLevel>(levels_dir, GameId::Circuits, codec::circuit_level_from_json, r.content.circuits,
                                    r.issues);
  for (const auto& file : json_files(quizzes_dir)) {
    try {
      auto q = std::make_shared<const quiz::Quiz>(codec::quiz_from_json(read_json_file(file)));
      if (r.content.quizzes.contains(q->id)) {
        r.issues.push_back({file.string(), "duplicate quiz id " + q->id});
        continue;
      }
      r.content.quizzes.emplace(q->id, std::move(q));
    } catch (const codec::SchemaError& e) {
      r.issues.push_back({file.string(), e.what()});
    }
  }
  return r;
}

}  // namespace qq::content
