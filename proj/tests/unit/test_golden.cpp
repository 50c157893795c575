#include <gtest/gtest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "paths.hpp"
#include "qq/authoring.hpp"

using namespace qq;
namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::stringstream s;
  s << std::ifstream(p).rdbuf();
  return s.str();
}

}  // namespace

// <game>_<NN>_<name>.script replays into <game>_<NN>_<name>.txt
TEST(GoldenTranscripts, MatchFrozenOutput) {
  const auto content = content::load_content(testpaths::levels(), testpaths::quizzes()).content;
  const std::regex name(R"(([a-z]+)_(\d\d)_.*)");
  int checked = 0;
  for (const auto& entry : fs::directory_iterator(testpaths::golden())) {
    if (entry.path().extension() != ".script") continue;
    std::smatch m;
    const auto stem = entry.path().stem().string();
    ASSERT_TRUE(std::regex_match(stem, m, name)) << stem;
    const auto game = progression::parse_game(m[1].str());
    ASSERT_TRUE(game) << stem;
    std::ifstream script(entry.path());
    const auto transcript = authoring::simulate(content, *game, std::stoi(m[2].str()), script);
    auto expected_path = entry.path();
    expected_path.replace_extension(".txt");
    EXPECT_EQ(transcript, slurp(expected_path)) << stem;
    ++checked;
  }
  EXPECT_GE(checked, 9);
}

TEST(GoldenTranscripts, BadScriptLinesAreErrors) {
  const auto content = content::load_content(testpaths::levels(), testpaths::quizzes()).content;
  std::istringstream bad_gate("T\n");
  EXPECT_THROW(authoring::simulate(content, progression::GameId::Bloch, 1, bad_gate), authoring::ScriptError);
  std::istringstream bad_place("place H zero 0\n");
  EXPECT_THROW(authoring::simulate(content, progression::GameId::Circuits, 1, bad_place), authoring::ScriptError);
  std::istringstream no_level("Jump\n");
  EXPECT_THROW(authoring::simulate(content, progression::GameId::Entanglement, 13, no_level), authoring::ScriptError);
}
