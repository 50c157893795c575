#include <gtest/gtest.h>

#include "paths.hpp"
#include "qq/codec.hpp"
#include "qq/content.hpp"

using namespace qq;
using codec::json;

TEST(Codec, ComplexAndStateEncoding) {
  EXPECT_EQ(codec::to_json(quantum::Complex(0.5, -1)), json::parse("[0.5,-1.0]"));
  EXPECT_EQ(codec::complex_from_json(json::parse("[0, 1]")), quantum::Complex(0, 1));
  EXPECT_EQ(codec::complex_from_json(json::parse("1")), quantum::Complex(1, 0));
  const auto s = codec::state_from_json(json::parse("[[0,0],[1,0]]"));
  EXPECT_EQ(s[1], quantum::Complex(1, 0));
  EXPECT_THROW(codec::state_from_json(json::parse("[[1,0],[1,0]]")), codec::SchemaError);
  EXPECT_THROW(codec::state_from_json(json::parse("[[1,0,0]]")), codec::SchemaError);
  EXPECT_THROW(codec::complex_from_json(json::parse("\"x\"")), codec::SchemaError);
}

TEST(Codec, MatrixIsRowMajor) {
  const auto m = codec::matrix_from_json(json::parse("[[[0,0],[1,0]],[[1,0],[0,0]]]"));
  EXPECT_EQ(m(0, 1), quantum::Complex(1, 0));
  EXPECT_EQ(codec::to_json(m)[0][1], json::parse("[1.0,0.0]"));
  EXPECT_THROW(codec::matrix_from_json(json::parse("[[[1,0],[1,0]],[[1,0],[0,0]]]")), codec::SchemaError);
}

TEST(Codec, GridPlacement) {
  const auto p = codec::grid_placement_from_json(json::parse(R"({"gate":"CNOT","column":2,"control":1,"target":0})"));
  EXPECT_EQ(p.gate, quantum::Gate::cnot(1, 0));
  EXPECT_EQ(p.column, 2);
  EXPECT_EQ(codec::grid_placement_from_json(codec::to_json(p)), p);
  EXPECT_THROW(codec::grid_placement_from_json(json::parse(R"({"gate":"T","column":0,"wire":0})")),
               codec::SchemaError);
}

TEST(Codec, ShippedLevelsRoundTrip) {
  const auto loaded = content::load_content(testpaths::levels(), testpaths::quizzes());
  ASSERT_TRUE(loaded.issues.empty());
  for (const auto& [id, l] : loaded.content.bloch) {
    const auto j = codec::to_json(*l);
    EXPECT_EQ(codec::to_json(codec::bloch_level_from_json(j)), j);
  }
  for (const auto& [id, l] : loaded.content.entanglement) {
    const auto j = codec::to_json(*l);
    EXPECT_EQ(codec::to_json(codec::entanglement_level_from_json(j)), j);
  }
  for (const auto& [id, l] : loaded.content.circuits) {
    const auto j = codec::to_json(*l);
    EXPECT_EQ(codec::to_json(codec::circuit_level_from_json(j)), j);
  }
  for (const auto& [id, q] : loaded.content.quizzes) {
    const auto j = codec::to_json(*q);
    EXPECT_EQ(codec::to_json(codec::quiz_from_json(j)), j);
  }
}

TEST(Codec, ClientViewHidesAnswers) {
  const auto loaded = content::load_content(testpaths::levels(), testpaths::quizzes());
  for (const auto& [id, q] : loaded.content.quizzes) {
    const auto text = codec::quiz_client_view(*q).dump();
    EXPECT_EQ(text.find("correct_index"), std::string::npos) << id;
  }
}

TEST(Codec, ProfileRoundTripIsByteStable) {
  auto p = progression::make_profile("p0123456789abcdef", "Zoë");
  p = progression::award_points(p, progression::GameId::Bloch, 3, 9, "2026-01-01T00:00:00Z", "s1").profile;
  p = progression::award_points(p, progression::GameId::Bloch, 3, 9, "2026-01-01T00:01:00Z", "s2").profile;
  p = quiz::record_attempt(p, "assessment", 4);
  const auto text = codec::canonical_dump(codec::to_json(p));
  const auto back = codec::profile_from_json(json::parse(text));
  EXPECT_EQ(back, p);
  EXPECT_EQ(codec::canonical_dump(codec::to_json(back)), text);
  auto broken = json::parse(text);
  broken.erase("nickname");
  EXPECT_THROW(codec::profile_from_json(broken), codec::SchemaError);
}

TEST(Codec, LevelSchemaErrors) {
  EXPECT_THROW(codec::bloch_level_from_json(json::parse(R"({"game":"bloch","id":1})")), codec::SchemaError);
  auto j = codec::to_json(*content::load_content(testpaths::levels(), testpaths::quizzes()).content.bloch.at(1));
  j["allowed_gates"] = json::array({"Q"});
  EXPECT_THROW(codec::bloch_level_from_json(j), codec::SchemaError);
}
