#include <gtest/gtest.h>

#include <fstream>
#include <sstream>
#include <thread>

#include "qq/solver.hpp"
#include "service_fixture.hpp"

using namespace qq;
using codec::json;
using service::Request;
using service::Response;

namespace {

class ServiceTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = testsvc::fresh_dir("unit");
    svc_ = std::make_unique<service::Service>(service::Config{dir_, false}, testsvc::shipped_content(),
                                              testsvc::fixed_clock());
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  Response call(const std::string& method, const std::string& path, const json& body = nullptr,
                const std::string& token = "") {
    Request r{method, path, token.empty() ? "" : "Bearer " + token, body.is_null() ? "" : body.dump()};
    return svc_->handle(r);
  }

  std::string new_player(const std::string& nickname = "Ada") {
    const auto r = call("POST", "/api/profiles", {{"nickname", nickname}});
    EXPECT_EQ(r.status, 201);
    return r.body.at("token");
  }

  static std::string level_url(const std::string& game, int id) {
    return "/api/games/" + game + "/levels/" + std::to_string(id);
  }

  Response win_bloch(const std::string& token, int id) {
    EXPECT_EQ(call("POST", level_url("bloch", id) + "/session", nullptr, token).status, 201);
    const auto sol = solver::solve_bloch(*svc_->content().bloch.at(id));
    Response last;
    for (auto g : *sol) last = call("POST", level_url("bloch", id) + "/moves", {{"gate", quantum::gate_name(g)}}, token);
    return last;
  }

  std::filesystem::path dir_;
  std::unique_ptr<service::Service> svc_;
};

}  // namespace

TEST_F(ServiceTest, HealthAndAuth) {
  EXPECT_EQ(call("GET", "/api/health").status, 200);
  EXPECT_EQ(call("GET", "/api/profile").status, 401);
  EXPECT_EQ(call("GET", "/api/profile", nullptr, "deadbeef").status, 401);
  EXPECT_EQ(call("POST", "/api/profiles", {{"nickname", ""}}).status, 400);
  EXPECT_EQ(call("POST", "/api/profiles", {{"name", "x"}}).status, 400);
  const auto token = new_player();
  EXPECT_EQ(token.size(), 32u);
  const auto p = call("GET", "/api/profile", nullptr, token);
  EXPECT_EQ(p.status, 200);
  EXPECT_EQ(p.body.at("nickname"), "Ada");
  EXPECT_EQ(p.body.at("total_points"), 0);
  EXPECT_EQ(p.body.at("circuits_unlocked"), false);
  EXPECT_EQ(call("GET", "/api/nowhere", nullptr, token).status, 404);
  EXPECT_EQ(call("GET", "/elsewhere").status, 404);
}

TEST_F(ServiceTest, GamesAndLevels) {
  const auto token = new_player();
  const auto games = call("GET", "/api/games", nullptr, token).body.at("games");
  ASSERT_EQ(games.size(), 3u);
  for (const auto& g : games) {
    EXPECT_EQ(g.at("total"), 12);
    EXPECT_EQ(g.at("unlocked"), g.at("game_id") != "circuits");
  }
  EXPECT_EQ(call("GET", "/api/games/bloch/levels", nullptr, token).body.at("levels").size(), 12u);
  EXPECT_EQ(call("GET", level_url("bloch", 13), nullptr, token).status, 404);
  EXPECT_EQ(call("GET", level_url("chess", 1), nullptr, token).status, 404);
  const auto detail = call("GET", level_url("circuits", 1), nullptr, token);
  EXPECT_EQ(detail.status, 200);
  EXPECT_FALSE(detail.body.contains("solution"));
  EXPECT_EQ(call("POST", level_url("circuits", 1) + "/session", nullptr, token).status, 403);
}

TEST_F(ServiceTest, BlochWinAwardsOnceAndReplayHalves) {
  const auto token = new_player();
  EXPECT_EQ(call("POST", level_url("bloch", 1) + "/moves", {{"gate", "X"}}, token).status, 404);
  EXPECT_EQ(call("POST", level_url("bloch", 1) + "/session", nullptr, token).status, 201);
  EXPECT_EQ(call("POST", level_url("bloch", 1) + "/moves", {{"gate", "Q"}}, token).status, 422);
  EXPECT_EQ(call("POST", level_url("bloch", 1) + "/moves", {{"gate", "H"}}, token).status, 422);
  auto r = call("POST", level_url("bloch", 1) + "/moves", {{"gate", "Z"}}, token);
  EXPECT_EQ(r.status, 200);
  r = call("POST", level_url("bloch", 1) + "/moves", {{"move", {{"gate", "X"}}}}, token);
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body.at("status"), "Won");
  EXPECT_EQ(r.body.at("score"), 9);
  EXPECT_EQ(r.body.at("awarded"), 9);
  r = call("POST", level_url("bloch", 1) + "/moves", {{"gate", "X"}}, token);
  EXPECT_EQ(r.status, 409);
  EXPECT_EQ(r.body.at("session").at("status"), "Won");
  EXPECT_EQ(call("GET", "/api/profile", nullptr, token).body.at("total_points"), 9);

  r = win_bloch(token, 1);
  EXPECT_EQ(r.body.at("replay"), true);
  EXPECT_EQ(r.body.at("awarded"), 5);
  EXPECT_EQ(call("GET", "/api/profile", nullptr, token).body.at("total_points"), 14);
  EXPECT_EQ(call("GET", level_url("bloch", 1) + "/session", nullptr, token).body.at("status"), "Won");
}

TEST_F(ServiceTest, BadBodies) {
  const auto token = new_player();
  call("POST", level_url("bloch", 1) + "/session", nullptr, token);
  Request r{"POST", level_url("bloch", 1) + "/moves", "Bearer " + token, "{nope"};
  EXPECT_EQ(svc_->handle(r).status, 400);
  r.body = "[1,2]";
  EXPECT_EQ(svc_->handle(r).status, 400);
  EXPECT_EQ(call("POST", level_url("bloch", 1) + "/moves", {{"gate", 5}}, token).status, 422);
}

TEST_F(ServiceTest, SixBlochLevelsUnlockCircuits) {
  const auto token = new_player();
  for (int id = 1; id <= 5; ++id) EXPECT_EQ(win_bloch(token, id).body.at("status"), "Won");
  EXPECT_EQ(call("GET", "/api/profile", nullptr, token).body.at("circuits_unlocked"), false);
  win_bloch(token, 6);
  EXPECT_EQ(call("GET", "/api/profile", nullptr, token).body.at("circuits_unlocked"), true);

  ASSERT_EQ(call("POST", level_url("circuits", 1) + "/session", nullptr, token).status, 201);
  auto r = call("POST", level_url("circuits", 1) + "/moves", {{"op", "place"}, {"gate", "H"}, {"column", 0}, {"wire", 0}},
                token);
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body.at("colors").size(), 4u);
  r = call("POST", level_url("circuits", 1) + "/moves",
           {{"op", "place"}, {"gate", "CNOT"}, {"column", 1}, {"control", 0}, {"target", 1}}, token);
  EXPECT_EQ(r.body.at("status"), "Won");
  EXPECT_EQ(r.body.at("awarded"), 10);
  EXPECT_EQ(call("GET", "/api/profile", nullptr, token).body.at("total_points"), 70);
}

TEST_F(ServiceTest, CircuitPenaltyThroughApi) {
  const auto token = new_player();
  for (int id = 1; id <= 6; ++id) win_bloch(token, id);
  call("POST", level_url("circuits", 3) + "/session", nullptr, token);
  const json place = {{"op", "place"}, {"gate", "X"}, {"column", 1}, {"wire", 1}};
  const json remove = {{"op", "remove"}, {"column", 1}, {"wire", 1}};
  Response r;
  for (int k = 0; k < 9; ++k) {
    EXPECT_EQ(call("POST", level_url("circuits", 3) + "/moves", place, token).status, 200);
    r = call("POST", level_url("circuits", 3) + "/moves", remove, token);
  }
  EXPECT_EQ(r.body.at("status"), "Exhausted");
  EXPECT_EQ(r.body.at("fish").at("outfit_stage"), 3);
  EXPECT_TRUE(r.body.contains("prompt"));
  EXPECT_EQ(call("POST", level_url("circuits", 3) + "/moves", place, token).status, 409);
  r = call("POST", level_url("circuits", 3) + "/session", nullptr, token);
  EXPECT_EQ(r.body.at("fish").at("fish_remaining"), 9);
  EXPECT_EQ(call("POST", level_url("circuits", 3) + "/moves", {{"op", "twist"}, {"column", 0}}, token).status, 422);
}

TEST_F(ServiceTest, EntanglementThroughApi) {
  const auto token = new_player();
  call("POST", level_url("entanglement", 7) + "/session", nullptr, token);
  const auto& level = *svc_->content().entanglement.at(7);
  Response r;
  for (const auto& o : level.course_a)
    r = call("POST", level_url("entanglement", 7) + "/moves",
             {{"action", entanglement::action_name(o.required_action)}}, token);
  EXPECT_EQ(r.body.at("status"), "Won");
  EXPECT_EQ(r.body.at("mode"), "anti_correlated");
  EXPECT_EQ(r.body.at("awarded"), 10);
  EXPECT_EQ(call("POST", level_url("entanglement", 7) + "/moves", {{"action", "Jump"}}, token).status, 409);
}

TEST_F(ServiceTest, Quizzes) {
  const auto token = new_player();
  const auto list = call("GET", "/api/quizzes", nullptr, token);
  EXPECT_EQ(list.body.at("quizzes").size(), 4u);
  const auto a = call("GET", "/api/quizzes/assessment", nullptr, token);
  EXPECT_EQ(a.status, 200);
  EXPECT_EQ(a.body.dump().find("correct_index"), std::string::npos);
  EXPECT_EQ(a.body.at("default_answers"), json(std::vector<std::string>(10, "idk")));

  auto r = call("POST", "/api/quizzes/assessment/submit", {{"answers", std::vector<std::string>(10, "idk")}}, token);
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body.at("score"), 0);
  EXPECT_FALSE(r.body.contains("per_question"));
  EXPECT_EQ(r.body.dump().find("correct"), std::string::npos);
  EXPECT_EQ(call("POST", "/api/quizzes/assessment/check", {{"question", 0}, {"answer", 1}}, token).status, 403);

  r = call("POST", "/api/quizzes/bloch-quiz/submit", {{"answers", std::vector<int>(10, 1)}}, token);
  EXPECT_EQ(r.status, 200);
  EXPECT_EQ(r.body.at("per_question").size(), 10u);
  EXPECT_EQ(r.body.at("record").at("attempts"), 1);
  EXPECT_EQ(call("POST", "/api/quizzes/bloch-quiz/submit", {{"answers", std::vector<std::string>(10, "idk")}}, token)
                .status,
            422);
  const auto c = call("POST", "/api/quizzes/bloch-quiz/check", {{"question", 1}, {"answer", 2}}, token);
  EXPECT_EQ(c.body.at("correct"), true);
  EXPECT_EQ(call("GET", "/api/quizzes/nope", nullptr, token).status, 404);
  EXPECT_EQ(call("GET", "/api/profile", nullptr, token).body.at("total_points"), 0);
}

TEST_F(ServiceTest, PersistenceSurvivesRestart) {
  const auto token = new_player("Zoë");
  win_bloch(token, 2);
  call("POST", "/api/quizzes/assessment/submit", {{"answers", std::vector<std::string>(10, "idk")}}, token);
  const auto id = call("GET", "/api/profile", nullptr, token).body.at("profile_id").get<std::string>();
  const auto path = dir_ / "profiles" / (id + ".json");
  std::stringstream before;
  before << std::ifstream(path).rdbuf();

  svc_ = std::make_unique<service::Service>(service::Config{dir_, false}, testsvc::shipped_content(),
                                            testsvc::fixed_clock());
  const auto p = call("GET", "/api/profile", nullptr, token);
  EXPECT_EQ(p.status, 200);
  EXPECT_EQ(p.body.at("total_points"), 10);
  std::stringstream after;
  after << std::ifstream(path).rdbuf();
  EXPECT_EQ(before.str(), after.str());
  EXPECT_EQ(codec::canonical_dump(codec::to_json(codec::profile_from_json(json::parse(after.str())))), after.str());
}

TEST_F(ServiceTest, TamperedProfileIsRefused) {
  const auto token = new_player();
  win_bloch(token, 1);
  const auto id = call("GET", "/api/profile", nullptr, token).body.at("profile_id").get<std::string>();
  const auto path = dir_ / "profiles" / (id + ".json");
  auto j = json::parse(std::ifstream(path));
  j["total_points"] = 500;
  std::ofstream(path) << j.dump();
  EXPECT_EQ(call("GET", "/api/profile", nullptr, token).status, 500);
}

TEST_F(ServiceTest, ConcurrentMovesAwardOnce) {
  const auto token = new_player();
  call("POST", level_url("bloch", 1) + "/session", nullptr, token);
  std::atomic<int> ok{0}, conflict{0};
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&] {
      const auto r = call("POST", level_url("bloch", 1) + "/moves", {{"gate", "X"}}, token);
      (r.status == 200 ? ok : conflict)++;
    });
  for (auto& t : threads) t.join();
  EXPECT_EQ(ok.load(), 1);
  EXPECT_EQ(conflict.load(), 7);
  EXPECT_EQ(call("GET", "/api/profile", nullptr, token).body.at("total_points"), 10);
}

TEST_F(ServiceTest, ConcurrentPlayers) {
  std::vector<std::string> tokens;
  for (int k = 0; k < 6; ++k) tokens.push_back(new_player("P" + std::to_string(k)));
  std::vector<std::thread> threads;
  for (const auto& tok : tokens)
    threads.emplace_back([&, tok] {
      for (int id = 1; id <= 3; ++id) win_bloch(tok, id);
    });
  for (auto& t : threads) t.join();
  for (const auto& tok : tokens) EXPECT_EQ(call("GET", "/api/profile", nullptr, tok).body.at("total_points"), 30);
}
