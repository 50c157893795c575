#include <gtest/gtest.h>

#include "live_server.hpp"

using qq::codec::json;

TEST(Http, RoundTripOverLoopback) {
  const auto dir = testsvc::fresh_dir("http");
  {
    testsvc::LiveServer server(dir);
    testsvc::Client c(server.port());
    EXPECT_EQ(c.get("/api/health").status, 200);
    EXPECT_EQ(c.get("/api/profile").status, 401);
    const auto created = c.post("/api/profiles", {{"nickname", "Ada"}});
    ASSERT_EQ(created.status, 201);
    c.token = created.body.at("token");
    EXPECT_EQ(c.post("/api/games/bloch/levels/1/session").status, 201);
    const auto won = c.post("/api/games/bloch/levels/1/moves", {{"gate", "X"}});
    EXPECT_EQ(won.status, 200);
    EXPECT_EQ(won.body.at("awarded"), 10);
    EXPECT_EQ(c.get("/api/profile?x=1").body.at("total_points"), 10);
    EXPECT_EQ(c.get("/not-api").status, 404);

    const auto log = server.log();
    EXPECT_NE(log.find("\"path\":\"/api/games/bloch/levels/1/moves\""), std::string::npos);
    std::istringstream lines(log);
    for (std::string line; std::getline(lines, line);) {
      const auto j = json::parse(line);
      EXPECT_TRUE(j.contains("ts") && j.contains("status") && j.contains("duration_ms"));
    }
  }
  std::filesystem::remove_all(dir);
}
