// qq: content authoring and server launcher.
//
// Exit codes: 0 success, 1 content or runtime error, 2 usage error.

#include <CLI11.hpp>

#include <pthread.h>
#include <signal.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "qq/authoring.hpp"
#include "qq/http_server.hpp"
#include "qq/solver.hpp"

namespace {

namespace fs = std::filesystem;
using namespace qq;

std::string env_or(const char* name, std::string fallback) {
  const char* v = std::getenv(name);
  return v && *v ? std::string(v) : fallback;
}

int run_validate(const fs::path& levels_dir, const fs::path& quizzes_dir) {
  const auto report = authoring::validate_all(levels_dir, quizzes_dir);
  for (const auto& line : report.lines) std::cout << line << "\n";
  for (const auto& p : report.problems) std::cout << "ERROR " << p.where << ": " << p.message << "\n";
  std::cout << "validate-all: " << report.lines.size() << " items ok, " << report.problems.size() << " problems\n";
  return report.ok() ? 0 : 1;
}

int run_solve(const fs::path& file, int max_depth) {
  const auto j = content::read_json_file(file);
  const auto game = progression::parse_game(j.value("game", std::string{}));
  if (!game) throw codec::SchemaError(file.string() + ": missing or unknown \"game\"");
  switch (*game) {
    case progression::GameId::Bloch: {
      const auto level = codec::bloch_level_from_json(j);
      const auto sol = solver::solve_bloch(level, max_depth);
      if (!sol) {
        std::cout << "no solution within depth " << max_depth << "\n";
        return 1;
      }
      std::cout << "length " << sol->size() << ":";
      for (auto g : *sol) std::cout << " " << quantum::gate_name(g);
      std::cout << "\n";
      return 0;
    }
    case progression::GameId::Entanglement: {
      const auto level = codec::entanglement_level_from_json(j);
      const auto sol = solver::solve_entanglement(level);
      if (!sol) {
        std::cout << "level is invalid\n";
        return 1;
      }
      std::cout << "length " << sol->size() << ":";
      for (auto a : *sol) std::cout << " " << entanglement::action_name(a);
      std::cout << "\n";
      return 0;
    }
    case progression::GameId::Circuits: {
      const auto level = codec::circuit_level_from_json(j);
      const auto sol = solver::solve_circuit(level);
      if (!sol) {
        std::cout << "no grid within " << level.max_columns << " columns\n";
        return 1;
      }
      std::cout << solver::columns_used(*sol) << " columns:\n";
      for (const auto& p : *sol) {
        std::cout << "  place " << quantum::gate_name(p.gate.kind) << " " << p.column;
        if (p.gate.kind == quantum::GateKind::CNOT)
          std::cout << " " << p.gate.control << " " << p.gate.target;
        else
          std::cout << " " << p.wire.value_or(0);
        std::cout << "\n";
      }
      return 0;
    }
  }
  return 1;
}

int run_simulate(const fs::path& levels_dir, const fs::path& quizzes_dir, const std::string& game_name, int level,
                 const fs::path& script) {
  const auto game = progression::parse_game(game_name);
  if (!game) {
    std::cerr << "unknown game: " << game_name << "\n";
    return 2;
  }
  const auto loaded = content::load_content(levels_dir, quizzes_dir);
  std::ifstream in(script);
  if (!in) {
    std::cerr << "cannot read " << script << "\n";
    return 2;
  }
  std::cout << authoring::simulate(loaded.content, *game, level, in);
  return 0;
}

int run_serve(int port, const std::string& host, const fs::path& data_dir, const fs::path& levels_dir,
              const fs::path& quizzes_dir, const std::string& web_dir, bool shuffle) {
  auto loaded = content::load_content(levels_dir, quizzes_dir);
  for (const auto& i : loaded.issues) std::cerr << "content: " << i.where << ": " << i.message << "\n";
  if (!loaded.issues.empty()) return 1;
  service::Service svc(service::Config{data_dir, shuffle}, std::move(loaded.content));
  std::optional<fs::path> web;
  if (!web_dir.empty()) web = web_dir;
  service::HttpServer server(svc, &std::cout, web);

  // Block the stop signals everywhere and wait for them on one thread, so stop() never runs in a handler.
  sigset_t stop_signals;
  sigemptyset(&stop_signals);
  sigaddset(&stop_signals, SIGINT);
  sigaddset(&stop_signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &stop_signals, nullptr);
  std::thread watcher([&] {
    int sig = 0;
    sigwait(&stop_signals, &sig);
    server.stop();
  });

  std::cerr << "listening on " << host << ":" << port << "\n";
  const bool ok = server.listen(host, port);
  kill(getpid(), SIGTERM);  // wakes the watcher if listen returned on its own
  watcher.join();
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"QubitQuest content tools and server"};
  app.require_subcommand(1);

  std::string levels_dir = env_or("QQ_LEVELS_DIR", "content/levels");
  std::string quizzes_dir = env_or("QQ_QUIZZES_DIR", "content/quizzes");
  app.add_option("--levels-dir", levels_dir, "Level directory (env QQ_LEVELS_DIR)");
  app.add_option("--quizzes-dir", quizzes_dir, "Quiz directory (env QQ_QUIZZES_DIR)");

  auto* validate = app.add_subcommand("validate-all", "Check every level and quiz bank");

  auto* solve = app.add_subcommand("solve", "Print the shortest solution of one level file");
  std::string solve_file;
  int max_depth = solver::kDefaultMaxDepth;
  solve->add_option("file", solve_file)->required()->check(CLI::ExistingFile);
  solve->add_option("--max-depth", max_depth, "Bloch search depth")->check(CLI::Range(0, 16));

  auto* simulate = app.add_subcommand("simulate", "Replay a move script and print the transcript");
  std::string sim_game;
  int sim_level = 1;
  std::string sim_script;
  simulate->add_option("game", sim_game)->required();
  simulate->add_option("level", sim_level)->required()->check(CLI::Range(1, 12));
  simulate->add_option("script", sim_script)->required()->check(CLI::ExistingFile);

  auto* serve = app.add_subcommand("serve", "Run the HTTP service");
  int port = std::stoi(env_or("QQ_PORT", "8080"));
  std::string host = env_or("QQ_HOST", "0.0.0.0");
  std::string data_dir = env_or("QQ_DATA_DIR", "data");
  std::string web_dir = env_or("QQ_WEB_DIR", "");
  bool shuffle = false;
  serve->add_option("--port", port, "Port (env QQ_PORT)")->check(CLI::Range(0, 65535));
  serve->add_option("--host", host, "Bind address (env QQ_HOST)");
  serve->add_option("--data-dir", data_dir, "Profile storage (env QQ_DATA_DIR)");
  serve->add_option("--web-dir", web_dir, "Static web client to mount at / (env QQ_WEB_DIR)");
  serve->add_flag("--shuffle-options", shuffle, "Shuffle quiz answer options per attempt");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate) return run_validate(levels_dir, quizzes_dir);
    if (*solve) return run_solve(solve_file, max_depth);
    if (*simulate) return run_simulate(levels_dir, quizzes_dir, sim_game, sim_level, sim_script);
    if (*serve) return run_serve(port, host, data_dir, levels_dir, quizzes_dir, web_dir, shuffle);
  } catch (const authoring::ScriptError& e) {
    std::cerr << "script: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
