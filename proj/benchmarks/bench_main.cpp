#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>

#include "qq/content.hpp"
#include "qq/service.hpp"
#include "qq/solver.hpp"

using namespace qq;
using quantum::Gate;
using quantum::GateKind;

namespace {

std::vector<quantum::Placement> random_circuit(std::mt19937_64& rng, int length) {
  std::uniform_int_distribution<int> kind(0, 5), bit(0, 1);
  std::vector<quantum::Placement> out;
  for (int k = 0; k < length; ++k) {
    const int g = kind(rng);
    if (g == 5) {
      const int c = bit(rng);
      out.push_back({Gate::cnot(c, 1 - c), std::nullopt});
    } else {
      out.push_back({Gate::single(quantum::kSingleQubitGates[static_cast<std::size_t>(g)]), bit(rng)});
    }
  }
  return out;
}

const content::Content& shipped() {
  static const auto c = content::load_content(std::filesystem::path(QQ_BENCH_CONTENT_DIR) / "levels",
                                              std::filesystem::path(QQ_BENCH_CONTENT_DIR) / "quizzes")
                            .content;
  return c;
}

}  // namespace

static void BM_ComposeCircuit(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto circuit = random_circuit(rng, static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(quantum::compose_circuit(circuit, 2));
}
BENCHMARK(BM_ComposeCircuit)->Arg(1)->Arg(8)->Arg(32);

static void BM_ApplyGate(benchmark::State& state) {
  auto s = quantum::StateVector::basis(2, 0);
  const auto h = Gate::single(GateKind::H);
  for (auto _ : state) {
    s = quantum::apply_gate(s, h, 0);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_ApplyGate);

static void BM_ApplyCnot(benchmark::State& state) {
  auto s = quantum::StateVector::basis(2, 2);
  const auto cx = Gate::cnot(0, 1);
  for (auto _ : state) {
    s = quantum::apply_gate(s, cx);
    benchmark::DoNotOptimize(s);
  }
}
BENCHMARK(BM_ApplyCnot);

static void BM_SolveBloch(benchmark::State& state) {
  const auto& level = *shipped().bloch.at(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solver::solve_bloch(level));
}
BENCHMARK(BM_SolveBloch)->Arg(1)->Arg(12);

static void BM_SolveCircuit(benchmark::State& state) {
  const auto& level = *shipped().circuits.at(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(solver::solve_circuit(level));
}
BENCHMARK(BM_SolveCircuit)->Arg(1)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

static void BM_ServiceBlochMove(benchmark::State& state) {
  const auto dir = std::filesystem::temp_directory_path() / "qq_bench_service";
  std::filesystem::remove_all(dir);
  service::Service svc(service::Config{dir, false}, shipped());
  const auto created = svc.handle({"POST", "/api/profiles", "", R"({"nickname":"Bench"})"});
  const std::string auth = "Bearer " + created.body.at("token").get<std::string>();
  svc.handle({"POST", "/api/games/bloch/levels/12/session", auth, ""});
  for (auto _ : state) benchmark::DoNotOptimize(svc.handle({"POST", "/api/games/bloch/levels/12/moves", auth, R"({"gate":"S"})"}));
  std::filesystem::remove_all(dir);
}
BENCHMARK(BM_ServiceBlochMove);

BENCHMARK_MAIN();
