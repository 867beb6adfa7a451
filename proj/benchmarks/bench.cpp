#include <benchmark/benchmark.h>

#include "ordrep/axioms.hpp"
#include "ordrep/filters.hpp"
#include "ordrep/formula.hpp"
#include "ordrep/game.hpp"
#include "ordrep/poset.hpp"

using namespace ordrep;

namespace {

const Params k33{Card::finite(3), Card::finite(3)};

void BM_EnumerateFilters(benchmark::State& state) {
  Poset p = standard_poset("boolean", static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_filters(p, k33));
}
BENCHMARK(BM_EnumerateFilters)->Arg(2)->Arg(3)->Arg(4);

void BM_IsRepresentable(benchmark::State& state) {
  Poset p = standard_poset("hexagon_witness");
  for (auto _ : state) benchmark::DoNotOptimize(is_representable(p, k33));
}
BENCHMARK(BM_IsRepresentable);

void BM_GameRepresentable(benchmark::State& state) {
  Poset p = standard_poset("hexagon_witness");
  for (auto _ : state) benchmark::DoNotOptimize(game_representable(p, k33));
}
BENCHMARK(BM_GameRepresentable);

void BM_SurvivalDepth(benchmark::State& state) {
  Poset p = standard_poset("M3");
  GamePosition pos{ElementSet::single(p.index_of("a")), ElementSet::single(p.index_of("b"))};
  for (auto _ : state) {
    GameSolver solver(p, k33);
    benchmark::DoNotOptimize(solver.survival_depth(pos));
  }
}
BENCHMARK(BM_SurvivalDepth);

void BM_BuildPsi(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(build_psi(2, 2, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_BuildPsi)->Arg(1)->Arg(2)->Arg(3);

void BM_EvaluatePsi(benchmark::State& state) {
  Poset p = standard_poset("M3");
  FormulaPtr psi = build_psi(2, 2, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    Evaluator ev(p);
    benchmark::DoNotOptimize(ev.evaluate(psi, {}));
  }
}
BENCHMARK(BM_EvaluatePsi)->Arg(1)->Arg(2);

void BM_EmitTptp(benchmark::State& state) {
  FormulaPtr psi = build_psi(2, 2, 3);
  for (auto _ : state) benchmark::DoNotOptimize(emit_tptp(psi, "psi_2_2_3"));
}
BENCHMARK(BM_EmitTptp);

}  // namespace

BENCHMARK_MAIN();
