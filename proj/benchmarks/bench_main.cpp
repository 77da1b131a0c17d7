#include <benchmark/benchmark.h>

#include "cutoffmatch/cutoff_engine.hpp"
#include "cutoffmatch/egalitarian.hpp"
#include "cutoffmatch/feasibility.hpp"
#include "cutoffmatch/funding_flow.hpp"
#include "cutoffmatch/milp.hpp"
#include "cutoffmatch/random_instance.hpp"

using namespace cutoffmatch;

namespace {

Instance sized(int applicants, int projects, int supervisors) {
  RandomInstanceParams params;
  params.applicants = applicants;
  params.projects = projects;
  params.supervisors = supervisors;
  return random_instance(params, 42);
}

void BM_FeasibilityCheck(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = sized(n, n / 2, n / 4 + 1);
  PortableRng rng(1);
  const auto m = random_valid_matching(inst, rng);
  for (auto _ : state) benchmark::DoNotOptimize(check_feasibility(inst, m));
}
BENCHMARK(BM_FeasibilityCheck)->Arg(8)->Arg(32)->Arg(128);

void BM_CutoffEngine(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = sized(n, n / 2, n / 4 + 1);
  for (auto _ : state) {
    const auto r = solve_cutoff_stable(inst);
    state.counters["calls"] = static_cast<double>(r.trace.feasibility_calls);
  }
}
BENCHMARK(BM_CutoffEngine)->Arg(8)->Arg(16)->Arg(32);

void BM_Egalitarian(benchmark::State& state) {
  const auto inst = sized(12, 6, 4);
  const auto m = solve_cutoff_stable(inst).matching;
  const auto targets = default_targets(inst, m);
  for (auto _ : state) benchmark::DoNotOptimize(egalitarian_allocation(inst, m, targets));
}
BENCHMARK(BM_Egalitarian);

void BM_MaxCutoffMilp(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = sized(n, 3, 2);
  for (auto _ : state) {
    const auto r = solve_max_cutoff_stable(inst);
    state.counters["nodes"] = static_cast<double>(r.nodes);
  }
}
BENCHMARK(BM_MaxCutoffMilp)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
