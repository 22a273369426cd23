// Serial reference vs OpenMP kernels on the workloads the audits use.

#include <benchmark/benchmark.h>

#include "cdc/codes.hpp"
#include "cdc/configurations.hpp"
#include "cdc/grassmannian.hpp"
#include "cdc/kernels.hpp"
#include "cdc/rank_code.hpp"

using namespace cdc;

namespace {

const ConstantDimensionCode& code() {
  static const auto c = extended_lmrd(ExtendedVariant::A);
  return c;
}

const std::vector<Subspace>& solids() {
  static const auto s = enumerate_grassmannian(8, 4);
  return s;
}

template <class Fn>
void run(benchmark::State& state, Fn fn) {
  for (auto _ : state) benchmark::DoNotOptimize(fn());
}

}  // namespace

static void BM_Distances_Serial(benchmark::State& s) { run(s, [] { return kernels::serial::pairwise_distances(code().words()); }); }
static void BM_Distances_Omp(benchmark::State& s) { run(s, [] { return kernels::omp::pairwise_distances(code().words()); }); }

static void BM_RankDistances_Serial(benchmark::State& s) {
  const auto g = gabidulin();
  run(s, [&] { return kernels::serial::pairwise_rank_distances(g.words); });
}
static void BM_RankDistances_Omp(benchmark::State& s) {
  const auto g = gabidulin();
  run(s, [&] { return kernels::omp::pairwise_rank_distances(g.words); });
}

// The admissible-solid scan: 200787 candidates against the lifted code.
static void BM_FilterMaxMeet_Serial(benchmark::State& s) {
  const auto c = lifted_gabidulin();
  run(s, [&] { return kernels::serial::filter_max_meet(solids(), c.words(), 1); });
}
static void BM_FilterMaxMeet_Omp(benchmark::State& s) {
  const auto c = lifted_gabidulin();
  run(s, [&] { return kernels::omp::filter_max_meet(solids(), c.words(), 1); });
}

static void BM_Incidence_Serial(benchmark::State& s) { run(s, [] { return kernels::serial::incidence_counts(code().words(), 8); }); }
static void BM_Incidence_Omp(benchmark::State& s) { run(s, [] { return kernels::omp::incidence_counts(code().words(), 8); }); }

static void BM_BuildGraph_Serial(benchmark::State& s) {
  const auto& w = solids();
  const std::size_t n = static_cast<std::size_t>(s.range(0));
  run(s, [&] { return kernels::serial::build_graph(n, [&](std::size_t a, std::size_t b) { return subspace_distance(w[a], w[b]) >= 6; }); });
}
static void BM_BuildGraph_Omp(benchmark::State& s) {
  const auto& w = solids();
  const std::size_t n = static_cast<std::size_t>(s.range(0));
  run(s, [&] { return kernels::omp::build_graph(n, [&](std::size_t a, std::size_t b) { return subspace_distance(w[a], w[b]) >= 6; }); });
}

BENCHMARK(BM_Distances_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Distances_Omp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankDistances_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RankDistances_Omp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FilterMaxMeet_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FilterMaxMeet_Omp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Incidence_Serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Incidence_Omp)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildGraph_Serial)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildGraph_Omp)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
