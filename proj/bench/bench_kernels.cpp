// Serial reference against the OpenMP kernel for the three exhaustive loops.

#include <benchmark/benchmark.h>
#include <omp.h>

#include "g2inst/census.hpp"
#include "g2inst/symmetry.hpp"

using namespace g2inst;

namespace {

const RelationTable& relations() {
  static const RelationTable table = relation_table();
  return table;
}

void BM_CensusSerialReference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::run_census_serial(CensusMode::free, relations()));
}

void BM_CensusParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(run_census(CensusMode::free, relations()));
}

void BM_StabilizerSerialReference(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(reference::stabilizer_of_phi_serial());
}

void BM_StabilizerParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(stabilizer_of_phi());
}

void BM_OrbitsSerialReference(benchmark::State& state) {
  const auto subset = nonflat_irreducible_rigid_set(CensusMode::free, relations());
  const auto gens = aut_generators();
  for (auto _ : state) benchmark::DoNotOptimize(reference::orbit_count_serial(subset, gens, 1024));
}

void BM_OrbitsParallel(benchmark::State& state) {
  omp_set_num_threads(static_cast<int>(state.range(0)));
  static const auto group = aut_orbifold();
  const auto subset = nonflat_irreducible_rigid_set(CensusMode::free, relations());
  for (auto _ : state) benchmark::DoNotOptimize(orbit_count(subset, group));
}

}  // namespace

BENCHMARK(BM_CensusSerialReference)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CensusParallel)->RangeMultiplier(2)->Range(1, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_StabilizerSerialReference)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_StabilizerParallel)->RangeMultiplier(2)->Range(1, 8)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrbitsSerialReference)->Unit(benchmark::kMillisecond)->Iterations(1);
BENCHMARK(BM_OrbitsParallel)->RangeMultiplier(2)->Range(1, 8)->Unit(benchmark::kMillisecond)->Iterations(1);

BENCHMARK_MAIN();
