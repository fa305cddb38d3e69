// Microbenchmarks for the hot paths: the two radical algorithms, vertex
// classification, the subset-enumeration oracle and document round-trips.

#include <benchmark/benchmark.h>

#include <random>

#include "evoalg/evoalg.hpp"

namespace {

using namespace evoalg;

EvolutionAlgebra random_algebra(std::mt19937& rng, int dim, double entry_prob) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> value(1, 6);
  std::vector<std::vector<Rational>> matrix(dim, std::vector<Rational>(dim));
  for (int i = 0; i < dim; ++i) {
    if (coin(rng) < 0.2) continue;  // zero row
    for (int k = 0; k < dim; ++k) {
      if (coin(rng) < entry_prob) {
        const int v = value(rng);
        matrix[i][k] = Rational(v <= 3 ? v : 3 - v);
      }
    }
  }
  return EvolutionAlgebra(std::move(matrix));
}

void BM_RadicalGraph(benchmark::State& state) {
  std::mt19937 rng(11);
  const auto alg = random_algebra(rng, static_cast<int>(state.range(0)), 4.0 / state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(absorption_radical_graph(alg));
  }
}
BENCHMARK(BM_RadicalGraph)->Arg(8)->Arg(32)->Arg(128)->Arg(256);

void BM_RadicalSeries(benchmark::State& state) {
  std::mt19937 rng(11);
  const auto alg = random_algebra(rng, static_cast<int>(state.range(0)), 4.0 / state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(absorption_radical_series(alg));
  }
}
BENCHMARK(BM_RadicalSeries)->Arg(8)->Arg(32)->Arg(128)->Arg(256);

void BM_ClassifyVertices(benchmark::State& state) {
  std::mt19937 rng(13);
  const DiGraph g = from_algebra(
      random_algebra(rng, static_cast<int>(state.range(0)), 4.0 / state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify_vertices(g));
  }
}
BENCHMARK(BM_ClassifyVertices)->Arg(32)->Arg(128)->Arg(512);

void BM_OracleIntersection(benchmark::State& state) {
  std::mt19937 rng(17);
  const auto alg = random_algebra(rng, static_cast<int>(state.range(0)), 0.3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_radical_intersection(alg));
  }
}
BENCHMARK(BM_OracleIntersection)->Arg(8)->Arg(12)->Arg(16);

void BM_DocumentRoundTrip(benchmark::State& state) {
  std::mt19937 rng(19);
  const std::string doc =
      serialize_algebra(random_algebra(rng, static_cast<int>(state.range(0)), 0.4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(serialize_algebra(parse_algebra(doc)));
  }
}
BENCHMARK(BM_DocumentRoundTrip)->Arg(16)->Arg(64);

}  // namespace

BENCHMARK_MAIN();
