#include "gmet/lab.hpp"
#include "gmet/lp.hpp"
#include "gmet/metric.hpp"
#include "gmet/minors.hpp"
#include "gmet/spectral.hpp"
#include "gmet/splits.hpp"

#include "benchmark/benchmark.h"

using namespace gmet;

namespace {

WeightedGraph sample_graph(int n, uint64_t seed) {
  WeightedGraph topo = generate_family({Family::RandomConnected, n, {}, 0.4, seed});
  return with_weights(topo, random_weighting(topo, seed, WeightLaw::UniformUnit));
}

void BM_DistanceMatrix(benchmark::State& state) {
  WeightedGraph g = sample_graph(static_cast<int>(state.range(0)), 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(distance_matrix(g));
  }
}
BENCHMARK(BM_DistanceMatrix)->Arg(8)->Arg(16)->Arg(32);

void BM_Eigenvalues(benchmark::State& state) {
  WeightedGraph g = sample_graph(static_cast<int>(state.range(0)), 2);
  RealMatrix m = to_real(distance_matrix(g));
  for (auto _ : state) {
    benchmark::DoNotOptimize(eigenvalues_symmetric(m));
  }
}
BENCHMARK(BM_Eigenvalues)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_EnumerateSplits(benchmark::State& state) {
  WeightedGraph g = sample_graph(static_cast<int>(state.range(0)), 3);
  RatMatrix d = distance_matrix(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_splits(d));
  }
}
BENCHMARK(BM_EnumerateSplits)->Arg(8)->Arg(10)->Arg(12);

void BM_Decompose(benchmark::State& state) {
  WeightedGraph g = sample_graph(10, 4);
  RatMatrix d = distance_matrix(g);
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(d));
  }
}
BENCHMARK(BM_Decompose);

void BM_DistanceMinorTest(benchmark::State& state) {
  RatMatrix d = distance_matrix(generate_family({Family::Multipartite, 0, {2, 3}, 0.0, 0}));
  for (auto _ : state) {
    benchmark::DoNotOptimize(k23_distance_minor_test(d));
  }
}
BENCHMARK(BM_DistanceMinorTest);

void BM_K23Subdivision(benchmark::State& state) {
  WeightedGraph g = generate_family({Family::Multipartite, 0, {3, 3}, 0.0, 0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(has_k23_subdivision(g));
  }
}
BENCHMARK(BM_K23Subdivision);

void BM_HasMinorNegative(benchmark::State& state) {
  WeightedGraph host = generate_family({Family::Cycle, 10, {}, 0.0, 0});
  WeightedGraph pattern = generate_family({Family::Multipartite, 0, {2, 3}, 0.0, 0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(has_minor(host, pattern));
  }
}
BENCHMARK(BM_HasMinorNegative);

void BM_WeakScanSample(benchmark::State& state) {
  int i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(weak_conjecture_scan(8, 10, 1000 + i++));
  }
}
BENCHMARK(BM_WeakScanSample);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
