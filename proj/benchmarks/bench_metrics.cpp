#include <benchmark/benchmark.h>

#include <cstdint>
#include <vector>

#include "wmetrics/binary_metrics.hpp"
#include "wmetrics/experiments.hpp"
#include "wmetrics/multiclass_metrics.hpp"
#include "wmetrics/rng.hpp"
#include "wmetrics/stability_bounds.hpp"
#include "wmetrics/types.hpp"

namespace {

using namespace wmetrics;

struct BinaryFixture {
  std::vector<int> truth;
  std::vector<int> prediction;
  WeightVector weights;
};

BinaryFixture make_binary(std::size_t n) {
  Rng rng(7);
  std::vector<int> truth(n);
  std::vector<int> prediction(n);
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    truth[i] = static_cast<int>(rng.below(2));
    prediction[i] = rng.uniform01() < 0.7 ? truth[i] : 1 - truth[i];
    w[i] = rng.uniform(0.5, 2.0);
  }
  return {truth, prediction, WeightVector(std::move(w))};
}

MulticlassLabeledData make_multiclass(std::size_t n, std::size_t k) {
  Rng rng(11);
  std::vector<int> truth(n);
  std::vector<int> prediction(n);
  for (std::size_t i = 0; i < n; ++i) {
    truth[i] = static_cast<int>(rng.below(k));
    prediction[i] = static_cast<int>(rng.below(k));
  }
  return MulticlassLabeledData(truth, prediction, k);
}

void BM_Mcc(benchmark::State& state) {
  auto fixture = make_binary(static_cast<std::size_t>(state.range(0)));
  BinaryLabeledData data(fixture.truth, fixture.prediction);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mcc(data, fixture.weights));
  }
}
BENCHMARK(BM_Mcc)->Arg(150)->Arg(1500);

void BM_CovarianceSet(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto data = make_multiclass(n, 3);
  auto weights = WeightVector::ones(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(covariance_set(data, weights));
  }
}
BENCHMARK(BM_CovarianceSet)->Arg(150)->Arg(1500);

void BM_EccBound(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  auto data = make_multiclass(n, 3);
  auto weights = WeightVector::ones(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ecc_bound(data, weights, 0.25));
  }
}
BENCHMARK(BM_EccBound)->Arg(150);

void BM_SweepCell(benchmark::State& state) {
  SweepConfig config;
  config.n = 150;
  config.k = 1;
  config.p = 1.0;
  config.samples = 1;
  config.seed = 3;
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_sweep(config));
  }
}
BENCHMARK(BM_SweepCell);

}  // namespace

BENCHMARK_MAIN();
