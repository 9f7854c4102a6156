// Parallel continuity_points against the serial reference on gallery samples.
#include <benchmark/benchmark.h>

#include "baire/gallery.hpp"

using namespace baire;

namespace {

std::vector<Point> dense_sample() {
  std::vector<Point> out;
  for (long d = 2; d <= 17; ++d) {
    for (long n = 1; n < d; n += 3) out.emplace_back(Rational(n, d));
  }
  return out;
}

std::vector<Point> tree_sample() {
  std::vector<Point> out;
  for (Nat k = 0; k < 12; ++k) {
    out.emplace_back(generated_by({{k % 3, k}}));
    out.emplace_back(Tree(std::set<Node>{{}}, {BairePoint({k}, {k % 2})}));
  }
  return out;
}

template <bool Parallel>
void dense_split_strong(benchmark::State& state) {
  const auto F = dense_split(DenseSpec::Dyadic);
  const auto probes = dense_split_probes(DenseSpec::Dyadic);
  const auto cfg = CheckConfig::defaults();
  const auto sample = dense_sample();
  for (auto _ : state) {
    auto v = Parallel ? continuity_points(F, sample, Mode::Strong, cfg, probes)
                      : continuity_points_serial(F, sample, Mode::Strong, cfg, probes);
    benchmark::DoNotOptimize(v);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(sample.size()));
}

template <bool Parallel>
void f2_plain(benchmark::State& state) {
  const auto F = f2_multimap();
  const auto probes = f2_probes();
  const auto cfg = CheckConfig::defaults();
  const auto sample = tree_sample();
  for (auto _ : state) {
    auto v = Parallel ? continuity_points(F, sample, Mode::Plain, cfg, probes)
                      : continuity_points_serial(F, sample, Mode::Plain, cfg, probes);
    benchmark::DoNotOptimize(v);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<long>(sample.size()));
}

}  // namespace

BENCHMARK(dense_split_strong<false>)->Name("dense_split_strong/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(dense_split_strong<true>)->Name("dense_split_strong/parallel")->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(f2_plain<false>)->Name("f2_plain/serial")->Unit(benchmark::kMillisecond);
BENCHMARK(f2_plain<true>)->Name("f2_plain/parallel")->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
