// Microbenchmarks for the inner loops behind sweeps and image processing.

#include <benchmark/benchmark.h>

#include <random>

#include "p2lsg/bench.hpp"
#include "p2lsg/bitstream.hpp"
#include "p2lsg/media.hpp"
#include "p2lsg/p2lsg_gen.hpp"
#include "p2lsg/sc_ops.hpp"
#include "p2lsg/sequence_spec.hpp"

namespace {

using namespace p2lsg;

Bitstream random_stream(std::size_t n, std::mt19937_64& rng) {
  Bitstream s(n);
  for (auto& w : s.mutable_words()) w = rng();
  s.clear_padding();
  return s;
}

void BM_GroupReverse(benchmark::State& state) {
  const auto base = static_cast<std::uint64_t>(state.range(0));
  std::uint64_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(group_reverse(i & 0xffff, 16, base));
    ++i;
  }
}
BENCHMARK(BM_GroupReverse)->Arg(2)->Arg(16)->Arg(256);

void BM_P2lsgSequence(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(p2lsg_sequence({2, n, 1}, std::size_t{1} << n));
  state.SetItemsProcessed(state.iterations() * (std::int64_t{1} << n));
}
BENCHMARK(BM_P2lsgSequence)->Arg(8)->Arg(16);

void BM_SngGenerate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto seq = make_thresholds(parse_sequence_spec("p2lsg2"), n, 8, n);
  std::uint32_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(sng_generate({k, 8}, seq, n));
    k = (k + 1) & 0xff;
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_SngGenerate)->Arg(256)->Arg(65536);

void BM_AndPopcount(benchmark::State& state) {
  std::mt19937_64 rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_stream(n, rng), b = random_stream(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(and_popcount(a, b));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_AndPopcount)->Arg(256)->Arg(65536);

void BM_Mux4(benchmark::State& state) {
  std::mt19937_64 rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto a = random_stream(n, rng), b = random_stream(n, rng), c = random_stream(n, rng);
  const auto d = random_stream(n, rng), u = random_stream(n, rng), v = random_stream(n, rng);
  for (auto _ : state) benchmark::DoNotOptimize(mux4(a, b, c, d, u, v));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}
BENCHMARK(BM_Mux4)->Arg(256)->Arg(65536);

void BM_MulSweep(benchmark::State& state) {
  BenchConfig cfg;
  cfg.first = parse_sequence_spec("p2lsg2");
  cfg.second = parse_sequence_spec("p2lsgN");
  cfg.lengths = {static_cast<std::uint64_t>(state.range(0))};
  cfg.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(mae_mul_sweep(cfg));
}
BENCHMARK(BM_MulSweep)->Arg(256)->Arg(4096)->Unit(benchmark::kMillisecond);

void BM_ScaleImage(benchmark::State& state) {
  GrayImage img(64, 64);
  std::mt19937 rng(3);
  for (auto& p : img.pixels) p = static_cast<std::uint8_t>(rng());
  ScaleOptions opt;
  opt.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(scale_image_sc(img, opt));
}
BENCHMARK(BM_ScaleImage)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
