#include <benchmark/benchmark.h>

#include "locus/suite.hpp"

namespace {

locus::FramePtr largest_frame(std::size_t points) {
  locus::GenSpec spec;
  spec.max_size = points;
  auto frames = locus::gen_frames(spec);
  locus::FramePtr best = frames.front();
  for (const auto& f : frames) {
    if (f->size() > best->size()) best = f;
  }
  return best;
}

void BM_UnlabeledPosets(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(locus::unlabeled_posets(static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_UnlabeledPosets)->DenseRange(3, 5);

void BM_EnumerateSublocales(benchmark::State& state) {
  auto f = largest_frame(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(locus::enumerate_sublocales(*f));
  state.counters["elements"] = static_cast<double>(f->size());
}
BENCHMARK(BM_EnumerateSublocales)->DenseRange(2, 4);

void BM_RemoteSet(benchmark::State& state) {
  auto f = largest_frame(4);
  auto space = std::make_shared<const locus::SublocaleSpace>(*f);
  locus::RemoteContext ctx(locus::whole_sublocale(*f), space);
  for (auto _ : state) benchmark::DoNotOptimize(locus::remote_set(ctx));
}
BENCHMARK(BM_RemoteSet);

void BM_FrameAnalysis(benchmark::State& state) {
  auto f = largest_frame(4);
  for (auto _ : state) {
    locus::FrameAnalysis fa(f);
    benchmark::DoNotOptimize(fa.contexts().size());
  }
}
BENCHMARK(BM_FrameAnalysis);

void BM_GenMaps(benchmark::State& state) {
  auto a = largest_frame(3);
  for (auto _ : state) benchmark::DoNotOptimize(locus::gen_maps(a, a));
}
BENCHMARK(BM_GenMaps);

void BM_Suite(benchmark::State& state) {
  locus::SuiteOptions options;
  options.spec.max_size = static_cast<std::size_t>(state.range(0));
  options.jobs = 1;
  for (auto _ : state) benchmark::DoNotOptimize(locus::run_suite(options).failures());
}
BENCHMARK(BM_Suite)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
