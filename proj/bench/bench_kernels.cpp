//
// molfrag - molecular fragmentation toolkit
// SPDX-License-Identifier: Apache-2.0
//
// Serial reference kernels against their OpenMP counterparts on a fixed
// fuzz corpus.
//

#include <benchmark/benchmark.h>

#include "generator.h"
#include "molfrag/corpus.h"
#include "molfrag/smiles.h"
#include "molfrag/stats.h"
#include "molfrag/vocab.h"

namespace {

using namespace molfrag;

const std::vector<Molecule> &corpus() {
  static const std::vector<Molecule> mols = [] {
    std::vector<Molecule> out;
    for (const auto &s: testing::fuzz_corpus(4000, 30, 99))
      out.push_back(parse_smiles(s));
    return out;
  }();
  return mols;
}

const Vocabulary &bbb_vocab() {
  static const Vocabulary v = bbb_build_vocab(corpus(), 128).vocab;
  return v;
}

void BM_BbbCountSerial(benchmark::State &state) {
  for (auto _: state)
    benchmark::DoNotOptimize(bbb_count_serial(corpus()));
}

void BM_BbbCountParallel(benchmark::State &state) {
  const int workers = static_cast<int>(state.range(0));
  for (auto _: state)
    benchmark::DoNotOptimize(bbb_count_parallel(corpus(), workers));
}

void BM_SubcoverSerial(benchmark::State &state) {
  for (auto _: state)
    benchmark::DoNotOptimize(
        decompose_corpus_serial(corpus(), bbb_vocab(), Scheme::kSubcover));
}

void BM_SubcoverParallel(benchmark::State &state) {
  const int workers = static_cast<int>(state.range(0));
  for (auto _: state)
    benchmark::DoNotOptimize(decompose_corpus_parallel(
        corpus(), bbb_vocab(), Scheme::kSubcover, workers));
}

void BM_RingHistogramSerial(benchmark::State &state) {
  for (auto _: state)
    benchmark::DoNotOptimize(ring_histogram_serial(corpus()));
}

void BM_RingHistogramParallel(benchmark::State &state) {
  const int workers = static_cast<int>(state.range(0));
  for (auto _: state)
    benchmark::DoNotOptimize(ring_histogram_parallel(corpus(), workers));
}

void BM_PsmReference(benchmark::State &state) {
  const std::span<const Molecule> small(corpus().data(), 500);
  for (auto _: state)
    benchmark::DoNotOptimize(psm_build_vocab_reference(small, 32));
}

void BM_PsmIncremental(benchmark::State &state) {
  const std::span<const Molecule> small(corpus().data(), 500);
  const int workers = static_cast<int>(state.range(0));
  for (auto _: state)
    benchmark::DoNotOptimize(psm_build_vocab(small, 32, workers));
}

BENCHMARK(BM_BbbCountSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BbbCountParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SubcoverSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SubcoverParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RingHistogramSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RingHistogramParallel)->Arg(1)->Arg(2)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PsmReference)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_PsmIncremental)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

int main(int argc, char **argv) {
  bbb_vocab();
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv))
    return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}
