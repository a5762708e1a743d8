// Serial reference vs OpenMP kernels on the bundled corpus.

#include <benchmark/benchmark.h>

#include "gselfies/kernels.h"
#include "gselfies/smiles.h"

using namespace gselfies;

namespace {

const std::vector<MolGraph> &corpus() {
  static const auto mols = read_corpus(std::string(GSELFIES_DATA_DIR) + "/drug_2k.smi").molecules();
  return mols;
}

const GroupSet &groups() {
  static const GroupSet set = load_groupset(std::string(GSELFIES_DATA_DIR) + "/groups/drug_53.json");
  return set;
}

const std::vector<std::vector<Token>> &encoded() {
  static const auto strings = [] {
    std::vector<std::vector<Token>> out;
    for (auto &r : encode_corpus_serial(corpus(), groups())) out.push_back(std::move(r.tokens));
    return out;
  }();
  return strings;
}

void set_items(benchmark::State &state, std::size_t n) {
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

void BM_EncodeSerial(benchmark::State &state) {
  for (auto _ : state) benchmark::DoNotOptimize(encode_corpus_serial(corpus(), groups()));
  set_items(state, corpus().size());
}

void BM_EncodeParallel(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(encode_corpus_parallel(corpus(), groups(), static_cast<int>(state.range(0))));
  set_items(state, corpus().size());
}

void BM_DecodeSerial(benchmark::State &state) {
  encoded();  // build outside the timed loop
  for (auto _ : state) benchmark::DoNotOptimize(decode_corpus_serial(encoded(), groups()));
  set_items(state, encoded().size());
}

void BM_DecodeParallel(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(decode_corpus_parallel(encoded(), groups(), static_cast<int>(state.range(0))));
  set_items(state, encoded().size());
}

FuzzOptions fuzz_options() {
  FuzzOptions opt;
  opt.n = 5000;
  opt.seed = 1;
  return opt;
}

void BM_FuzzSerial(benchmark::State &state) {
  for (auto _ : state) benchmark::DoNotOptimize(fuzz_serial(groups(), fuzz_options()));
  set_items(state, fuzz_options().n);
}

void BM_FuzzParallel(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(fuzz_parallel(groups(), fuzz_options(), static_cast<int>(state.range(0))));
  set_items(state, fuzz_options().n);
}

}  // namespace

BENCHMARK(BM_EncodeSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EncodeParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DecodeSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_DecodeParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FuzzSerial)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_FuzzParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
