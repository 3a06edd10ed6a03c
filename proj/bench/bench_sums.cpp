#include <benchmark/benchmark.h>
#include <omp.h>

#include "tribsum/catalog.hpp"
#include "tribsum/oracle.hpp"
#include "tribsum/sum_engine.hpp"
#include "tribsum/verify.hpp"

namespace {

using namespace tribsum;

const SequenceDef& tribonacci() { return lookup("tribonacci").def; }

void BM_ClosedForm(benchmark::State& state) {
  const SumQuery q{Direction::Forward, Parity::All, state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_sum(tribonacci(), q));
}
BENCHMARK(BM_ClosedForm)->Arg(1000)->Arg(10000)->Arg(100000)->Unit(benchmark::kMicrosecond);

void BM_OracleSum(benchmark::State& state) {
  const SumQuery q{Direction::Forward, Parity::All, state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(oracle::oracle_sum(tribonacci(), q));
}
BENCHMARK(BM_OracleSum)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_WalkerSum(benchmark::State& state) {
  const SumQuery q{Direction::Forward, Parity::All, state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(sum_oracle(tribonacci(), q));
}
BENCHMARK(BM_WalkerSum)->Arg(1000)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_BackwardEvenClosedForm(benchmark::State& state) {
  const auto& def = lookup("jacobsthal-padovan").def;
  const SumQuery q{Direction::Backward, Parity::Even, state.range(0)};
  for (auto _ : state) benchmark::DoNotOptimize(evaluate_sum(def, q));
}
BENCHMARK(BM_BackwardEvenClosedForm)->Arg(1000)->Arg(10000)->Unit(benchmark::kMicrosecond);

verify::Options sweep_options() {
  verify::Options opts;
  opts.max_n = 40;
  opts.corollary_max_n = 40;
  return opts;
}

void BM_VerifySerial(benchmark::State& state) {
  const auto subjects = verify::catalog_subjects();
  const auto opts = sweep_options();
  for (auto _ : state) benchmark::DoNotOptimize(verify::run_serial(subjects, opts));
}
BENCHMARK(BM_VerifySerial)->Unit(benchmark::kMillisecond);

void BM_VerifyParallel(benchmark::State& state) {
  const auto subjects = verify::catalog_subjects();
  const auto opts = sweep_options();
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(verify::run_parallel(subjects, opts));
  state.counters["threads"] = static_cast<double>(state.range(0));
}
BENCHMARK(BM_VerifyParallel)->Arg(1)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
