// Serial reference loop against the OpenMP kernel on the heavier sweeps.

#include "klimm/suites.hpp"

#include <benchmark/benchmark.h>

using namespace klimm;

namespace {

void run(benchmark::State &state, const char *suite, int max_n, Execution exec) {
  SuiteConfig c;
  c.max_n = max_n;
  c.samples = 2;
  c.execution = exec;
  for (auto _ : state) {
    auto r = run_suite(suite, c);
    benchmark::DoNotOptimize(r.cases_run);
  }
}

void BM_MainSerial(benchmark::State &s) { run(s, "main-sq", 4, Execution::serial); }
void BM_MainParallel(benchmark::State &s) { run(s, "main-sq", 4, Execution::parallel); }
void BM_YoungSerial(benchmark::State &s) { run(s, "young", 4, Execution::serial); }
void BM_YoungParallel(benchmark::State &s) { run(s, "young", 4, Execution::parallel); }
void BM_CarrollSerial(benchmark::State &s) { run(s, "lewis-carroll", 0, Execution::serial); }
void BM_CarrollParallel(benchmark::State &s) { run(s, "lewis-carroll", 0, Execution::parallel); }

} // namespace

BENCHMARK(BM_MainSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MainParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_YoungSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_YoungParallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CarrollSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CarrollParallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
