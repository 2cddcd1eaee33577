#include <benchmark/benchmark.h>

#include "qcat/catalan.hpp"
#include "qcat/verify.hpp"

namespace {

void BM_QCatalanFreshTable(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    qcat::QCatalanTable table;
    benchmark::DoNotOptimize(table.get(n));
  }
}
BENCHMARK(BM_QCatalanFreshTable)->Arg(25)->Arg(50);

void BM_QCatalanByEnumeration(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(qcat::q_catalan_by_enumeration(n));
}
BENCHMARK(BM_QCatalanByEnumeration)->Arg(8)->Arg(10);

// range(0) = k, range(1) = l, range(2) = r
void BM_AuditSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcat::audit_injection_serial(
        state.range(0), state.range(1), state.range(2)));
  }
}
BENCHMARK(BM_AuditSerial)->Args({6, 6, 1})->Args({6, 7, 2})->Args({7, 7, 3})
    ->Unit(benchmark::kMillisecond);

void BM_AuditParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        qcat::audit_injection(state.range(0), state.range(1), state.range(2)));
  }
}
BENCHMARK(BM_AuditParallel)->Args({6, 6, 1})->Args({6, 7, 2})->Args({7, 7, 3})
    ->Unit(benchmark::kMillisecond)->UseRealTime();

void BM_TheoremSweepSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcat::sweep_serial({n, n, 1, true}, qcat::SweepMode::kGap));
  }
}
BENCHMARK(BM_TheoremSweepSerial)->Arg(25)->Arg(40)->Unit(benchmark::kMillisecond);

void BM_TheoremSweepParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcat::sweep({n, n, 1, true}, qcat::SweepMode::kGap));
  }
}
BENCHMARK(BM_TheoremSweepParallel)->Arg(25)->Arg(40)->Unit(benchmark::kMillisecond)
    ->UseRealTime();

void BM_AuditSweepSerial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcat::sweep_serial({6, 6, 6, true}, qcat::SweepMode::kAudit));
  }
}
BENCHMARK(BM_AuditSweepSerial)->Unit(benchmark::kMillisecond);

void BM_AuditSweepParallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcat::sweep({6, 6, 6, true}, qcat::SweepMode::kAudit));
  }
}
BENCHMARK(BM_AuditSweepParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
