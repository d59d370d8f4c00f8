// Serial reference scans against the OpenMP versions on generated
// ccm-quasigroups, which pass every axiom and so force full scans.

#include <benchmark/benchmark.h>

#include <map>

#include "ccm/generation.hpp"
#include "ccm/kernels.hpp"

namespace {

const ccm::FiniteMagma& magma_of_order(std::size_t n) {
  static std::map<std::size_t, ccm::FiniteMagma> cache;
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, ccm::generate_quasigroup(n, 42).magma).first;
  return it->second;
}

template <auto Kernel>
void run(benchmark::State& state) {
  const auto& m = magma_of_order(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(m));
  state.SetComplexityN(state.range(0));
}

}  // namespace

BENCHMARK(run<ccm::kernels::serial::mediality_violation>)->Name("mediality/serial")->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(run<ccm::kernels::parallel::mediality_violation>)->Name("mediality/parallel")->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(run<ccm::kernels::serial::associativity_violation>)->Name("associativity/serial")->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(run<ccm::kernels::parallel::associativity_violation>)->Name("associativity/parallel")->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(run<ccm::kernels::serial::cancellation_violation>)->Name("cancellation/serial")->Arg(16)->Arg(32)->Arg(64);
BENCHMARK(run<ccm::kernels::parallel::cancellation_violation>)->Name("cancellation/parallel")->Arg(16)->Arg(32)->Arg(64);

BENCHMARK_MAIN();
