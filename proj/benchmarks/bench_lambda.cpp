#include <benchmark/benchmark.h>

#include "effdiag/lambda.hpp"

using namespace effdiag;

namespace {

// Enumerate naturals until the fuel runs out.
void BM_EvalPowersetRecursion(benchmark::State& state) {
  const TermPtr e = parse("Z (\\g. \\n. union(n, g (succ n))) zero", Prelude::standard());
  const KindRef kind = MonadKind::powerset();
  const Fuel fuel{static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(eval(e, kind, fuel));
}
BENCHMARK(BM_EvalPowersetRecursion)->Arg(5)->Arg(10)->Arg(20);

void BM_EvalGeometric(benchmark::State& state) {
  const TermPtr e = parse("Z (\\g. \\x. choice(x, g x)) v", Prelude::standard());
  const KindRef kind = MonadKind::subdistribution();
  const Fuel fuel{static_cast<std::size_t>(state.range(0))};
  for (auto _ : state) benchmark::DoNotOptimize(eval(e, kind, fuel));
}
BENCHMARK(BM_EvalGeometric)->Arg(10)->Arg(40);

void BM_Parse(benchmark::State& state) {
  const Prelude prelude = Prelude::standard();
  for (auto _ : state) benchmark::DoNotOptimize(parse("Z (\\g. \\n. union(n, g (succ n))) (succ (succ three))", prelude));
}
BENCHMARK(BM_Parse);

}  // namespace

BENCHMARK_MAIN();
