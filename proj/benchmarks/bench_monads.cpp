#include <benchmark/benchmark.h>

#include "effdiag/effects.hpp"
#include "effdiag/gen.hpp"

using namespace effdiag;

namespace {

void BM_Bind(benchmark::State& state) {
  const KindRef kind = defaultKind(static_cast<MonadTag>(state.range(0)));
  Gen gen(1);
  const auto xs = atoms(4);
  const MonadValue mu = randomValue(gen, kind, xs);
  const FunctionTable f = randomFunction(gen, kind, xs, atoms(4, "y"));
  const Kleisli fn = f.fn();
  for (auto _ : state) benchmark::DoNotOptimize(effdiag::bind(mu, fn));
  state.SetLabel(std::string(tagName(kind->tag())));
}
BENCHMARK(BM_Bind)->DenseRange(0, 5);

void BM_SeqCompose(benchmark::State& state) {
  const KindRef kind = MonadKind::subdistribution();
  const auto n = static_cast<std::size_t>(state.range(0));
  Gen gen(2);
  const Presentation xi(randomEffect(gen, kind, n), atoms(n, "x"));
  std::vector<Presentation> family;
  for (std::size_t i = 0; i < n; ++i) family.push_back(decompose(randomValue(gen, kind, atoms(n))));
  for (auto _ : state) benchmark::DoNotOptimize(seqCompose(xi, family, n * n + 1));
}
BENCHMARK(BM_SeqCompose)->RangeMultiplier(2)->Range(2, 16);

void BM_Decompose(benchmark::State& state) {
  const KindRef kind = MonadKind::powerset();
  std::set<Carrier> elems;
  for (const auto& x : atoms(static_cast<std::size_t>(state.range(0)), "a")) elems.insert(x);
  const MonadValue mu = setValue(kind, elems);
  for (auto _ : state) benchmark::DoNotOptimize(interpret(decompose(mu)));
}
BENCHMARK(BM_Decompose)->RangeMultiplier(4)->Range(4, 64);

}  // namespace
