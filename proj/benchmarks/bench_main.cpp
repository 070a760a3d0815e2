#include <benchmark/benchmark.h>

#include "catalg/doublecone.hpp"
#include "catalg/strsem.hpp"

using namespace catalg;

namespace {

CatPtr chain(int n) { return std::make_shared<FinCategory>(chain_category(n)); }

void BM_coend_hom(benchmark::State& state) {
  auto C = chain(static_cast<int>(state.range(0)));
  auto D = hom_bidiagram(C);
  for (auto _ : state) {
    auto r = coend(D);
    benchmark::DoNotOptimize(r.set.size());
  }
}
BENCHMARK(BM_coend_hom)->Arg(3)->Arg(5)->Arg(8);

void BM_end_hom(benchmark::State& state) {
  auto C = chain(static_cast<int>(state.range(0)));
  auto D = hom_bidiagram(C);
  for (auto _ : state) {
    auto r = end(D);
    benchmark::DoNotOptimize(r.set.size());
  }
}
BENCHMARK(BM_end_hom)->Arg(3)->Arg(5)->Arg(8);

void BM_prof_compose(benchmark::State& state) {
  auto C = chain(static_cast<int>(state.range(0)));
  auto H = identity_prof(C);
  for (auto _ : state) {
    auto r = compose_prof(H, H);
    benchmark::DoNotOptimize(r.prof.value.size());
  }
}
BENCHMARK(BM_prof_compose)->Arg(3)->Arg(5);

void BM_endofunctor_moncat(benchmark::State& state) {
  auto C = chain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto E = endofunctor_moncat(C);
    benchmark::DoNotOptimize(E.mon.cat->n_mor());
  }
}
BENCHMARK(BM_endofunctor_moncat)->Arg(2)->Arg(3);

void BM_clone_check(benchmark::State& state) {
  auto c = semilattice_clone(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto rep = check_clone(c);
    benchmark::DoNotOptimize(rep.ok());
  }
}
BENCHMARK(BM_clone_check)->Arg(2)->Arg(3);

void BM_clone_models(benchmark::State& state) {
  auto base = concrete_finset({1, 2});
  auto c = pointed_clone(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto MC = enumerate_models(interpret_clone(base, c));
    benchmark::DoNotOptimize(MC.cat->n_mor());
  }
}
BENCHMARK(BM_clone_models)->Arg(2)->Arg(3);

void BM_universality(benchmark::State& state) {
  auto base = concrete_finset({1, 2});
  auto ti = interpret_clone(base, pointed_clone(2));
  auto MC = enumerate_models(ti);
  std::vector<CatPtr> apexes = {std::make_shared<FinCategory>(terminal_category()),
                                std::make_shared<FinCategory>(walking_arrow_category())};
  for (auto _ : state) {
    auto rep = verify_universality(ti, MC, apexes);
    benchmark::DoNotOptimize(rep.ok());
  }
}
BENCHMARK(BM_universality);

}  // namespace

BENCHMARK_MAIN();
