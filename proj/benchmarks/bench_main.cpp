#include <benchmark/benchmark.h>

#include <random>

#include "gbds/groupoid.hpp"
#include "gbds/semigroup.hpp"

using namespace gbds;

namespace {

// a fixes both atoms, b sends x to y and kills y; full ideals.
System two_labels() {
  BooleanAlgebra alg({"x", "y"});
  Action a{"a", {alg.atom(0), alg.atom(1)}}, b{"b", {alg.atom(1), alg.empty()}};
  return System(alg, {a, b}, {alg.unit(), alg.unit()});
}

void BM_SemigroupMultiply(benchmark::State& state) {
  Semigroup sg(two_labels());
  const auto elems = sg.enumerate(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    std::size_t nonzero = 0;
    for (const auto& s : elems) {
      for (const auto& t : elems) nonzero += !sg.multiply(s, t).is_zero();
    }
    benchmark::DoNotOptimize(nonzero);
  }
  state.counters["elements"] = static_cast<double>(elems.size());
}
BENCHMARK(BM_SemigroupMultiply)->Arg(1)->Arg(2);

void BM_CheckLaws(benchmark::State& state) {
  Semigroup sg(two_labels());
  for (auto _ : state) benchmark::DoNotOptimize(sg.check_laws(static_cast<std::size_t>(state.range(0))).ok());
}
BENCHMARK(BM_CheckLaws)->Arg(1)->Arg(2)->Unit(benchmark::kMillisecond);

void BM_Paths(benchmark::State& state) {
  BoundarySpace sp(two_labels());
  for (auto _ : state) benchmark::DoNotOptimize(sp.paths(static_cast<std::size_t>(state.range(0))).size());
}
BENCHMARK(BM_Paths)->DenseRange(2, 6, 2);

void BM_OpenSetOps(benchmark::State& state) {
  BoundarySpace sp(two_labels());
  const auto& alg = sp.system().algebra();
  const OpenSet a = sp.cylinder(sp.system().parse_word("aa"), alg.atom(0));
  const OpenSet b = sp.cylinder(Word{}, alg.unit());
  for (auto _ : state) {
    benchmark::DoNotOptimize(sp.subtract(b, a));
    benchmark::DoNotOptimize(sp.unite(a, sp.intersect(a, b)));
  }
}
BENCHMARK(BM_OpenSetOps);

void BM_IsoCheck(benchmark::State& state) {
  Groupoids gr{PartialAction{BoundarySpace(two_labels())}};
  for (auto _ : state) benchmark::DoNotOptimize(gr.iso_check(static_cast<std::size_t>(state.range(0)), 200).ok());
}
BENCHMARK(BM_IsoCheck)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_RandomSystem(benchmark::State& state) {
  std::mt19937_64 rng(0);
  for (auto _ : state) benchmark::DoNotOptimize(random_system(rng).atom_count());
}
BENCHMARK(BM_RandomSystem);

}  // namespace

BENCHMARK_MAIN();
