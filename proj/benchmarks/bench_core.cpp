#include <benchmark/benchmark.h>

#include <random>

#include "wdg/builders.hpp"
#include "wdg/compare.hpp"
#include "wdg/linalg.hpp"
#include "wdg/search.hpp"

namespace {

using namespace wdg;

Matrix random_matrix(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto draw = [&rng](long lo, long hi) {
    return lo + static_cast<long>(rng() % static_cast<unsigned long>(hi - lo + 1));
  };
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> num;
      for (long k = 0; k <= draw(0, 2); ++k) num.emplace_back(draw(-3, 3));
      m.at(i, j) = RatFun(Poly(num), draw(0, 1) ? Poly::u() + Poly(1) : Poly(1));
    }
  return m;
}

void BM_det_bareiss(benchmark::State& state) {
  const Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 42);
  for (auto _ : state) benchmark::DoNotOptimize(det_bareiss(m));
}
BENCHMARK(BM_det_bareiss)->Arg(4)->Arg(6)->Arg(8);

void BM_dihedral_validate(benchmark::State& state) {
  const WDigraph g =
      build_dihedral_regular(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(validate_digraph(g).ok());
}
BENCHMARK(BM_dihedral_validate)->Arg(3)->Arg(5)->Arg(6);

void BM_nullspace(benchmark::State& state) {
  const Matrix m = random_matrix(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) benchmark::DoNotOptimize(nullspace(m).dim());
}
BENCHMARK(BM_nullspace)->Arg(4)->Arg(6);

void BM_find_iso_a1(benchmark::State& state) {
  const AlgStruct a{build_a1(EdgeKind::solid)};
  const AlgStruct b{build_a1_wgraph(1)};
  for (auto _ : state)
    benchmark::DoNotOptimize(find_iso(a, b, 1, 16).outcome);
}
BENCHMARK(BM_find_iso_a1);

void BM_search_two_generators(benchmark::State& state) {
  CoxeterMatrix cm({"s", "t"});
  cm.set_order(0, 1, 2);
  for (auto _ : state)
    benchmark::DoNotOptimize(search_valid_digraphs(cm, 4).size());
}
BENCHMARK(BM_search_two_generators);

}  // namespace

BENCHMARK_MAIN();
