#include <benchmark/benchmark.h>

#include "transint/transint.hpp"

namespace {

using namespace transint;

// Reduced basis of the rational normal curve plus family J, serial and
// with the lowest-degree S-pairs reduced concurrently.
void BM_BuchbergerRncSum(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  BuchbergerOptions opts;
  opts.parallel = state.range(1) != 0;
  auto sum = ideal_sum(rational_normal_curve(n), family_J(n, 2, 3, 2));
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(sum, MonomialOrder::grevlex(), opts));
}
BENCHMARK(BM_BuchbergerRncSum)->ArgsProduct({{3, 4, 5}, {0, 1}})->Unit(benchmark::kMillisecond);

void BM_BuchbergerCriteria(benchmark::State& state) {
  BuchbergerOptions opts;
  opts.coprime_criterion = opts.chain_criterion = state.range(0) != 0;
  auto curve = rational_normal_curve(5);
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(curve, MonomialOrder::lex(), opts));
}
BENCHMARK(BM_BuchbergerCriteria)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_ElimIntersect(benchmark::State& state) {
  auto n = static_cast<std::size_t>(state.range(0));
  auto curve = rational_normal_curve(n);
  auto j = family_J(n, 1, 1, 1, curve.ring());
  for (auto _ : state) benchmark::DoNotOptimize(elim_intersect(curve, j));
}
BENCHMARK(BM_ElimIntersect)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_XYTransversal(benchmark::State& state) {
  auto ring = xy_ring(3);
  auto i = xy_ideal(3, ring);
  auto h = hankel_h(3, 2, 1, 1, ring);
  for (auto _ : state) benchmark::DoNotOptimize(transversal(i, h, xy_order(3)));
}
BENCHMARK(BM_XYTransversal)->Unit(benchmark::kMillisecond);

// Path ideal x1x2, x2x3, ..., x_{g}x_{g+1}: the Taylor complex has 2^g basis
// elements and is far from minimal.
MonomialIdeal path_ideal(std::size_t g) {
  auto ring = Ring::numbered("x", g + 1);
  std::vector<Monomial> gens;
  for (std::size_t i = 0; i < g; ++i) gens.push_back(Monomial::variable(g + 1, i) * Monomial::variable(g + 1, i + 1));
  return MonomialIdeal(ring, gens);
}

void BM_Taylor(benchmark::State& state) {
  auto m = path_ideal(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(taylor(m));
}
BENCHMARK(BM_Taylor)->DenseRange(4, 10, 2)->Unit(benchmark::kMicrosecond);

void BM_Prune(benchmark::State& state) {
  auto t = taylor(path_ideal(static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(prune(t));
}
BENCHMARK(BM_Prune)->DenseRange(4, 8, 2)->Unit(benchmark::kMicrosecond);

void BM_Acyclicity(benchmark::State& state) {
  auto m = path_ideal(static_cast<std::size_t>(state.range(0)));
  auto t = taylor(m);
  for (auto _ : state) benchmark::DoNotOptimize(is_acyclic_multigraded(t, m));
}
BENCHMARK(BM_Acyclicity)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_TaylorIso(benchmark::State& state) {
  auto ring = Ring::numbered("x", 8);
  MonomialIdeal i(ring, {Monomial{1, 1, 0, 0, 0, 0, 0, 0}, Monomial{0, 1, 1, 0, 0, 0, 0, 0}, Monomial{0, 0, 1, 1, 0, 0, 0, 0}});
  MonomialIdeal j(ring, {Monomial{0, 0, 0, 0, 2, 0, 0, 0}, Monomial{0, 0, 0, 0, 1, 1, 0, 0}, Monomial{0, 0, 0, 0, 0, 0, 1, 1}});
  for (auto _ : state) benchmark::DoNotOptimize(taylor_iso_check(i, j));
}
BENCHMARK(BM_TaylorIso)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
