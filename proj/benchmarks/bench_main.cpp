#include <random>

#include <benchmark/benchmark.h>

#include "valueset/charsum.hpp"
#include "valueset/counting.hpp"
#include "valueset/sat.hpp"
#include "valueset/ssp.hpp"

using namespace valueset;

namespace {

DensePoly random_poly(const FieldPtr& f, unsigned d, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<FieldElement> c(d + 1);
  for (auto& v : c) v = FieldElement{rng() % f->order()};
  c[d] = f->one();
  return DensePoly(f, c);
}

void BM_FieldMul(benchmark::State& state) {
  auto f = make_field(3, static_cast<unsigned>(state.range(0)));
  FieldElement a{f->order() / 3}, b{f->order() / 7 + 1};
  for (auto _ : state) {
    a = f->mul(a, b);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul)->Arg(5)->Arg(12)->Arg(13)->Arg(20);

void BM_CountDirect(benchmark::State& state) {
  auto f = make_field(3, static_cast<unsigned>(state.range(0)));
  const PolyInput g = random_poly(f, 6, 1);
  for (auto _ : state) benchmark::DoNotOptimize(count_direct(g, 1).first.cardinality);
  state.SetItemsProcessed(state.iterations() * f->order());
}
BENCHMARK(BM_CountDirect)->Arg(5)->Arg(8)->Arg(11);

void BM_CountCodomain(benchmark::State& state) {
  auto f = make_field(static_cast<std::uint64_t>(state.range(0)), 1);
  const DensePoly g = random_poly(f, 6, 2);
  for (auto _ : state) benchmark::DoNotOptimize(count_codomain(g, 1).cardinality);
}
BENCHMARK(BM_CountCodomain)->Arg(101)->Arg(1009);

void BM_CountSymmetricHypersurface(benchmark::State& state) {
  auto f = make_field(static_cast<std::uint64_t>(state.range(0)), 1);
  const PolyInput g = random_poly(f, 4, 3);
  for (auto _ : state) benchmark::DoNotOptimize(count_symmetric(g, NkSource::Hypersurface, 1).cardinality);
}
BENCHMARK(BM_CountSymmetricHypersurface)->Arg(7)->Arg(31);

void BM_SymWeightsNewton(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sym_weights_newton(state.range(0)).sigma.size());
}
BENCHMARK(BM_SymWeightsNewton)->Arg(50)->Arg(200);

void BM_SymWeightsProduct(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(sym_weights_product(state.range(0)).sigma.size());
}
BENCHMARK(BM_SymWeightsProduct)->Arg(50)->Arg(200);

void BM_Coverage(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(coverage(static_cast<std::uint64_t>(state.range(0)), 3, 1).counts);
}
BENCHMARK(BM_Coverage)->Arg(1031)->Arg(65537);

void BM_CountSspViaValueSet(benchmark::State& state) {
  SubsetSumInstance inst{{3, 5, 7, 11}, 15};
  for (auto _ : state) benchmark::DoNotOptimize(count_ssp_via_valueset(inst, {}, 1).count);
}
BENCHMARK(BM_CountSspViaValueSet);

void BM_BuildGamma(benchmark::State& state) {
  std::mt19937_64 rng(9);
  const unsigned n = static_cast<unsigned>(state.range(0));
  const Cnf3 f = random_cnf3(n, n, rng);
  const Nc05Circuit c = build_circuit(f);
  for (auto _ : state) benchmark::DoNotOptimize(build_gamma(c).gamma.terms().size());
}
BENCHMARK(BM_BuildGamma)->Arg(3)->Arg(5);

}  // namespace
BENCHMARK_MAIN();
