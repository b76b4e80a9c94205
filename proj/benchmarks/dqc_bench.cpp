#include <benchmark/benchmark.h>

#include <random>

#include "dqc/census.hpp"
#include "dqc/entanglement.hpp"
#include "dqc/hopf_geometry.hpp"
#include "dqc/verification.hpp"

namespace {

using namespace dqc;

ComplexField field(std::uint64_t p) { return ComplexField(ComplexifiablePrime::validate(p)); }

void BM_FieldMul(benchmark::State& state) {
  const ComplexField f = field(static_cast<std::uint64_t>(state.range(0)));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint32_t> d(0, f.p() - 1);
  std::vector<GFc> xs(1024);
  for (GFc& x : xs) x = {Fp{d(rng)}, Fp{d(rng)}};
  GFc acc = f.one();
  for (auto _ : state) {
    for (const GFc& x : xs) acc = f.mul(acc, x.is_zero() ? f.one() : x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldMul)->Arg(7)->Arg(2147483647);

void BM_FieldInv(benchmark::State& state) {
  const ComplexField f = field(static_cast<std::uint64_t>(state.range(0)));
  GFc x = f.make(3, 5);
  for (auto _ : state) {
    x = f.add(f.inv(x), f.one());
    if (x.is_zero()) x = f.one();
    benchmark::DoNotOptimize(x);
  }
}
BENCHMARK(BM_FieldInv)->Arg(7)->Arg(2147483647);

void BM_CountUnitNorm(benchmark::State& state) {
  const ComplexField f = field(static_cast<std::uint64_t>(state.range(0)));
  const std::uint64_t dim = static_cast<std::uint64_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_norm_class(f, dim, Fp{1}, {kDefaultBudget, 1}));
}
BENCHMARK(BM_CountUnitNorm)->Args({3, 4})->Args({7, 4})->Args({3, 8})->Unit(benchmark::kMillisecond);

void BM_Classify(benchmark::State& state) {
  const ComplexField f = field(7);
  std::mt19937_64 rng(2);
  const unsigned n = static_cast<unsigned>(state.range(0));
  std::vector<StateVector> states;
  for (int i = 0; i < 64; ++i) states.emplace_back(f, sample_unit_state(f, std::uint64_t{1} << n, rng));
  for (auto _ : state)
    for (const StateVector& s : states) benchmark::DoNotOptimize(classify(s));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(states.size()));
}
BENCHMARK(BM_Classify)->Arg(2)->Arg(4)->Arg(8);

void BM_EntanglementCensus(benchmark::State& state) {
  const ComplexField f = field(static_cast<std::uint64_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(entanglement_census(f, 2, {kDefaultBudget, 1}).irreducible);
}
BENCHMARK(BM_EntanglementCensus)->Arg(3)->Arg(7)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
