#include <benchmark/benchmark.h>

#include <random>

#include "qf2/algebra.hpp"
#include "qf2/field.hpp"
#include "qf2/sampling.hpp"

using namespace qf2;

static void BM_FieldMul(benchmark::State& state) {
  const Field F = Field::with_degree(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(1);
  std::vector<Elem> xs(1024);
  for (auto& x : xs) x = gen::random_elem(F, rng);
  Elem acc = F.one();
  for (auto _ : state) {
    for (Elem x : xs) acc = F.mul(acc, F.add(x, F.one()));
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldMul)->Arg(1)->Arg(4)->Arg(8)->Arg(16)->Arg(24);

static void BM_FieldInv(benchmark::State& state) {
  const Field F = Field::with_degree(static_cast<int>(state.range(0)));
  std::mt19937_64 rng(2);
  std::vector<Elem> xs(256);
  for (auto& x : xs) x = gen::random_nonzero(F, rng);
  for (auto _ : state)
    for (Elem x : xs) benchmark::DoNotOptimize(F.inv(x));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldInv)->Arg(4)->Arg(16)->Arg(24);

static void BM_EtaleAlgebra(benchmark::State& state) {
  const Field F = Field::with_degree(2);
  std::mt19937_64 rng(3);
  const Vec a = gen::random_separable(F, static_cast<std::size_t>(state.range(0)), rng);
  for (auto _ : state) {
    EtaleAlgebra A(F, a);
    benchmark::DoNotOptimize(A.coset_space_dim());
  }
}
BENCHMARK(BM_EtaleAlgebra)->Arg(3)->Arg(7)->Arg(15);
