#include <benchmark/benchmark.h>

#include <random>

#include "qf2/autos.hpp"
#include "qf2/geometry.hpp"
#include "qf2/invariants.hpp"
#include "qf2/lattice.hpp"
#include "qf2/normalform.hpp"
#include "qf2/sampling.hpp"

using namespace qf2;

namespace {

Vec E(std::initializer_list<std::uint64_t> c) {
  Vec v;
  for (auto x : c) v.emplace_back(x);
  return v;
}

Pencil sample(int k, std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return gen::random_regular_pencil(Field::with_degree(k), n, rng);
}

}  // namespace

static void BM_HalfDiscriminant(benchmark::State& state) {
  const Pencil p = sample(2, static_cast<std::size_t>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(half_discriminant(p));
}
BENCHMARK(BM_HalfDiscriminant)->Arg(3)->Arg(5)->Arg(7)->Arg(11);

static void BM_ExtractNormalForm(benchmark::State& state) {
  const Pencil p = sample(2, static_cast<std::size_t>(state.range(0)), 11);
  for (auto _ : state) benchmark::DoNotOptimize(extract_normal_form(p));
}
BENCHMARK(BM_ExtractNormalForm)->Arg(3)->Arg(5)->Arg(7)->Arg(11);

static void BM_IsIsomorphic(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const Pencil p = sample(3, n, 12);
  std::mt19937_64 rng(13);
  const Pencil q = p.pullback(gen::random_invertible(p.field(), n, rng));
  for (auto _ : state) benchmark::DoNotOptimize(is_isomorphic(p, q));
}
BENCHMARK(BM_IsIsomorphic)->Arg(3)->Arg(5)->Arg(7);

static void BM_AutomorphismGroup(benchmark::State& state) {
  const Pencil p = sample(2, static_cast<std::size_t>(state.range(0)), 14);
  for (auto _ : state) benchmark::DoNotOptimize(automorphism_group(p));
}
BENCHMARK(BM_AutomorphismGroup)->Arg(3)->Arg(5)->Arg(7);

static void BM_DelPezzoLines(benchmark::State& state) {
  const Pencil p = realize(Field(), E({0, 1, 1, 1, 1, 1}), E({0, 0, 0, 0}));
  const Field K = Field::with_degree(4);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_generators(p, K));
}
BENCHMARK(BM_DelPezzoLines);

static void BM_Lattice(benchmark::State& state) {
  const Pencil p = realize(Field(), E({1, 0, 0, 0, 0, 0, 0, 1}), E({0, 0, 0, 0, 0, 0}));
  const Field K = Field::with_degree(3);
  for (auto _ : state) benchmark::DoNotOptimize(build_lattice(p, K));
}
BENCHMARK(BM_Lattice)->Unit(benchmark::kMillisecond);
