#include <benchmark/benchmark.h>

#include <random>

#include "grasp/grassmann.hpp"

namespace {

using namespace grasp;

GrassmannPoly random_poly(const RegistryPtr& reg, std::mt19937_64& rng, int terms) {
  const std::uint64_t all = (std::uint64_t{1} << reg->count()) - 1;
  GrassmannPoly p(reg);
  for (int t = 0; t < terms; ++t)
    p.add_term(rng() & all,
               Cplx((rng() >> 11) * 0x1.0p-53, (rng() >> 11) * 0x1.0p-53));
  return p;
}

void BM_GrassmannMultiply(benchmark::State& state) {
  const int modes = static_cast<int>(state.range(0));
  const auto reg = GeneratorRegistry::fermionic_modes(modes, {Species::G});
  std::mt19937_64 rng(1);
  const auto p = random_poly(reg, rng, 1 << modes);
  const auto q = random_poly(reg, rng, 1 << modes);
  for (auto _ : state) benchmark::DoNotOptimize(multiply(p, q));
}
BENCHMARK(BM_GrassmannMultiply)->Arg(2)->Arg(4)->Arg(6);

void BM_BerezinPairIntegral(benchmark::State& state) {
  const int modes = static_cast<int>(state.range(0));
  const auto reg = GeneratorRegistry::fermionic_modes(modes, {Species::G});
  const auto pairs = reg->family_pairs(Species::G);
  std::mt19937_64 rng(2);
  const auto p = random_poly(reg, rng, 1 << modes);
  for (auto _ : state)
    benchmark::DoNotOptimize(integrate_d2(p, pairs));
}
BENCHMARK(BM_BerezinPairIntegral)->Arg(2)->Arg(4)->Arg(6);

void BM_ExpNilpotent(benchmark::State& state) {
  const int modes = static_cast<int>(state.range(0));
  const auto reg = GeneratorRegistry::fermionic_modes(modes, {Species::G});
  GrassmannPoly arg(reg);
  for (int m = 0; m < modes; ++m)
    arg += GrassmannPoly::generator(reg, 2 * m) *
           GrassmannPoly::generator(reg, 2 * m + 1);
  for (auto _ : state) benchmark::DoNotOptimize(exp_nilpotent(arg));
}
BENCHMARK(BM_ExpNilpotent)->Arg(2)->Arg(4)->Arg(6);

}  // namespace
