#include <benchmark/benchmark.h>

#include "grasp/boson.hpp"

namespace {

using namespace grasp;

void BM_CharNormal(benchmark::State& state) {
  const TruncatedBosonSpace space(static_cast<int>(state.range(0)));
  const Matrix rho = thermal_state(1.0, space);
  const Cplx xi(0.7, -0.4);
  for (auto _ : state) benchmark::DoNotOptimize(char_normal(rho, xi, space));
}
BENCHMARK(BM_CharNormal)->Arg(20)->Arg(40);

void BM_BosonDisplacement(benchmark::State& state) {
  const TruncatedBosonSpace space(static_cast<int>(state.range(0)));
  const Cplx alpha(0.5, 0.3);
  for (auto _ : state) benchmark::DoNotOptimize(boson_displacement(alpha, space));
}
BENCHMARK(BM_BosonDisplacement)->Arg(20)->Arg(40);

void BM_PFunctionGrid(benchmark::State& state) {
  const TruncatedBosonSpace space(20);
  const Matrix rho = thermal_state(1.0, space);
  const ComplexGrid grid{4.0, static_cast<int>(state.range(0))};
  for (auto _ : state)
    benchmark::DoNotOptimize(p_function_grid(rho, grid, space));
}
BENCHMARK(BM_PFunctionGrid)->Arg(41)->Arg(81);

}  // namespace
