// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <vector>

#include "tauplus/csa_schedule.hpp"
#include "tauplus/forward.hpp"
#include "tauplus/random.hpp"
#include "tauplus/reverse.hpp"

using namespace tauplus;

namespace {

std::vector<Int> operands(const TauPlusSet& s, std::size_t n) {
  Rng rng(99);
  std::vector<Int> xs;
  for (std::size_t i = 0; i < n; ++i) xs.push_back(rng.below(s.dr));
  return xs;
}

std::vector<ResidueVector> residues(const TauPlusSet& s, std::size_t n) {
  std::vector<ResidueVector> rs;
  for (const Int& x : operands(s, n)) rs.push_back(forward(x, s));
  return rs;
}

void BM_Forward(benchmark::State& state) {
  const TauPlusSet s = make_tau_plus(static_cast<unsigned>(state.range(0)));
  const ForwardConverter conv(s);
  const auto xs = operands(s, 1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(conv(xs[i++ & 1023]));
}
BENCHMARK(BM_Forward)->Arg(4)->Arg(9)->Arg(16)->Arg(32);

void BM_ReverseFunctional(benchmark::State& state) {
  const TauPlusSet s = make_tau_plus(static_cast<unsigned>(state.range(0)));
  const auto rs = residues(s, 1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(reverse_functional(rs[i++ & 1023], s));
}
BENCHMARK(BM_ReverseFunctional)->Arg(4)->Arg(9)->Arg(16)->Arg(32);

void BM_XPrimeEq9(benchmark::State& state) {
  const TauPlusSet s = make_tau_plus(static_cast<unsigned>(state.range(0)));
  const auto rs = residues(s, 1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(x_prime_eq9(rs[i++ & 1023], s));
}
BENCHMARK(BM_XPrimeEq9)->Arg(9)->Arg(16)->Arg(32);

void BM_EvalBitMatrix(benchmark::State& state) {
  const TauPlusSet s = make_tau_plus(static_cast<unsigned>(state.range(0)));
  const BitMatrix m = build_bit_matrix(s);
  const auto rs = residues(s, 1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(eval_bit_matrix(m, rs[i++ & 1023]));
}
BENCHMARK(BM_EvalBitMatrix)->Arg(9)->Arg(16)->Arg(32);

void BM_SimulatePlan(benchmark::State& state) {
  const TauPlusSet s = make_tau_plus(static_cast<unsigned>(state.range(0)));
  const BitMatrix m = build_bit_matrix(s);
  const ReductionPlan p = plan_reduction(m);
  const auto rs = residues(s, 1024);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(simulate_plan(p, m, rs[i++ & 1023]));
}
BENCHMARK(BM_SimulatePlan)->Arg(9)->Arg(16)->Arg(32);

void BM_PlanReduction(benchmark::State& state) {
  const BitMatrix m = build_bit_matrix(make_tau_plus(static_cast<unsigned>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(plan_reduction(m));
}
BENCHMARK(BM_PlanReduction)->Arg(9)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
