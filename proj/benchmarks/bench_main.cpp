#include <benchmark/benchmark.h>

#include "wh/commands.hpp"
#include "wh/duality.hpp"

namespace {

void BM_KernelBasis(benchmark::State& state) {
  wh::Instance inst = wh::builtin_instance("ex2.8");
  auto ctx = wh::DualityContext::build(inst.groupoid, inst.algebra, inst.action);
  wh::Matrix flat = ctx.phi.flattened();
  for (auto _ : state) benchmark::DoNotOptimize(wh::kernel_basis(ctx.field(), flat));
}
BENCHMARK(BM_KernelBasis)->Unit(benchmark::kMillisecond);

void BM_DoubleSmash(benchmark::State& state) {
  wh::Instance inst = wh::builtin_instance("ex2.8");
  wh::WeakHopf kg = wh::groupoid_algebra(inst.groupoid, inst.field());
  wh::WeakHopf kgstar = wh::dual_weak_hopf(kg, inst.groupoid);
  for (auto _ : state) benchmark::DoNotOptimize(wh::double_smash(inst.algebra, kg, kgstar, inst.action));
}
BENCHMARK(BM_DoubleSmash)->Unit(benchmark::kMillisecond);

void BM_BuildPhi(benchmark::State& state) {
  wh::Instance inst = wh::builtin_instance("ex2.8");
  auto ctx = wh::DualityContext::build(inst.groupoid, inst.algebra, inst.action);
  for (auto _ : state) benchmark::DoNotOptimize(wh::build_phi(ctx.dsm, ctx.bsm));
}
BENCHMARK(BM_BuildPhi)->Unit(benchmark::kMillisecond);

void BM_VerifyAll(benchmark::State& state) {
  static const char* names[] = {"z2-trivial", "z3-trivial", "i2-swap", "ex2.8", "ex2.8-gf2"};
  wh::Instance inst = wh::builtin_instance(names[state.range(0)]);
  auto claims = wh::resolve_claims(inst, "all");
  for (auto _ : state) benchmark::DoNotOptimize(wh::run_verify(inst, claims));
  state.SetLabel(names[state.range(0)]);
}
BENCHMARK(BM_VerifyAll)->DenseRange(0, 4)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
