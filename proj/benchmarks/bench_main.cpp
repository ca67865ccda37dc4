#include <benchmark/benchmark.h>

#include <random>

#include "gpk/construct.hpp"

namespace {

void BM_FieldMul(benchmark::State& state) {
  const gpk::Field& f = gpk::Field::get(2, static_cast<std::uint32_t>(state.range(0)));
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint64_t> d(1, f.size() - 1);
  std::vector<std::uint64_t> xs(1024);
  for (auto& x : xs) x = d(rng);
  std::uint64_t acc = 1;
  for (auto _ : state) {
    for (auto x : xs) acc = f.mul(acc, x);
    benchmark::DoNotOptimize(acc);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(xs.size()));
}
BENCHMARK(BM_FieldMul)->Arg(8)->Arg(20)->Arg(24);

void BM_Closure(benchmark::State& state) {
  const gpk::HermitianCurve c(2, 2);
  const auto inst = gpk::make_hermitian_instance(c, static_cast<std::uint64_t>(state.range(0)));
  auto gens = inst.g1.generators();
  for (auto _ : state) benchmark::DoNotOptimize(gpk::closure(c.base_field(), gens).order());
}
BENCHMARK(BM_Closure)->Arg(1)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_Pullback(benchmark::State& state) {
  const gpk::HermitianCurve c(3, 1);
  const gpk::Field& f = c.base_field();
  const auto t = gpk::witness_t1(c, f).pow(4);
  const auto s = gpk::sigma(c, f.one(), f(5)) * gpk::eta(c, f(f.primitive()));
  if (!gpk::preserves_curve(s, c.q())) {
    state.SkipWithError("not an automorphism");
    return;
  }
  for (auto _ : state) benchmark::DoNotOptimize(gpk::pullback(s, t));
}
BENCHMARK(BM_Pullback)->Unit(benchmark::kMicrosecond);

void BM_VerifyTuple(benchmark::State& state) {
  const gpk::HermitianCurve c(2, 2);
  const auto inst = gpk::make_hermitian_instance(c, static_cast<std::uint64_t>(state.range(0)));
  const auto t = gpk::to_tuple(inst);
  for (auto _ : state) benchmark::DoNotOptimize(gpk::verify_tuple(t).overall);
}
BENCHMARK(BM_VerifyTuple)->Arg(3)->Arg(15)->Unit(benchmark::kMillisecond);

void BM_PlaneModel(benchmark::State& state) {
  const gpk::HermitianCurve c(2, 1);
  const auto inst = gpk::make_hermitian_instance(c, 3);
  const auto fg = gpk::build_f_g(inst);
  for (auto _ : state) benchmark::DoNotOptimize(gpk::plane_model(inst, fg).degree);
}
BENCHMARK(BM_PlaneModel)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
