#include <benchmark/benchmark.h>

#include <cmath>

#include "esl/lct.hpp"
#include "esl/monomial_ideal.hpp"
#include "esl/padic/cylinder.hpp"
#include "esl/padic/valuation.hpp"
#include "esl/poly_map.hpp"
#include "esl/real/convolution.hpp"
#include "esl/real/histogram.hpp"
#include "esl/real/sampling.hpp"

using esl::PolyMap;
using esl::Polynomial;
using esl::Rational;

namespace {

PolyMap product_power(std::size_t n, unsigned m) {
  Polynomial p = Polynomial::constant(n, Rational(1));
  for (std::size_t i = 0; i < n; ++i) p = p * Polynomial::variable(n, i);
  return PolyMap({p.pow(m)});
}

void BM_HowaldLct(benchmark::State& state) {
  const auto map = product_power(static_cast<std::size_t>(state.range(0)), 6);
  for (auto _ : state) {
    auto ideal = esl::as_monomial_ideal(esl::jacobian_ideal_generators(map));
    benchmark::DoNotOptimize(esl::lct_monomial(ideal));
  }
}
BENCHMARK(BM_HowaldLct)->DenseRange(2, 5);

void BM_CylinderXY(benchmark::State& state) {
  const PolyMap xy({Polynomial::variable(2, 0) * Polynomial::variable(2, 1)});
  const std::int64_t zero[] = {0};
  const auto k = static_cast<unsigned>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(esl::padic::cylinder_mass(xy, 5, k, zero));
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(std::pow(25.0, k)));
}
BENCHMARK(BM_CylinderXY)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_SeparableCount(benchmark::State& state) {
  const Polynomial f = Polynomial::variable(2, 0).pow(3) + Polynomial::variable(2, 1).pow(3);
  for (auto _ : state)
    benchmark::DoNotOptimize(esl::padic::separable_zero_mass(f, 5, static_cast<unsigned>(state.range(0))));
}
BENCHMARK(BM_SeparableCount)->Arg(12)->Arg(24);

void BM_Sampling(benchmark::State& state) {
  esl::real::SampleConfig cfg;
  cfg.seed = 1;
  cfg.count = static_cast<std::uint64_t>(state.range(0));
  cfg.box = {{-1, 1}};
  const PolyMap map({Polynomial::variable(1, 0).pow(3)});
  for (auto _ : state) benchmark::DoNotOptimize(esl::real::sample_pushforward(map, cfg));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_Sampling)->Arg(1 << 16)->Arg(1 << 20)->Unit(benchmark::kMillisecond);

void BM_Convolution(benchmark::State& state) {
  const auto bins = static_cast<std::size_t>(state.range(0));
  esl::real::Histogram h;
  for (std::size_t i = 0; i <= bins; ++i) h.edges.push_back(static_cast<double>(i) / bins);
  h.masses.assign(bins, 1.0 / static_cast<double>(bins));
  for (auto _ : state) benchmark::DoNotOptimize(esl::real::convolution_power(h, 2));
}
BENCHMARK(BM_Convolution)->Arg(512)->Arg(2048)->Arg(1 << 16);

}  // namespace

BENCHMARK_MAIN();
