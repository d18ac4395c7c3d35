#include <benchmark/benchmark.h>

#include "markov/acceptance.hpp"
#include "markov/approx_sets.hpp"
#include "markov/config.hpp"
#include "markov/dynamics.hpp"
#include "markov/multifractal.hpp"
#include "markov/thermo.hpp"

using namespace markov;

namespace {

const MarkovMap& three_symbol() {
  static const MarkovMap m = parse_map(kThreeSymbolMapText);
  return m;
}

const GibbsModel& three_symbol_model() {
  static const GibbsModel g(symbol_potential(three_symbol(), {-0.4, -1.3, 0.25}));
  return g;
}

const MarkovMap& doubling() {
  static const MarkovMap m = parse_map(kDoublingMapText);
  return m;
}

const GibbsModel& bernoulli07() {
  static const GibbsModel g(symbol_potential(doubling(), {std::log(0.7), std::log(0.3)}));
  return g;
}

template <bool Parallel>
void BM_EnumerateCylinders(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    auto c = Parallel ? enumerate_cylinders(three_symbol(), n) : enumerate_cylinders_serial(three_symbol(), n);
    benchmark::DoNotOptimize(c.data());
  }
}

template <bool Parallel>
void BM_GibbsConstant(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    const double g = Parallel ? gibbs_constant(three_symbol_model(), n) : gibbs_constant_serial(three_symbol_model(), n);
    benchmark::DoNotOptimize(g);
  }
}

template <bool Parallel>
void BM_Spectrum(benchmark::State& state) {
  const auto grid = default_q_grid();
  for (auto _ : state) {
    auto s = Parallel ? spectrum(three_symbol_model().potential(), grid)
                      : spectrum_serial(three_symbol_model().potential(), grid);
    benchmark::DoNotOptimize(s.data());
  }
}

template <bool Parallel>
void BM_HittingLaw(benchmark::State& state) {
  const GibbsModel leb(neg_log_deriv(doubling()));
  for (auto _ : state) {
    auto r = Parallel ? hitting_law_experiment(bernoulli07(), leb, 16, 12, 1u << 16, 1)
                      : hitting_law_experiment_serial(bernoulli07(), leb, 16, 12, 1u << 16, 1);
    benchmark::DoNotOptimize(r.median_tail);
  }
}

template <bool Parallel>
void BM_CoverExperiment(benchmark::State& state) {
  const ApproxParams p{1.3, 16, std::size_t{1} << 16, 12};
  for (auto _ : state) {
    auto r = Parallel ? cover_experiment(bernoulli07(), p, CoverMode::Uniform, 8, 1)
                      : cover_experiment_serial(bernoulli07(), p, CoverMode::Uniform, 8, 1);
    benchmark::DoNotOptimize(r.data());
  }
}

}  // namespace

BENCHMARK(BM_EnumerateCylinders<false>)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_EnumerateCylinders<true>)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GibbsConstant<false>)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GibbsConstant<true>)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Spectrum<false>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Spectrum<true>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HittingLaw<false>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_HittingLaw<true>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoverExperiment<false>)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CoverExperiment<true>)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
