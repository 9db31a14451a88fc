#include <benchmark/benchmark.h>

#include "eprsim/angle.hpp"
#include "eprsim/correlation_model.hpp"
#include "eprsim/inequalities.hpp"
#include "eprsim/lhv_models.hpp"
#include "eprsim/mermin_square.hpp"
#include "eprsim/monte_carlo.hpp"
#include "eprsim/qm_reference.hpp"
#include "eprsim/quadrature.hpp"

namespace {

using namespace eprsim;

void BM_SingletPrediction(benchmark::State& state) {
  double phi = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(singlet_prediction(phi));
    phi += 1e-3;
  }
}
BENCHMARK(BM_SingletPrediction);

void BM_GaussLegendre1d(benchmark::State& state) {
  const QuadratureSpec spec = half_turn_spec(1, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const Estimate e = integrate_1d(
        [](double th) { return naive_coincidence_intensity(th, 0.9); }, spec);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_GaussLegendre1d)->Arg(16)->Arg(64)->Arg(256);

void BM_NaiveChannels(benchmark::State& state) {
  const CorrelationModel model = make_naive_model();
  double phi = 0.2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(model.channels(phi));
    phi += 1e-3;
  }
}
BENCHMARK(BM_NaiveChannels);

void BM_UnpolarizedQuadrature(benchmark::State& state) {
  const QuadratureSpec spec = half_turn_spec(3, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    const Estimate e =
        unpolarized_model_probability(kPi / 3.0, Method::quadrature, {}, 256, spec);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_UnpolarizedQuadrature)->Arg(32)->Arg(64);

void BM_UnpolarizedGroupedMC(benchmark::State& state) {
  const MCConfig mc{7, state.range(0)};
  for (auto _ : state) {
    const Estimate e =
        unpolarized_model_probability(kPi / 3.0, Method::monte_carlo, mc, 256);
    benchmark::DoNotOptimize(e);
  }
  state.SetItemsProcessed(state.iterations() * mc.samples);
}
BENCHMARK(BM_UnpolarizedGroupedMC)->Arg(100000)->Arg(1000000);

void BM_SignModelChannels(benchmark::State& state) {
  const CorrelationModel model = make_sign_model(MCConfig{9, state.range(0)});
  for (auto _ : state) {
    benchmark::DoNotOptimize(model.channels(0.6));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SignModelChannels)->Arg(100000);

void BM_ChshScanQm(benchmark::State& state) {
  const CorrelationModel model = make_qm_model();
  for (auto _ : state) {
    benchmark::DoNotOptimize(scan_for_max_violation(model, static_cast<int>(state.range(0))));
  }
}
BENCHMARK(BM_ChshScanQm)->Arg(12)->Arg(16);

void BM_AssignmentSearch(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(exhaustive_assignment_search(true));
  }
}
BENCHMARK(BM_AssignmentSearch);

}  // namespace

BENCHMARK_MAIN();
