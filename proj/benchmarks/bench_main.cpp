#include <benchmark/benchmark.h>

#include "regimetest/dgp.hpp"
#include "regimetest/estimation.hpp"
#include "regimetest/mc.hpp"
#include "regimetest/test_moments.hpp"
#include "regimetest/test_stability.hpp"

using namespace regimetest;

namespace {

SimOutput msar_sample(int n) {
  DgpSpec dgp;
  dgp.family = ModelFamily::MSAR;
  dgp.n = n;
  dgp.p = 1;
  dgp.k = 2;
  dgp.mu = Mat(2, 1);
  dgp.mu << 5.0, 10.0;
  dgp.sigma = {Mat::Constant(1, 1, 1.0), Mat::Constant(1, 1, 2.0)};
  dgp.phi = {Mat::Constant(1, 1, 0.75)};
  dgp.trans = two_state(0.95, 0.90);
  dgp.seed = 1;
  return simulate(dgp);
}

void bm_hamilton_filter(benchmark::State& state) {
  const int t_len = static_cast<int>(state.range(0));
  const int p = static_cast<int>(state.range(1));
  SimOutput sim = msar_sample(t_len);
  ModelSpec spec;
  spec.family = ModelFamily::MSAR;
  spec.p = p;
  spec.k = 2;
  Vec theta = initial_values(sim.y, spec, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hamilton_filter(theta, sim.y, spec).loglik);
  }
}
BENCHMARK(bm_hamilton_filter)->Args({500, 1})->Args({2000, 1})->Args({500, 4});

void bm_em_fit(benchmark::State& state) {
  SimOutput sim = msar_sample(static_cast<int>(state.range(0)));
  ModelSpec spec;
  spec.family = ModelFamily::MSAR;
  spec.p = 1;
  spec.k = 2;
  for (auto _ : state) {
    EstimOptions opt;
    opt.use_diff_init = 1;
    opt.seed = 5;
    benchmark::DoNotOptimize(fit_switching_em(sim.y, spec, opt).loglik);
  }
}
BENCHMARK(bm_em_fit)->Arg(200)->Arg(500);

void bm_moment_stats(benchmark::State& state) {
  SimOutput sim = msar_sample(static_cast<int>(state.range(0)));
  const Vec e = sim.y.col(0).array() - sim.y.col(0).mean();
  for (auto _ : state) {
    benchmark::DoNotOptimize(moment_stats(e).m_stat);
  }
}
BENCHMARK(bm_moment_stats)->Arg(500)->Arg(5000);

void bm_mc_pvalue(benchmark::State& state) {
  Rng rng(1);
  std::vector<double> nulls(static_cast<std::size_t>(state.range(0)));
  for (double& v : nulls) v = rng.normal();
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc_pvalue(0.5, nulls, 7).pvalue);
  }
}
BENCHMARK(bm_mc_pvalue)->Arg(99)->Arg(9999);

void bm_chp_statistics(benchmark::State& state) {
  SimOutput sim = msar_sample(500);
  ModelSpec spec;
  spec.family = ModelFamily::AR;
  spec.p = 1;
  spec.k = 1;
  FittedModel fit0 = fit_linear(sim.y, spec, false);
  CHPConfig config;
  config.msvar = true;
  config.rho_grid_size = static_cast<int>(state.range(0));
  config.h_grid_size = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(chp_statistics(sim.y, 1, config, fit0).sup_ts);
  }
}
BENCHMARK(bm_chp_statistics)->Arg(10)->Arg(20);

}  // namespace

BENCHMARK_MAIN();
