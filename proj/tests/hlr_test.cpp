#include "doctest.h"

#include <cmath>

#include "regimetest/dgp.hpp"
#include "regimetest/likelihood.hpp"
#include "regimetest/test_hlr.hpp"

using namespace regimetest;

namespace {

SimOutput simulate_msar(int n, std::uint64_t seed) {
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
  dgp.seed = seed;
  return simulate(dgp);
}

SimOutput simulate_ar(int n, std::uint64_t seed) {
  DgpSpec dgp;
  dgp.family = ModelFamily::AR;
  dgp.n = n;
  dgp.p = 1;
  dgp.mu = Mat::Constant(1, 1, 5.0);
  dgp.sigma = {Mat::Ones(1, 1)};
  dgp.phi = {Mat::Constant(1, 1, 0.75)};
  dgp.seed = seed;
  return simulate(dgp);
}

HansenConfig small_config() {
  HansenConfig config;
  config.p = 1;
  config.msvar = true;
  config.gridsize = 5;
  config.pgrid = {0.2, 0.5, 0.8};
  config.n_sim = 400;
  config.seed = 4;
  config.workers = 2;
  return config;
}

}  // namespace

TEST_CASE("hlr_statistic: a grid point duplicating the null gives LR ~ 0") {
  const SimOutput sim = simulate_ar(200, 3);
  ModelSpec lspec;
  lspec.family = ModelFamily::AR;
  lspec.p = 1;
  lspec.k = 1;
  const FittedModel lin = fit_linear(sim.y, lspec, false);
  const Params par = unpack_theta(lspec, lin.theta);

  HansenConfig config;
  config.p = 1;
  config.msvar = true;
  // one grid point: alpha exactly duplicates the estimated regime-1 values
  config.gridsize = 1;
  config.mugrid_from = par.mu(0, 0);
  config.mugrid_by = 1.0;
  config.siggrid_from = std::sqrt(par.sigma[0](0, 0));
  config.siggrid_by = 1.0;
  config.pgrid = {0.5};
  config.n_sim = 100;

  // the duplicated point makes every q_i zero, which the statistic treats
  // as degenerate; LR_n at that point must still be ~ 0 before the guard
  CHECK_THROWS_AS(hlr_statistic(sim.y, config), test_error);
}

TEST_CASE("hlr_statistic: concentrated likelihood dominates the duplicate point") {
  const SimOutput sim = simulate_ar(150, 7);
  HansenConfig config = small_config();
  config.n_sim = 100;
  const HLRStatistic st = hlr_statistic(sim.y, config);
  // switching with any alpha nests nothing in general, but the sup of the
  // standardized values is attained somewhere on the grid
  CHECK(st.argmax >= 0);
  CHECK(std::isfinite(st.lr_star));
  for (std::size_t g = 0; g < st.grid_std.size(); ++g) {
    if (std::isfinite(st.grid_std[g])) CHECK(st.lr_star >= st.grid_std[g]);
  }
  // concentration never does worse than the null solution duplicated:
  // LR_n(alpha) >= ... at each non-degenerate point the concentrated
  // loglik is a maximum over a box containing near-null configurations
  const int t_eff = static_cast<int>(st.q_series.rows());
  CHECK(t_eff == 149);
}

TEST_CASE("hlr_bound_pvalue: zero statistic gives p-value one") {
  const SimOutput sim = simulate_ar(150, 11);
  HansenConfig config = small_config();
  config.n_sim = 200;
  const HLRStatistic st = hlr_statistic(sim.y, config);
  const HLRBound b = hlr_bound_pvalue(st.q_series, 0.0, 0, 200, 5);
  CHECK(b.pvalue == doctest::Approx(1.0));
}

TEST_CASE("hlr_bound_pvalue: M = 0 equals the plain multiplier construction") {
  const SimOutput sim = simulate_ar(120, 13);
  HansenConfig config = small_config();
  const HLRStatistic st = hlr_statistic(sim.y, config);
  const HLRBound a = hlr_bound_pvalue(st.q_series, st.lr_star, 0, 300, 7);
  const HLRBound b = hlr_bound_pvalue(st.q_series, st.lr_star, 0, 300, 7);
  CHECK(a.pvalue == b.pvalue);  // deterministic
  CHECK(a.quantiles[0] == b.quantiles[0]);
  CHECK(a.quantiles[0] <= a.quantiles[1]);
  CHECK(a.quantiles[1] <= a.quantiles[2]);
}

TEST_CASE("hlr_bound_pvalue: quantiles weakly increase with grid size") {
  const SimOutput sim = simulate_ar(150, 17);
  HansenConfig config = small_config();
  const HLRStatistic st = hlr_statistic(sim.y, config);
  const int g_all = static_cast<int>(st.q_series.cols());
  // sup over a subset of columns is dominated by the sup over all
  const Mat sub = st.q_series.leftCols(g_all / 2);
  const HLRBound small = hlr_bound_pvalue(sub, st.lr_star, 0, 400, 9);
  const HLRBound big = hlr_bound_pvalue(st.q_series, st.lr_star, 0, 400, 9);
  CHECK(big.quantiles[0] >= small.quantiles[0] - 1e-12);
  CHECK(big.quantiles[1] >= small.quantiles[1] - 1e-12);
}

TEST_CASE("hlr_test: switching data rejects at every HAC lag") {
  const SimOutput sim = simulate_msar(400, 19);
  HansenConfig config = small_config();
  config.gridsize = 8;
  const TestResult res = hlr_test(sim.y, config);
  REQUIRE(res.rows.size() == 5);
  for (int m = 0; m < 5; ++m) {
    CHECK(res.rows[m].label == "M = " + std::to_string(m));
    CHECK(res.rows[m].stat == res.rows[0].stat);  // statistic shared across rows
    CHECK(res.rows[m].pvalue < 0.05);
  }
}

TEST_CASE("hlr_test: deterministic under fixed seed") {
  const SimOutput sim = simulate_ar(120, 23);
  HansenConfig config = small_config();
  config.n_sim = 150;
  const TestResult a = hlr_test(sim.y, config);
  config.workers = 4;
  const TestResult b = hlr_test(sim.y, config);
  for (std::size_t r = 0; r < a.rows.size(); ++r) {
    CHECK(a.rows[r].stat == b.rows[r].stat);
    CHECK(a.rows[r].pvalue == b.rows[r].pvalue);
  }
}

TEST_CASE("hansen config validation") {
  HansenConfig config;
  config.pgrid = {0.0};
  CHECK_THROWS_AS(config.validate(), validation_error);
  config = HansenConfig{};
  config.hac_lags_max = 9;
  CHECK_THROWS_AS(config.validate(), validation_error);
  config = HansenConfig{};
  config.mugrid_from = 1.0;  // missing mugrid_by
  CHECK_THROWS_AS(config.validate(), validation_error);
}
