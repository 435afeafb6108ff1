#include "doctest.h"

#include <cmath>

#include "regimetest/dgp.hpp"
#include "regimetest/test_stability.hpp"

using namespace regimetest;

namespace {

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

FittedModel fit_null(const Mat& y, int p) {
  ModelSpec spec;
  spec.family = p == 0 ? ModelFamily::Normal : ModelFamily::AR;
  spec.p = p;
  spec.k = 1;
  return fit_linear(y, spec, false);
}

}  // namespace

TEST_CASE("chp_score_terms: textbook score for the location model") {
  const SimOutput sim = simulate_ar(80, 1);
  Mat y = sim.y;
  const FittedModel fit = fit_null(y, 0);
  const CHPScores sc = chp_score_terms(y, 0, fit);
  const double mu = fit.theta[0];
  const double s2 = fit.theta[1];
  for (int t = 0; t < 5; ++t)
    CHECK(sc.score(t, 0) == doctest::Approx((y(t, 0) - mu) / s2).epsilon(1e-12));
}

TEST_CASE("chp_score_terms: finite-difference validation") {
  const SimOutput sim = simulate_ar(60, 3);
  const FittedModel fit = fit_null(sim.y, 1);
  const CHPScores sc = chp_score_terms(sim.y, 1, fit);
  const int d = 3;

  // per-observation loglik as a function of (mu, phi, sigma2)
  auto term = [&](const Vec& th, int r) {
    const double mu = th[0], phi = th[1], s2 = th[2];
    const int t = 1 + r;
    const double e = sim.y(t, 0) - mu - phi * (sim.y(t - 1, 0) - mu);
    return -0.5 * std::log(2.0 * M_PI * s2) - e * e / (2.0 * s2);
  };
  Vec th(3);
  th << fit.theta[0], fit.theta[1], fit.theta[2];

  for (int r = 0; r < 10; ++r) {
    for (int i = 0; i < d; ++i) {
      const double h = 1e-6 * std::max(1.0, std::abs(th[i]));
      Vec tp = th, tm = th;
      tp[i] += h;
      tm[i] -= h;
      const double fd = (term(tp, r) - term(tm, r)) / (2.0 * h);
      CHECK(sc.score(r, i) == doctest::Approx(fd).epsilon(1e-6));
      for (int j = i; j < d; ++j) {
        Vec tpp = th, tpm = th, tmp = th, tmm = th;
        const double hj = 1e-5 * std::max(1.0, std::abs(th[j]));
        const double hi = 1e-5 * std::max(1.0, std::abs(th[i]));
        tpp[i] += hi; tpp[j] += hj;
        tpm[i] += hi; tpm[j] -= hj;
        tmp[i] -= hi; tmp[j] += hj;
        tmm[i] -= hi; tmm[j] -= hj;
        const double fdh =
            (term(tpp, r) - term(tpm, r) - term(tmp, r) + term(tmm, r)) / (4.0 * hi * hj);
        CHECK(sc.hessian[r](i, j) == doctest::Approx(fdh).epsilon(2e-4));
      }
    }
  }
}

TEST_CASE("chp_score_terms: score sums to zero at the MLE") {
  const SimOutput sim = simulate_ar(300, 5);
  const FittedModel fit = fit_null(sim.y, 1);
  const CHPScores sc = chp_score_terms(sim.y, 1, fit);
  const Vec total = sc.score.colwise().sum().transpose();
  CHECK(total.lpNorm<Eigen::Infinity>() < 1e-6 * sim.y.rows());
}

TEST_CASE("chp_statistics: sup clamp and direct formula") {
  const SimOutput sim = simulate_ar(200, 9);
  const FittedModel fit = fit_null(sim.y, 1);
  CHPConfig config;
  config.msvar = false;
  config.rho_grid_size = 10;
  const CHPStatistics st = chp_statistics(sim.y, 1, config, fit);
  // sup_ts = max over grid of 0.5 * max(0, ratio)^2, from the stored ratios
  double expect = 0.0;
  for (int i = 0; i < st.gamma_star.rows(); ++i)
    for (int j = 0; j < st.gamma_star.cols(); ++j) {
      const double c = std::max(0.0, st.gamma_star(i, j));
      expect = std::max(expect, 0.5 * c * c);
    }
  CHECK(st.sup_ts == doctest::Approx(expect).epsilon(1e-12));
  CHECK(st.exp_ts >= 0.0);
  // a ratio of 2 at the argmax would give sup_ts = 2 by the formula
  if (st.gamma_star.maxCoeff() <= 0.0) CHECK(st.sup_ts == 0.0);
}

TEST_CASE("chp_statistics: serial-weight recursion equals the naive double sum") {
  const SimOutput sim = simulate_ar(150, 13);
  const FittedModel fit = fit_null(sim.y, 1);
  const CHPScores sc = chp_score_terms(sim.y, 1, fit);
  const int t_eff = static_cast<int>(sc.score.rows());
  const double rho = 0.55;
  Vec h = Vec::Zero(3);
  h[0] = 1.0;

  // recursion
  Vec mu2_fast(t_eff);
  double a = 0.0;
  for (int t = 0; t < t_eff; ++t) {
    const double s = sc.score.row(t).dot(h);
    const double q = h.dot(sc.hessian[t] * h) + s * s;
    mu2_fast[t] = 0.5 * q + s * a;
    a = rho * (a + s);
  }
  // naive double sum
  Vec mu2_slow(t_eff);
  for (int t = 0; t < t_eff; ++t) {
    const double s = sc.score.row(t).dot(h);
    const double q = h.dot(sc.hessian[t] * h) + s * s;
    double serial = 0.0;
    for (int u = 0; u < t; ++u)
      serial += std::pow(rho, t - u) * (sc.score.row(u).dot(h));
    mu2_slow[t] = 0.5 * q + s * serial;
  }
  CHECK((mu2_fast - mu2_slow).lpNorm<Eigen::Infinity>() < 1e-10);
}

TEST_CASE("chp_statistics: scale invariance of both statistics") {
  const SimOutput sim = simulate_ar(250, 17);
  CHPConfig config;
  config.msvar = true;
  config.rho_grid_size = 8;
  config.h_grid_size = 8;
  const FittedModel f1 = fit_null(sim.y, 1);
  const CHPStatistics a = chp_statistics(sim.y, 1, config, f1);
  Mat y2 = 3.0 * sim.y;
  const FittedModel f2 = fit_null(y2, 1);
  const CHPStatistics b = chp_statistics(y2, 1, config, f2);
  CHECK(a.sup_ts == doctest::Approx(b.sup_ts).epsilon(1e-8));
  CHECK(a.exp_ts == doctest::Approx(b.exp_ts).epsilon(1e-8));
}

TEST_CASE("chp_test: linear data fails to reject; output shape") {
  CHPConfig config;
  config.n_boot = 200;
  config.msvar = true;
  config.rho_grid_size = 10;
  config.h_grid_size = 6;
  config.seed = 19;
  config.workers = 2;
  const SimOutput sim = simulate_ar(300, 23);
  const TestResult res = chp_test(sim.y, 1, config);
  REQUIRE(res.rows.size() == 2);
  CHECK(res.rows[0].label == "supTS");
  CHECK(res.rows[1].label == "expTS");
  for (const TestRow& row : res.rows) {
    CHECK(row.pvalue >= 0.0);
    CHECK(row.pvalue <= 1.0);
  }
  CHECK(res.rows[0].pvalue > 0.05);
}

TEST_CASE("chp_test: deterministic under seed") {
  CHPConfig config;
  config.n_boot = 60;
  config.rho_grid_size = 6;
  config.seed = 29;
  const SimOutput sim = simulate_ar(150, 31);
  const TestResult a = chp_test(sim.y, 1, config);
  config.workers = 4;
  const TestResult b = chp_test(sim.y, 1, config);
  CHECK(a.rows[0].pvalue == b.rows[0].pvalue);
  CHECK(a.rows[1].pvalue == b.rows[1].pvalue);
  CHECK(a.rows[0].stat == b.rows[0].stat);
}

TEST_CASE("chp config validation") {
  CHPConfig config;
  config.rho_b = 1.5;
  CHECK_THROWS_AS(config.validate(), validation_error);
  config = CHPConfig{};
  config.rho_grid_size = 1;
  CHECK_THROWS_AS(config.validate(), validation_error);
}
