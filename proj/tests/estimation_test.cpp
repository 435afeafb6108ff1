#include "doctest.h"

#include <cmath>

#include "regimetest/dgp.hpp"
#include "regimetest/estimation.hpp"
#include "regimetest/rng.hpp"

using namespace regimetest;

namespace {

SimOutput simulate_msar(int n, std::uint64_t seed, double p11 = 0.95, double p22 = 0.90) {
  DgpSpec dgp;
  dgp.family = ModelFamily::MSAR;
  dgp.n = n;
  dgp.p = 1;
  dgp.k = 2;
  dgp.mu = Mat(2, 1);
  dgp.mu << 5.0, 10.0;
  dgp.sigma = {Mat::Constant(1, 1, 1.0), Mat::Constant(1, 1, 2.0)};
  dgp.phi = {Mat::Constant(1, 1, 0.75)};
  dgp.trans = two_state(p11, p22);
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

ModelSpec ar_spec(int p) {
  ModelSpec spec;
  spec.family = p == 0 ? ModelFamily::Normal : ModelFamily::AR;
  spec.p = p;
  spec.k = 1;
  return spec;
}

ModelSpec msar_spec(int p, int k) {
  ModelSpec spec;
  spec.family = p == 0 ? ModelFamily::HMM : ModelFamily::MSAR;
  spec.p = p;
  spec.k = k;
  return spec;
}

}  // namespace

TEST_CASE("fit_linear: constant series flagged degenerate") {
  Mat y = Mat::Constant(30, 1, 4.2);
  ModelSpec spec = ar_spec(0);
  CHECK_THROWS_AS(fit_linear(y, ar_spec(1), false), estimation_error);  // rank deficient lags
  const FittedModel fm = fit_linear(y, spec, false);
  CHECK(fm.theta[0] == doctest::Approx(4.2));
  CHECK(fm.theta[1] == doctest::Approx(0.0));
  REQUIRE(!fm.warnings.empty());
  CHECK(fm.warnings[0].find("degenerate") != std::string::npos);
}

TEST_CASE("fit_linear: recovers AR(1) parameters within 3 s.e.") {
  int ok_mu = 0, ok_phi = 0, ok_sig = 0;
  for (int rep = 0; rep < 20; ++rep) {
    const SimOutput sim = simulate_ar(500, 100 + rep);
    const FittedModel fm = fit_linear(sim.y, ar_spec(1), true);
    REQUIRE(fm.se.has_value());
    const Vec& se = *fm.se;
    if (std::abs(fm.theta[0] - 5.0) < 3.0 * se[0]) ++ok_mu;
    if (std::abs(fm.theta[1] - 0.75) < 3.0 * se[1]) ++ok_phi;
    if (std::abs(fm.theta[2] - 1.0) < 3.0 * se[2]) ++ok_sig;
  }
  CHECK(ok_mu >= 18);
  CHECK(ok_phi >= 18);
  CHECK(ok_sig >= 18);
}

TEST_CASE("fit_linear: information criteria use the ML parameter count") {
  const SimOutput sim = simulate_ar(500, 7);
  const FittedModel fm = fit_linear(sim.y, ar_spec(1), false);
  CHECK(fm.t_effective == 499);
  CHECK(fm.aic == doctest::Approx(2.0 * 3 - 2.0 * fm.loglik));
  CHECK(fm.bic == doctest::Approx(3 * std::log(499.0) - 2.0 * fm.loglik));
}

TEST_CASE("fit_switching_em: k = 2 on linear data dominates the linear fit") {
  const SimOutput sim = simulate_ar(300, 9);
  const FittedModel lin = fit_linear(sim.y, ar_spec(1), false);
  EstimOptions opt;
  opt.use_diff_init = 3;
  opt.seed = 1;
  const FittedModel sw = fit_switching_em(sim.y, msar_spec(1, 2), opt);
  CHECK(sw.loglik >= lin.loglik - 1e-6);
}

TEST_CASE("fit_switching_em: recovers the switching DGP") {
  int ok = 0;
  for (int rep = 0; rep < 20; ++rep) {
    const SimOutput sim = simulate_msar(500, 7000 + rep);
    EstimOptions opt;
    opt.use_diff_init = 5;
    opt.seed = 100 + rep;
    opt.get_se = true;
    FittedModel fm = fit_switching_em(sim.y, msar_spec(1, 2), opt);
    REQUIRE(fm.se.has_value());
    const Vec& se = *fm.se;
    // canonical order: regime 1 has the lower mean
    const bool good =
        std::isfinite(se[0]) && std::isfinite(se[1]) &&
        std::abs(fm.theta[0] - 5.0) < 3.0 * se[0] &&
        std::abs(fm.theta[1] - 10.0) < 3.0 * se[1] &&
        std::abs(fm.theta[2] - 0.75) < 3.0 * std::max(se[2], 0.05);
    if (good) ++ok;
  }
  CHECK(ok >= 18);
}

TEST_CASE("fit_switching_em: per-iteration loglik never decreases") {
  Rng rng(2024);
  for (int rep = 0; rep < 12; ++rep) {
    const SimOutput sim = simulate_msar(160, 300 + rep, 0.9, 0.8);
    EstimOptions opt;
    opt.use_diff_init = 2;
    opt.seed = rep;
    const FittedModel fm = fit_switching_em(sim.y, msar_spec(1, 2), opt);
    REQUIRE(fm.em_loglik_path.size() >= 2);
    for (std::size_t i = 1; i < fm.em_loglik_path.size(); ++i)
      CHECK(fm.em_loglik_path[i] >= fm.em_loglik_path[i - 1] - 1e-10);
  }
}

TEST_CASE("fit_switching_em: canonical regime order (mean ascending)") {
  const SimOutput sim = simulate_msar(400, 11);
  EstimOptions opt;
  opt.use_diff_init = 3;
  opt.seed = 5;
  const FittedModel fm = fit_switching_em(sim.y, msar_spec(1, 2), opt);
  CHECK(fm.theta[0] < fm.theta[1]);
}

TEST_CASE("fit_switching_em: nesting a padded smaller solution") {
  const SimOutput sim = simulate_msar(250, 13);
  EstimOptions opt2;
  opt2.use_diff_init = 3;
  opt2.seed = 2;
  const FittedModel fit2 = fit_switching_em(sim.y, msar_spec(1, 2), opt2);

  // pad the 2-regime solution into a 3-regime start: duplicate regime 2
  const Params p2 = fit2.params();
  ModelSpec spec3 = msar_spec(1, 3);
  Params p3;
  p3.mu.resize(3, 1);
  p3.mu << p2.mu(0, 0), p2.mu(1, 0), p2.mu(1, 0) + 0.1;
  p3.phi = p2.phi;
  p3.beta.resize(0, 1);
  p3.sigma = {p2.sigma[0], p2.sigma[1], p2.sigma[1]};
  Mat pm(3, 3);
  const Mat& q2 = p2.trans.p_mat;
  pm << q2(0, 0), q2(0, 1) / 2, q2(0, 1) / 2,
        q2(1, 0), q2(1, 1) - 0.005, 0.005,
        0.0,      0.005,            q2(1, 1) - 0.0;
  for (int c = 0; c < 3; ++c) pm.col(c) /= pm.col(c).sum();
  p3.trans = TransitionMatrix(3, pm);

  EstimOptions opt3;
  opt3.use_diff_init = 1;
  opt3.init_theta = pack_theta(spec3, p3);
  opt3.seed = 3;
  const FittedModel fit3 = fit_switching_em(sim.y, spec3, opt3);
  CHECK(fit3.loglik >= fit2.loglik - 1e-6);
}

TEST_CASE("fit_switching_mle: does not fall below the EM start") {
  const SimOutput sim = simulate_msar(250, 17);
  EstimOptions em_opt;
  em_opt.use_diff_init = 3;
  em_opt.seed = 4;
  const FittedModel em = fit_switching_em(sim.y, msar_spec(1, 2), em_opt);

  EstimOptions ml_opt;
  ml_opt.method = EstimOptions::Method::MLE;
  ml_opt.use_diff_init = 1;
  ml_opt.init_theta = em.theta;
  ml_opt.seed = 4;
  const FittedModel ml = fit_switching_mle(sim.y, msar_spec(1, 2), ml_opt);
  CHECK(ml.loglik >= em.loglik - 1e-6);
}

TEST_CASE("fit_switching_mle: pinned bounds return the pinned point") {
  const SimOutput sim = simulate_msar(150, 19);
  EstimOptions em_opt;
  em_opt.use_diff_init = 2;
  em_opt.seed = 6;
  const FittedModel em = fit_switching_em(sim.y, msar_spec(1, 2), em_opt);

  EstimOptions ml_opt;
  ml_opt.method = EstimOptions::Method::MLE;
  ml_opt.use_diff_init = 1;
  ml_opt.init_theta = em.theta;
  ml_opt.mle_theta_low = em.theta;
  ml_opt.mle_theta_upp = em.theta;
  const FittedModel ml = fit_switching_mle(sim.y, msar_spec(1, 2), ml_opt);
  // every pinned coordinate equals the EM solution; transition columns are
  // renormalized copies of the same values
  CHECK((ml.theta - em.theta).lpNorm<Eigen::Infinity>() < 1e-9);
}

TEST_CASE("fit_switching_mle: probability bounds are honored") {
  const SimOutput sim = simulate_msar(200, 23);
  ModelSpec spec = msar_spec(1, 2);
  const double eps = 0.05;
  Vec low = Vec::Constant(spec.n_theta(), -std::numeric_limits<double>::infinity());
  Vec upp = Vec::Constant(spec.n_theta(), std::numeric_limits<double>::infinity());
  for (int i = spec.n_theta() - 4; i < spec.n_theta(); ++i) {
    low[i] = eps;
    upp[i] = 1.0 - eps;
  }
  EstimOptions opt;
  opt.method = EstimOptions::Method::MLE;
  opt.use_diff_init = 2;
  opt.seed = 12;
  opt.mle_theta_low = low;
  opt.mle_theta_upp = upp;
  const FittedModel fm = fit_switching_mle(sim.y, spec, opt);
  for (int i = spec.n_theta() - 4; i < spec.n_theta(); ++i) {
    CHECK(fm.theta[i] >= eps - 1e-12);
    CHECK(fm.theta[i] <= 1.0 - eps + 1e-12);
  }
}

TEST_CASE("standard_errors: linear AR matches closed-form OLS within 2%") {
  const SimOutput sim = simulate_ar(500, 29);
  FittedModel closed = fit_linear(sim.y, ar_spec(1), true);
  REQUIRE(closed.se.has_value());
  const Vec ols_se = *closed.se;

  FittedModel numeric = closed;
  numeric.se.reset();
  const Vec num_se = standard_errors(sim.y, numeric);
  for (int i = 0; i < 3; ++i) {
    REQUIRE(std::isfinite(num_se[i]));
    CHECK(std::abs(num_se[i] - ols_se[i]) / ols_se[i] < 0.02);
  }
}

TEST_CASE("standard_errors: scale equivariance of the mean") {
  const SimOutput sim = simulate_ar(400, 31);
  FittedModel a = fit_linear(sim.y, ar_spec(1), false);
  standard_errors(sim.y, a);
  FittedModel b = fit_linear(10.0 * sim.y, ar_spec(1), false);
  standard_errors(Mat(10.0 * sim.y), b);
  REQUIRE(a.se.has_value());
  REQUIRE(b.se.has_value());
  CHECK((*b.se)[0] == doctest::Approx(10.0 * (*a.se)[0]).epsilon(1e-3));
}

TEST_CASE("standard_errors: Hessian information is PSD at a clean optimum") {
  const SimOutput sim = simulate_msar(500, 37);
  EstimOptions opt;
  opt.use_diff_init = 3;
  opt.seed = 8;
  FittedModel fm = fit_switching_em(sim.y, msar_spec(1, 2), opt);
  const Vec se = standard_errors(sim.y, fm);
  // mean/variance/phi coordinates must carry finite positive errors
  for (int i = 0; i < 5; ++i) {
    REQUIRE(std::isfinite(se[i]));
    CHECK(se[i] > 0.0);
  }
}

TEST_CASE("initial_values: structural checks") {
  const SimOutput sim = simulate_msar(200, 41);
  ModelSpec spec = msar_spec(1, 2);
  const Vec a = initial_values(sim.y, spec, 5);
  const Vec b = initial_values(sim.y, spec, 5);
  const Vec c = initial_values(sim.y, spec, 6);
  CHECK((a - b).lpNorm<Eigen::Infinity>() == 0.0);
  CHECK((a - c).lpNorm<Eigen::Infinity>() > 0.0);

  const Params par = unpack_theta(spec, a);
  CHECK(par.mu(0, 0) != par.mu(1, 0));
  for (int i = 0; i < 2; ++i) {
    CHECK(par.trans.p_mat.col(i).sum() == doctest::Approx(1.0));
    CHECK(par.trans.p_mat(i, i) >= 0.7);
    CHECK(par.trans.p_mat(i, i) <= 0.99);
  }
}

TEST_CASE("estimation options validation") {
  EstimOptions opt;
  opt.use_diff_init = 0;
  CHECK_THROWS_AS(opt.validate(), validation_error);
  opt = EstimOptions{};
  opt.tol = 0.0;
  CHECK_THROWS_AS(opt.validate(), validation_error);
  opt = EstimOptions{};
  opt.mle_theta_low = Vec::Zero(3);
  CHECK_THROWS_AS(opt.validate(), validation_error);  // upp missing
}
