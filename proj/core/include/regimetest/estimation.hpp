#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "regimetest/likelihood.hpp"
#include "regimetest/model.hpp"

namespace regimetest {

struct EstimOptions {
  bool msmu = true;
  bool msvar = true;
  enum class Method { EM, MLE } method = Method::EM;
  int use_diff_init = 1;
  int maxit = 500;
  double tol = 1e-8;
  bool get_se = false;
  std::optional<Vec> mle_theta_low;
  std::optional<Vec> mle_theta_upp;
  std::optional<Vec> init_theta;  // used as start #0 when present
  bool mle_refine = false;        // polish the EM solution with MLE
  int mle_max_evals = 0;          // 0: automatic (scales with dimension)
  std::uint64_t seed = 0;
  int workers = 1;

  void validate() const;
};

struct StartTrace {
  Vec init_theta;
  double loglik = -std::numeric_limits<double>::infinity();
  bool converged = false;
};

struct FittedModel {
  ModelSpec spec;
  Vec theta;
  std::vector<std::string> names;
  double loglik = -std::numeric_limits<double>::infinity();
  double aic = kNaN;
  double bic = kNaN;
  std::optional<Vec> se;             // NaN entries where unavailable
  SmootherOutput smoothed;           // empty for linear fits
  Mat residuals;                     // T_eff x q
  std::vector<StartTrace> trace;
  std::vector<double> em_loglik_path;  // per-iteration loglik of winning start
  bool converged = false;
  std::vector<std::string> warnings;
  int t_effective = 0;

  Params params() const { return unpack_theta(spec, theta); }
};

// OLS fit of the one-regime families (Normal/AR/ARX/VAR/VARX), with the
// maximum-likelihood variance normalization RSS / T_eff.
FittedModel fit_linear(const Mat& y, const ModelSpec& spec, bool get_se = true);

// EM estimation of switching families; multi-start with the best
// log-likelihood retained and every start recorded in trace.
FittedModel fit_switching_em(const Mat& y, const ModelSpec& spec,
                             const EstimOptions& options);

// Direct likelihood maximization with box constraints; transition columns
// stay on the simplex through a logistic reparameterization.
FittedModel fit_switching_mle(const Mat& y, const ModelSpec& spec,
                              const EstimOptions& options);

// Dispatcher on options.method (EM optionally refined by MLE).
FittedModel fit_switching(const Mat& y, const ModelSpec& spec,
                          const EstimOptions& options);

// Inverse numerical Hessian standard errors at fitted.theta; entries where
// the Hessian is singular or has the wrong sign are NaN and flagged.
Vec standard_errors(const Mat& y, FittedModel& fitted);

// Randomized EM/MLE starting point built around the linear fit.
Vec initial_values(const Mat& y, const ModelSpec& spec, std::uint64_t seed);

// Regimes sorted by mean of the first series (ties by variance); returns
// the permuted theta.
Vec canonicalize_regimes(const ModelSpec& spec, const Vec& theta);

}  // namespace regimetest
