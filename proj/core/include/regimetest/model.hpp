#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regimetest/markov.hpp"
#include "regimetest/types.hpp"

namespace regimetest {

// Model families. The X-suffixed ones carry exogenous regressors; Normal
// and HMM are the p = 0 cases of AR and MSAR with q >= 1 allowed.
enum class ModelFamily {
  Normal, AR, ARX, VAR, VARX, MSAR, MSARX, MSVAR, MSVARX, HMM
};

std::string family_name(ModelFamily f);
ModelFamily family_from_name(const std::string& name);
bool family_is_switching(ModelFamily f);
bool family_has_exog(ModelFamily f);

/*
 * Shape of a model: lag order, series count, regime count, which parameter
 * blocks switch, and the exogenous regressor matrix (aligned with y rows).
 */
struct ModelSpec {
  ModelFamily family = ModelFamily::AR;
  int p = 0;
  int q = 1;
  int k = 1;
  bool msmu = true;
  bool msvar = true;
  std::optional<Mat> exog;

  int qz() const { return exog ? static_cast<int>(exog->cols()) : 0; }
  bool switching() const { return k >= 2; }
  int n_mu() const { return (switching() && msmu ? k : 1) * q; }
  int n_phi() const { return p * q * q; }
  int n_beta() const { return qz() * q; }
  int n_sigma_each() const { return q * (q + 1) / 2; }
  int n_sigma() const { return (switching() && msvar ? k : 1) * n_sigma_each(); }
  int n_trans() const { return switching() ? k * k : 0; }
  int n_theta() const { return n_mu() + n_phi() + n_beta() + n_sigma() + n_trans(); }

  void validate() const;
};

/*
 * Structured view of the flat parameter vector. The flat layout is
 *   [ mu block | phi block | beta block | sigma block (vech) | vec(P) ]
 * with mu regime-major (series fastest), phi row-major within each lag,
 * vech the upper triangle by rows ((1,1),(1,2),...,(2,2),...), and vec(P)
 * column-major so it reads p_11, p_12, ..., p_1M, p_21, ...
 */
struct Params {
  Mat mu;                  // k x q (rows equal when the mean does not switch)
  std::vector<Mat> phi;    // p matrices, each q x q
  Mat beta;                // qz x q
  std::vector<Mat> sigma;  // k covariance matrices q x q (equal when fixed)
  TransitionMatrix trans;  // valid only when k >= 2
};

Params unpack_theta(const ModelSpec& spec, const Vec& theta);
Vec pack_theta(const ModelSpec& spec, const Params& par);
std::vector<std::string> theta_names(const ModelSpec& spec);

// vech/unvech for symmetric matrices, upper triangle by rows.
Vec vech(const Mat& s);
Mat unvech(const Vec& v, int q);

}  // namespace regimetest
