#pragma once

#include <optional>
#include <vector>

#include "regimetest/model.hpp"

namespace regimetest {

/*
 * Data-generating process description. Matches the simulation recursion
 *   y_t = mu_{S_t} + sum_k Phi_k (y_{t-k} - mu_{S_{t-k}}) + Z_t beta
 *         + Sigma_{S_t}^{1/2} eps_t
 * with Gaussian eps unless a user error matrix is supplied. For q = 1 the
 * sigma entries are variances; multivariate sigmas are covariance matrices.
 */
struct DgpSpec {
  ModelFamily family = ModelFamily::AR;
  int n = 0;
  int q = 1;
  int p = 0;
  Mat mu;                               // k x q (or 1 x q for linear)
  std::vector<Mat> phi;                 // p matrices q x q
  std::vector<Mat> sigma;               // k matrices q x q
  std::optional<Mat> beta;              // qz x q
  std::optional<Mat> exog;              // (n + burnin) x qz
  int k = 1;
  std::optional<TransitionMatrix> trans;
  int burnin = -1;                      // -1: family default (0 or 100)
  std::optional<Mat> eps;               // (n + burnin) x q standardized errors
  std::uint64_t seed = 0;

  int resolved_burnin() const;
  void validate() const;
};

struct SimOutput {
  Mat y;                     // n x q
  RegimePath states;         // length n; constant 1 for linear families
  DgpSpec spec;
  bool nonstationary = false;  // spectral radius of the AR companion >= 1
};

SimOutput simulate(const DgpSpec& spec);

// n i.i.d. mean-zero Gaussian rows with covariance sigma.
Mat draw_errors(int n, int q, const Mat& sigma, std::uint64_t seed);

}  // namespace regimetest
