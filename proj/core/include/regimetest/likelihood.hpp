#pragma once

#include <vector>

#include "regimetest/model.hpp"

namespace regimetest {

/*
 * Composite state space for AR models with switching means: because lagged
 * means enter the recursion, the filter state is the tuple
 * (s_t, s_{t-1}, ..., s_{t-p}) with M^(p+1) values. Tuples are encoded with
 * s_t as the fastest-varying digit:
 *   index = (s_t - 1) + M*(s_{t-1} - 1) + M^2*(s_{t-2} - 1) + ...
 */
struct CompositeStateSpace {
  int m = 0;     // base regimes
  int p = 0;     // lags
  int size = 0;  // M^(p+1)
  Mat big_p;     // composite transition matrix, column-stochastic

  // digit j of composite index c, i.e. 0-based regime s_{t-j}
  int digit(int c, int j) const;
  // composite index from 0-based digits (s_t, ..., s_{t-p})
  int index(const std::vector<int>& digits) const;
  // stationary distribution of the composite chain (joint law of p+1
  // consecutive states under the base chain's ergodic distribution)
  Vec stationary(const TransitionMatrix& base) const;
};

CompositeStateSpace build_composite(const TransitionMatrix& P, int p);

struct FilterOutput {
  Mat xi_filtered;           // T_eff x M^(p+1), rows sum to 1
  Mat xi_predicted;          // T_eff x M^(p+1), rows sum to 1
  Vec cond_loglik;           // per-observation log f(y_t | Y_{t-1})
  double loglik = 0.0;       // sum of cond_loglik
  CompositeStateSpace space;
};

struct SmootherOutput {
  Mat xi_smoothed;       // T_eff x M, composite states marginalized to regimes
  Mat xi_smoothed_full;  // T_eff x M^(p+1)
};

/*
 * Exact log-likelihood of y under theta via the Hamilton filter over the
 * composite state space. Conditions on the first p observations, so all
 * output rows index t = p+1..T. The t = p+1 predicted distribution is the
 * stationary law of the composite chain (uniform fallback when the chain
 * is not ergodic, e.g. at transition-probability boundaries).
 */
FilterOutput hamilton_filter(const Vec& theta, const Mat& y, const ModelSpec& spec);

SmootherOutput kim_smoother(const FilterOutput& filter);

// M = 1 closed form; equals hamilton_filter's loglik for one regime.
double linear_loglik(const Vec& theta, const Mat& y, const ModelSpec& spec);

// Per-observation log-likelihood contributions of the M = 1 model
// (t = p+1..T), used by test procedures that need the observation split.
Vec linear_loglik_terms(const Vec& theta, const Mat& y, const ModelSpec& spec);

// Conditional mean of y_t (0-based row) for composite state c; shared by
// the filter and the EM weighted regressions.
Vec composite_conditional_mean(const Params& par, const Mat& y, const ModelSpec& spec,
                               const CompositeStateSpace& sp, int t, int c);

}  // namespace regimetest
