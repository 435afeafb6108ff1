#include "regimetest/likelihood.hpp"

#include <Eigen/Cholesky>

#include <cmath>

namespace regimetest {

namespace {

constexpr double kLog2Pi = 1.8378770664093454836;

// Per-regime Gaussian density evaluator with cached Cholesky factors.
struct GaussianSet {
  std::vector<Eigen::LLT<Mat>> llt;
  std::vector<double> log_det;  // log |Sigma_r|
  int q = 0;

  GaussianSet(const std::vector<Mat>& sigma, int q_) : q(q_) {
    llt.reserve(sigma.size());
    log_det.reserve(sigma.size());
    for (const Mat& s : sigma) {
      Eigen::LLT<Mat> f(s);
      if (f.info() != Eigen::Success)
        throw std::domain_error("likelihood: covariance matrix is not positive definite");
      double ld = 0.0;
      for (int i = 0; i < q; ++i) ld += 2.0 * std::log(f.matrixL()(i, i));
      llt.push_back(std::move(f));
      log_det.push_back(ld);
    }
  }

  double log_density(int regime, const Vec& resid) const {
    const Vec z = llt[regime].matrixL().solve(resid);
    return -0.5 * (q * kLog2Pi + log_det[regime] + z.squaredNorm());
  }
};

}  // namespace

int CompositeStateSpace::digit(int c, int j) const {
  for (int i = 0; i < j; ++i) c /= m;
  return c % m;
}

int CompositeStateSpace::index(const std::vector<int>& digits) const {
  int idx = 0;
  for (int j = p; j >= 0; --j) idx = idx * m + digits[j];
  return idx;
}

Vec CompositeStateSpace::stationary(const TransitionMatrix& base) const {
  Vec pi_base;
  try {
    pi_base = ergodic_distribution(base);
  } catch (const estimation_error&) {
    // boundary transition matrices show up during optimization; fall back
    // to a uniform prior over composite states
    return Vec::Constant(size, 1.0 / size);
  }
  Vec pi(size);
  for (int c = 0; c < size; ++c) {
    double pr = pi_base[digit(c, p)];
    for (int j = p; j >= 1; --j) pr *= base.p_mat(digit(c, j - 1), digit(c, j));
    pi[c] = pr;
  }
  return pi;
}

CompositeStateSpace build_composite(const TransitionMatrix& P, int p) {
  if (p < 0) throw validation_error("build_composite: p must be >= 0");
  P.validate();
  CompositeStateSpace sp;
  sp.m = P.m;
  sp.p = p;
  sp.size = 1;
  for (int i = 0; i <= p; ++i) sp.size *= P.m;

  sp.big_p = Mat::Zero(sp.size, sp.size);
  // transition c -> c' is admissible when the lag digits of c' are the
  // leading digits of c; its probability is p(s_{t+1} | s_t)
  for (int c = 0; c < sp.size; ++c) {
    const int shifted = (c % (sp.size / P.m)) * P.m;  // drop oldest digit, shift
    const int s_now = sp.digit(c, 0);
    for (int s_next = 0; s_next < P.m; ++s_next) {
      sp.big_p(shifted + s_next, c) = P.p_mat(s_next, s_now);
    }
  }
  return sp;
}

// Conditional mean of y_t for composite state c:
//   mu_{s_t} + sum_k Phi_k (y_{t-k} - mu_{s_{t-k}}) + beta' z_t
Vec composite_conditional_mean(const Params& par, const Mat& y, const ModelSpec& spec,
                               const CompositeStateSpace& sp, int t, int c) {
  Vec mean = par.mu.row(sp.digit(c, 0)).transpose();
  for (int k = 1; k <= spec.p; ++k) {
    const Vec lag_dev =
        y.row(t - k).transpose() - par.mu.row(sp.digit(c, k)).transpose();
    mean += par.phi[k - 1] * lag_dev;
  }
  if (spec.qz() > 0) mean += par.beta.transpose() * spec.exog->row(t).transpose();
  return mean;
}

FilterOutput hamilton_filter(const Vec& theta, const Mat& y, const ModelSpec& spec) {
  spec.validate();
  const int t_total = static_cast<int>(y.rows());
  if (y.cols() != spec.q) throw validation_error("hamilton_filter: y has wrong width");
  if (t_total <= spec.p) throw validation_error("hamilton_filter: need T > p");
  if (spec.exog && spec.exog->rows() != t_total)
    throw validation_error("hamilton_filter: exog rows must match y");

  const Params par = unpack_theta(spec, theta);
  for (const Mat& s : par.sigma)
    if (s(0, 0) <= 0.0) throw std::domain_error("hamilton_filter: variance must be > 0");

  TransitionMatrix base = spec.switching()
                              ? par.trans
                              : TransitionMatrix(1, Mat::Ones(1, 1));
  CompositeStateSpace sp = build_composite(base, spec.p);
  const GaussianSet dens(par.sigma, spec.q);

  const int t_eff = t_total - spec.p;
  FilterOutput out;
  out.space = sp;
  out.xi_filtered.resize(t_eff, sp.size);
  out.xi_predicted.resize(t_eff, sp.size);
  out.cond_loglik.resize(t_eff);

  Vec pred = sp.stationary(base);
  Vec log_joint(sp.size);
  for (int r = 0; r < t_eff; ++r) {
    const int t = spec.p + r;
    out.xi_predicted.row(r) = pred.transpose();
    for (int c = 0; c < sp.size; ++c) {
      const Vec mean = composite_conditional_mean(par, y, spec, sp, t, c);
      const double ld = dens.log_density(sp.digit(c, 0), y.row(t).transpose() - mean);
      log_joint[c] = (pred[c] > 0.0 ? std::log(pred[c]) + ld
                                    : -std::numeric_limits<double>::infinity());
    }
    const double ll_t = log_sum_exp(log_joint);
    out.cond_loglik[r] = ll_t;
    if (std::isfinite(ll_t)) {
      for (int c = 0; c < sp.size; ++c)
        out.xi_filtered(r, c) = std::exp(log_joint[c] - ll_t);
    } else {
      out.xi_filtered.row(r).setConstant(1.0 / sp.size);
    }
    pred = sp.big_p * out.xi_filtered.row(r).transpose();
  }
  out.loglik = out.cond_loglik.sum();
  return out;
}

SmootherOutput kim_smoother(const FilterOutput& filter) {
  const CompositeStateSpace& sp = filter.space;
  const int t_eff = static_cast<int>(filter.xi_filtered.rows());

  SmootherOutput out;
  out.xi_smoothed_full.resize(t_eff, sp.size);
  out.xi_smoothed_full.row(t_eff - 1) = filter.xi_filtered.row(t_eff - 1);

  for (int r = t_eff - 2; r >= 0; --r) {
    // ratio_c' = xi_{t+1|T}(c') / xi_{t+1|t}(c'), zero where the predicted
    // mass is zero (that state is unreachable, so it carries no weight)
    Vec ratio(sp.size);
    for (int c = 0; c < sp.size; ++c) {
      const double denom = filter.xi_predicted(r + 1, c);
      ratio[c] = denom > 0.0 ? out.xi_smoothed_full(r + 1, c) / denom : 0.0;
    }
    const Vec back = sp.big_p.transpose() * ratio;
    Vec row = filter.xi_filtered.row(r).transpose().cwiseProduct(back);
    const double s = row.sum();
    if (s > 0.0) row /= s;
    out.xi_smoothed_full.row(r) = row.transpose();
  }

  out.xi_smoothed = Mat::Zero(t_eff, sp.m);
  for (int r = 0; r < t_eff; ++r)
    for (int c = 0; c < sp.size; ++c)
      out.xi_smoothed(r, sp.digit(c, 0)) += out.xi_smoothed_full(r, c);
  return out;
}

Vec linear_loglik_terms(const Vec& theta, const Mat& y, const ModelSpec& spec) {
  spec.validate();
  if (spec.k != 1) throw validation_error("linear_loglik: requires a one-regime family");
  const int t_total = static_cast<int>(y.rows());
  if (t_total <= spec.p) throw validation_error("linear_loglik: need T > p");

  const Params par = unpack_theta(spec, theta);
  if (par.sigma[0](0, 0) <= 0.0)
    throw std::domain_error("linear_loglik: variance must be > 0");
  const GaussianSet dens(par.sigma, spec.q);

  CompositeStateSpace sp;
  sp.m = 1;
  sp.p = spec.p;
  sp.size = 1;

  const int t_eff = t_total - spec.p;
  Vec terms(t_eff);
  for (int r = 0; r < t_eff; ++r) {
    const int t = spec.p + r;
    const Vec mean = composite_conditional_mean(par, y, spec, sp, t, 0);
    terms[r] = dens.log_density(0, y.row(t).transpose() - mean);
  }
  return terms;
}

double linear_loglik(const Vec& theta, const Mat& y, const ModelSpec& spec) {
  return linear_loglik_terms(theta, y, spec).sum();
}

}  // namespace regimetest
