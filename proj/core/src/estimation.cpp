#include "regimetest/estimation.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numeric>
#include <thread>

#include "regimetest/optim.hpp"
#include "regimetest/rng.hpp"

namespace regimetest {

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double total_loglik(const Vec& theta, const Mat& y, const ModelSpec& spec) {
  if (spec.k == 1) return linear_loglik(theta, y, spec);
  return hamilton_filter(theta, y, spec).loglik;
}

void finalize_information_criteria(FittedModel& fm) {
  const int k_params = static_cast<int>(fm.theta.size());
  fm.aic = 2.0 * k_params - 2.0 * fm.loglik;
  fm.bic = k_params * std::log(static_cast<double>(fm.t_effective)) - 2.0 * fm.loglik;
}

// smoothed-probability weighted residuals for switching fits
Mat expected_residuals(const Vec& theta, const Mat& y, const ModelSpec& spec,
                       const Mat& xi_full, const CompositeStateSpace& sp) {
  const Params par = unpack_theta(spec, theta);
  const int t_eff = static_cast<int>(xi_full.rows());
  Mat res = Mat::Zero(t_eff, spec.q);
  for (int r = 0; r < t_eff; ++r) {
    const int t = spec.p + r;
    Vec acc = Vec::Zero(spec.q);
    for (int c = 0; c < sp.size; ++c) {
      const double w = xi_full(r, c);
      if (w <= 0.0) continue;
      acc += w * (y.row(t).transpose() -
                  composite_conditional_mean(par, y, spec, sp, t, c));
    }
    res.row(r) = acc.transpose();
  }
  return res;
}

}  // namespace

void EstimOptions::validate() const {
  if (use_diff_init < 1) throw validation_error("EstimOptions: use_diff_init must be >= 1");
  if (tol <= 0.0) throw validation_error("EstimOptions: tol must be > 0");
  if (maxit < 1) throw validation_error("EstimOptions: maxit must be >= 1");
  if (mle_theta_low.has_value() != mle_theta_upp.has_value())
    throw validation_error("EstimOptions: provide both MLE bounds or neither");
  if (mle_theta_low) {
    if (mle_theta_low->size() != mle_theta_upp->size())
      throw validation_error("EstimOptions: MLE bound vectors differ in length");
    for (Eigen::Index i = 0; i < mle_theta_low->size(); ++i)
      if ((*mle_theta_low)[i] > (*mle_theta_upp)[i])
        throw validation_error("EstimOptions: MLE bounds need low <= upp");
  }
}

FittedModel fit_linear(const Mat& y, const ModelSpec& spec, bool get_se) {
  spec.validate();
  if (spec.k != 1) throw validation_error("fit_linear: spec must have one regime");
  const int t_total = static_cast<int>(y.rows());
  const int q = spec.q, p = spec.p, qz = spec.qz();
  const int n_reg = 1 + p * q + qz;
  const int t_eff = t_total - p;
  if (t_eff <= n_reg)
    throw validation_error("fit_linear: need T > p + number of regressors");
  if (spec.exog && spec.exog->rows() != t_total)
    throw validation_error("fit_linear: exog rows must match y");

  Mat x(t_eff, n_reg);
  Mat yy(t_eff, q);
  for (int r = 0; r < t_eff; ++r) {
    const int t = p + r;
    x(r, 0) = 1.0;
    for (int l = 1; l <= p; ++l) x.block(r, 1 + (l - 1) * q, 1, q) = y.row(t - l);
    if (qz > 0) x.block(r, 1 + p * q, 1, qz) = spec.exog->row(t);
    yy.row(r) = y.row(t);
  }

  Eigen::ColPivHouseholderQR<Mat> qr(x);
  if (qr.rank() < n_reg)
    throw estimation_error("fit_linear: regressor matrix is rank deficient");
  const Mat coef = qr.solve(yy);  // n_reg x q
  const Mat resid = yy - x * coef;
  Mat sigma_hat = resid.transpose() * resid / static_cast<double>(t_eff);

  FittedModel fm;
  fm.spec = spec;
  fm.t_effective = t_eff;
  fm.residuals = resid;

  Params par;
  par.mu.resize(1, q);
  par.phi.resize(p);
  const Vec intercept = coef.row(0).transpose();
  Mat phi_sum = Mat::Zero(q, q);
  for (int l = 0; l < p; ++l) {
    par.phi[l] = coef.block(1 + l * q, 0, q, q).transpose();
    phi_sum += par.phi[l];
  }
  const Mat eye_minus = Mat::Identity(q, q) - phi_sum;
  Vec mu;
  const double denom_scale = eye_minus.cwiseAbs().maxCoeff();
  Eigen::FullPivLU<Mat> lu(eye_minus);
  if (lu.isInvertible() && denom_scale > 1e-10) {
    mu = lu.solve(intercept);
  } else {
    mu = yy.colwise().mean().transpose();
    fm.warnings.push_back("unit-root lag polynomial; mean set to sample mean");
  }
  if (!mu.allFinite()) {
    mu = yy.colwise().mean().transpose();
    fm.warnings.push_back("mean solve failed; using sample mean");
  }
  par.mu.row(0) = mu.transpose();
  par.beta.resize(qz, q);
  if (qz > 0) par.beta = coef.block(1 + p * q, 0, qz, q);
  par.sigma.assign(1, sigma_hat);

  fm.theta = pack_theta(spec, par);
  fm.names = theta_names(spec);

  const bool degenerate = sigma_hat.diagonal().minCoeff() <= 0.0 ||
                          Eigen::LLT<Mat>(sigma_hat).info() != Eigen::Success;
  if (degenerate) {
    fm.warnings.push_back("degenerate residual variance");
    fm.loglik = kNaN;
    fm.converged = true;
    return fm;
  }

  fm.loglik = linear_loglik(fm.theta, y, spec);
  finalize_information_criteria(fm);
  fm.converged = true;
  fm.trace.push_back({fm.theta, fm.loglik, true});

  if (get_se) {
    if (q == 1) {
      // closed-form OLS covariance mapped through mu = c / (1 - sum phi)
      const double s2 = sigma_hat(0, 0);
      const Mat xtx_inv = (x.transpose() * x).inverse();
      const Mat cov = s2 * xtx_inv;
      Vec se = Vec::Constant(fm.theta.size(), kNaN);
      const double one_minus = 1.0 - phi_sum(0, 0);
      Vec g = Vec::Zero(n_reg);
      if (std::abs(one_minus) > 1e-10) {
        g[0] = 1.0 / one_minus;
        for (int l = 0; l < p; ++l) g[1 + l] = mu[0] / one_minus;
      }
      se[0] = std::sqrt(std::max(0.0, (g.transpose() * cov * g)(0, 0)));
      for (int l = 0; l < p; ++l) se[1 + l] = std::sqrt(cov(1 + l, 1 + l));
      for (int z = 0; z < qz; ++z) se[1 + p + z] = std::sqrt(cov(1 + p + z, 1 + p + z));
      se[1 + p + qz] = s2 * std::sqrt(2.0 / t_eff);  // variance parameter
      fm.se = se;
    } else {
      standard_errors(y, fm);
    }
  }
  return fm;
}

Vec initial_values(const Mat& y, const ModelSpec& spec, std::uint64_t seed) {
  spec.validate();
  Rng rng(seed);

  // anchor on the linear fit; fall back to sample moments if OLS fails
  Params lin;
  ModelSpec lspec = spec;
  lspec.k = 1;
  lspec.family = spec.q > 1 ? (spec.qz() > 0 ? ModelFamily::VARX : ModelFamily::VAR)
                            : (spec.qz() > 0 ? ModelFamily::ARX : ModelFamily::AR);
  if (spec.p == 0)
    lspec.family = ModelFamily::Normal;
  try {
    lin = unpack_theta(lspec, fit_linear(y, lspec, false).theta);
  } catch (const std::exception&) {
    lin.mu = y.colwise().mean();
    lin.phi.assign(spec.p, Mat::Zero(spec.q, spec.q));
    lin.beta = Mat::Zero(spec.qz(), spec.q);
    Mat centered = y.rowwise() - y.colwise().mean();
    lin.sigma.assign(1, centered.transpose() * centered / double(y.rows()));
  }

  Params par;
  par.mu.resize(spec.k, spec.q);
  Vec sd(spec.q);
  for (int i = 0; i < spec.q; ++i) sd[i] = std::sqrt(lin.sigma[0](i, i));
  for (int r = 0; r < spec.k; ++r) {
    const double sign = (r % 2 == 0) ? 1.0 : -1.0;
    for (int i = 0; i < spec.q; ++i) {
      const double u = rng.uniform(0.5, 2.0);
      par.mu(r, i) = lin.mu(0, i) + (spec.msmu ? sign * u * sd[i] : 0.0);
    }
  }
  if (!spec.msmu)
    for (int r = 0; r < spec.k; ++r) par.mu.row(r) = lin.mu.row(0);

  par.phi = lin.phi;
  par.beta = lin.beta;

  par.sigma.resize(spec.k);
  for (int r = 0; r < spec.k; ++r) {
    const double scale = spec.msvar ? rng.uniform(0.5, 2.0) : 1.0;
    par.sigma[r] = scale * lin.sigma[0];
  }

  if (spec.switching()) {
    Mat pm(spec.k, spec.k);
    for (int i = 0; i < spec.k; ++i) {
      const double diag = rng.uniform(0.7, 0.99);
      for (int j = 0; j < spec.k; ++j)
        pm(j, i) = (i == j) ? diag : (1.0 - diag) / (spec.k - 1);
    }
    par.trans = TransitionMatrix(spec.k, pm);
  }
  return pack_theta(spec, par);
}

Vec canonicalize_regimes(const ModelSpec& spec, const Vec& theta) {
  if (!spec.switching()) return theta;
  Params par = unpack_theta(spec, theta);
  std::vector<int> ord(spec.k);
  std::iota(ord.begin(), ord.end(), 0);
  std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) {
    if (par.mu(a, 0) != par.mu(b, 0)) return par.mu(a, 0) < par.mu(b, 0);
    return par.sigma[a](0, 0) < par.sigma[b](0, 0);
  });

  Params out = par;
  for (int r = 0; r < spec.k; ++r) {
    out.mu.row(r) = par.mu.row(ord[r]);
    out.sigma[r] = par.sigma[ord[r]];
  }
  Mat pm(spec.k, spec.k);
  for (int i = 0; i < spec.k; ++i)
    for (int j = 0; j < spec.k; ++j) pm(j, i) = par.trans.p_mat(ord[j], ord[i]);
  out.trans = TransitionMatrix(spec.k, pm);
  return pack_theta(spec, out);
}

namespace {

struct EmRun {
  Vec theta;
  double loglik = kNegInf;
  bool converged = false;
  bool degenerate = false;
  std::vector<double> loglik_path;
};

// One EM pass from a given start. The M-step is coordinate ascent on the
// expected complete-data log-likelihood: phi, mu, beta each solve an exact
// weighted least-squares problem given the others, then sigma and P close
// the iteration, so the observed log-likelihood never decreases.
EmRun run_em(const Mat& y, const ModelSpec& spec, const Vec& theta0,
             const EstimOptions& opt) {
  EmRun run;
  run.theta = theta0;
  const int q = spec.q, p = spec.p, k = spec.k, qz = spec.qz();
  const int t_total = static_cast<int>(y.rows());
  const int t_eff = t_total - p;

  double prev_ll = kNegInf;
  for (int it = 0; it < opt.maxit; ++it) {
    FilterOutput filt;
    try {
      filt = hamilton_filter(run.theta, y, spec);
    } catch (const std::exception&) {
      run.degenerate = true;
      return run;
    }
    if (!std::isfinite(filt.loglik)) {
      run.degenerate = true;
      return run;
    }
    const SmootherOutput smooth = kim_smoother(filt);
    const CompositeStateSpace& sp = filt.space;

    // regime starvation check
    for (int j = 0; j < k; ++j) {
      if (smooth.xi_smoothed.col(j).sum() < 1e-8) {
        run.degenerate = true;
        return run;
      }
    }

    run.loglik_path.push_back(filt.loglik);
    run.loglik = filt.loglik;
    if (it > 0 && std::abs(filt.loglik - prev_ll) < opt.tol) {
      run.converged = true;
      return run;
    }
    prev_ll = filt.loglik;

    Params par = unpack_theta(spec, run.theta);
    const Mat& w = smooth.xi_smoothed_full;  // t_eff x size

    std::vector<Mat> sigma_inv(k);
    for (int j = 0; j < k; ++j) {
      Eigen::LLT<Mat> llt(par.sigma[j]);
      sigma_inv[j] = llt.solve(Mat::Identity(q, q));
    }

    // --- phi update (skipped when p = 0) ---
    if (p > 0) {
      const int dphi = p * q * q;
      Mat a = Mat::Zero(dphi, dphi);
      Vec b = Vec::Zero(dphi);
      for (int r = 0; r < t_eff; ++r) {
        const int t = p + r;
        for (int c = 0; c < sp.size; ++c) {
          const double wt = w(r, c);
          if (wt <= 0.0) continue;
          const int s_now = sp.digit(c, 0);
          Vec u(p * q);
          for (int l = 1; l <= p; ++l)
            u.segment((l - 1) * q, q) =
                y.row(t - l).transpose() - par.mu.row(sp.digit(c, l)).transpose();
          Vec target = y.row(t).transpose() - par.mu.row(s_now).transpose();
          if (qz > 0) target -= par.beta.transpose() * spec.exog->row(t).transpose();
          // A += w (u u') kron sigma_inv ; b += w vec(sigma_inv target u')
          for (int li = 0; li < p * q; ++li)
            for (int lj = 0; lj < p * q; ++lj) {
              const double uu = wt * u[li] * u[lj];
              if (uu == 0.0) continue;
              a.block(li * q, lj * q, q, q) += uu * sigma_inv[s_now];
            }
          const Vec si_t = sigma_inv[s_now] * target;
          for (int lj = 0; lj < p * q; ++lj) b.segment(lj * q, q) += wt * u[lj] * si_t;
        }
      }
      const Vec vec_phi = a.ldlt().solve(b);
      for (int l = 0; l < p; ++l)
        for (int col = 0; col < q; ++col)
          par.phi[l].col(col) = vec_phi.segment((l * q + col) * q, q);
    }

    // --- mu update ---
    {
      const int m_mu = spec.msmu ? k : 1;
      Mat a = Mat::Zero(m_mu * q, m_mu * q);
      Vec b = Vec::Zero(m_mu * q);
      for (int r = 0; r < t_eff; ++r) {
        const int t = p + r;
        for (int c = 0; c < sp.size; ++c) {
          const double wt = w(r, c);
          if (wt <= 0.0) continue;
          const int s_now = sp.digit(c, 0);
          // coefficient of mu_j in the residual
          std::vector<Mat> cj(m_mu, Mat::Zero(q, q));
          cj[spec.msmu ? s_now : 0] += Mat::Identity(q, q);
          Vec target = y.row(t).transpose();
          for (int l = 1; l <= p; ++l) {
            const int s_lag = spec.msmu ? sp.digit(c, l) : 0;
            cj[s_lag] -= par.phi[l - 1];
            target -= par.phi[l - 1] * y.row(t - l).transpose();
          }
          if (qz > 0) target -= par.beta.transpose() * spec.exog->row(t).transpose();
          for (int ji = 0; ji < m_mu; ++ji) {
            b.segment(ji * q, q) += wt * (cj[ji].transpose() * (sigma_inv[s_now] * target));
            for (int jj = 0; jj < m_mu; ++jj)
              a.block(ji * q, jj * q, q, q) +=
                  wt * (cj[ji].transpose() * sigma_inv[s_now] * cj[jj]);
          }
        }
      }
      const Vec mu_vec = a.ldlt().solve(b);
      for (int r = 0; r < k; ++r) {
        const int src = spec.msmu ? r : 0;
        par.mu.row(r) = mu_vec.segment(src * q, q).transpose();
      }
    }

    // --- beta update ---
    if (qz > 0) {
      Mat a = Mat::Zero(qz * q, qz * q);
      Vec b = Vec::Zero(qz * q);
      for (int r = 0; r < t_eff; ++r) {
        const int t = p + r;
        const Vec z = spec.exog->row(t).transpose();
        for (int c = 0; c < sp.size; ++c) {
          const double wt = w(r, c);
          if (wt <= 0.0) continue;
          const int s_now = sp.digit(c, 0);
          Vec target = y.row(t).transpose() - par.mu.row(s_now).transpose();
          for (int l = 1; l <= p; ++l)
            target -= par.phi[l - 1] * (y.row(t - l).transpose() -
                                        par.mu.row(sp.digit(c, l)).transpose());
          const Vec si_t = sigma_inv[s_now] * target;
          for (int zi = 0; zi < qz; ++zi) {
            b.segment(zi * q, q) += wt * z[zi] * si_t;
            for (int zj = 0; zj < qz; ++zj)
              a.block(zi * q, zj * q, q, q) += wt * z[zi] * z[zj] * sigma_inv[s_now];
          }
        }
      }
      const Vec vb = a.ldlt().solve(b);
      for (int zi = 0; zi < qz; ++zi) par.beta.row(zi) = vb.segment(zi * q, q).transpose();
    }

    // --- sigma update ---
    {
      const int m_sig = spec.msvar ? k : 1;
      std::vector<Mat> acc(m_sig, Mat::Zero(q, q));
      std::vector<double> wsum(m_sig, 0.0);
      for (int r = 0; r < t_eff; ++r) {
        const int t = p + r;
        for (int c = 0; c < sp.size; ++c) {
          const double wt = w(r, c);
          if (wt <= 0.0) continue;
          const Vec resid = y.row(t).transpose() -
                            composite_conditional_mean(par, y, spec, sp, t, c);
          const int j = spec.msvar ? sp.digit(c, 0) : 0;
          acc[j] += wt * (resid * resid.transpose());
          wsum[j] += wt;
        }
      }
      for (int j = 0; j < k; ++j) {
        const int src = spec.msvar ? j : 0;
        Mat s = acc[src] / std::max(wsum[src], 1e-300);
        Eigen::LLT<Mat> llt(s);
        if (llt.info() != Eigen::Success || s.diagonal().minCoeff() <= 1e-12) {
          // ridge repair keeps the iteration alive on collapsing regimes
          Eigen::SelfAdjointEigenSolver<Mat> es(s);
          const double lift = std::max(1e-8, 1e-8 - es.eigenvalues().minCoeff());
          s += lift * Mat::Identity(q, q);
          run.degenerate = true;
        }
        par.sigma[j] = s;
      }
    }

    // --- transition matrix update from expected regime-pair counts ---
    {
      Mat counts = Mat::Zero(k, k);  // (to, from)
      for (int r = 0; r + 1 < t_eff; ++r) {
        for (int c2 = 0; c2 < sp.size; ++c2) {
          const double denom = filt.xi_predicted(r + 1, c2);
          if (denom <= 0.0) continue;
          const double sm = smooth.xi_smoothed_full(r + 1, c2);
          if (sm <= 0.0) continue;
          const int to = sp.digit(c2, 0);
          for (int c1 = 0; c1 < sp.size; ++c1) {
            const double tp = sp.big_p(c2, c1);
            if (tp <= 0.0) continue;
            const double joint = sm * tp * filt.xi_filtered(r, c1) / denom;
            counts(to, sp.digit(c1, 0)) += joint;
          }
        }
      }
      Mat pm(k, k);
      for (int i = 0; i < k; ++i) {
        const double colsum = counts.col(i).sum();
        if (colsum <= 1e-300) {
          pm.col(i) = par.trans.p_mat.col(i);
        } else {
          pm.col(i) = counts.col(i) / colsum;
        }
      }
      par.trans.p_mat = pm;
    }

    if (run.degenerate) return run;
    run.theta = pack_theta(spec, par);
  }
  return run;  // maxit reached without meeting tol
}

}  // namespace

FittedModel fit_switching_em(const Mat& y, const ModelSpec& spec,
                             const EstimOptions& options) {
  spec.validate();
  options.validate();
  if (spec.k < 2) throw validation_error("fit_switching_em: requires k >= 2");

  ModelSpec espec = spec;
  espec.msmu = options.msmu;
  espec.msvar = options.msvar;

  const int n_starts = options.use_diff_init;
  std::vector<EmRun> runs(n_starts);
  std::vector<Vec> inits(n_starts);

  auto run_one = [&](int s) {
    Vec theta0;
    if (s == 0 && options.init_theta) {
      theta0 = *options.init_theta;
    } else {
      theta0 = initial_values(y, espec, derive_stream(options.seed, s));
    }
    inits[s] = theta0;
    EmRun run = run_em(y, espec, theta0, options);
    // degenerate runs restart with fresh draws, capped
    int tries = 0;
    while (run.degenerate && tries < 10) {
      ++tries;
      theta0 = initial_values(
          y, espec, derive_stream(options.seed, 1000 + 100 * s + tries));
      inits[s] = theta0;
      run = run_em(y, espec, theta0, options);
    }
    runs[s] = std::move(run);
  };

  const int workers = std::max(1, std::min(options.workers, n_starts));
  if (workers == 1) {
    for (int s = 0; s < n_starts; ++s) run_one(s);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int wkr = 0; wkr < workers; ++wkr)
      pool.emplace_back([&] {
        for (int s = next.fetch_add(1); s < n_starts; s = next.fetch_add(1)) run_one(s);
      });
    for (auto& th : pool) th.join();
  }

  int best = -1;
  for (int s = 0; s < n_starts; ++s) {
    if (best < 0 || runs[s].loglik > runs[best].loglik) best = s;
  }
  if (best < 0 || !std::isfinite(runs[best].loglik))
    throw estimation_error("fit_switching_em: all starts failed");

  FittedModel fm;
  fm.spec = espec;
  fm.t_effective = static_cast<int>(y.rows()) - espec.p;
  for (int s = 0; s < n_starts; ++s)
    fm.trace.push_back({inits[s], runs[s].loglik, runs[s].converged});
  fm.em_loglik_path = runs[best].loglik_path;
  fm.converged = runs[best].converged;
  if (runs[best].degenerate) fm.warnings.push_back("degenerate regime during EM");

  fm.theta = canonicalize_regimes(espec, runs[best].theta);
  fm.names = theta_names(espec);

  const FilterOutput filt = hamilton_filter(fm.theta, y, espec);
  fm.smoothed = kim_smoother(filt);
  fm.loglik = filt.loglik;
  fm.residuals = expected_residuals(fm.theta, y, espec, fm.smoothed.xi_smoothed_full,
                                    filt.space);
  finalize_information_criteria(fm);
  return fm;
}

namespace {

/*
 * Bijective map between theta and an unconstrained optimization vector:
 * variances go through log (Cholesky log-diagonal for q > 1), transition
 * columns through softmax logits with the last regime as reference, and
 * box-bounded coordinates through a scaled logistic. Coordinates pinned by
 * equal bounds are excluded from the search.
 */
class ThetaTransform {
 public:
  ThetaTransform(const ModelSpec& spec, const std::optional<Vec>& low,
                 const std::optional<Vec>& upp)
      : spec_(spec) {
    const int d = spec.n_theta();
    low_ = low ? *low : Vec::Constant(d, kNegInf);
    upp_ = upp ? *upp : Vec::Constant(d, std::numeric_limits<double>::infinity());
    if (low_.size() != d)
      throw validation_error("MLE bounds must match the theta layout length");
  }

  int free_dim(const Vec& theta_ref) const { return static_cast<int>(to_x(theta_ref).size()); }

  Vec to_x(const Vec& theta) const {
    const int d = spec_.n_theta();
    std::vector<double> x;
    x.reserve(d);
    const int sig_off = spec_.n_mu() + spec_.n_phi() + spec_.n_beta();
    const int trans_off = sig_off + spec_.n_sigma();

    for (int i = 0; i < sig_off; ++i) {
      if (pinned(i)) continue;
      x.push_back(box_to_x(theta[i], low_[i], upp_[i]));
    }
    // sigma blocks: log of diagonal vech entries, raw off-diagonals
    const int m_sig = (spec_.switching() && spec_.msvar) ? spec_.k : 1;
    int idx = sig_off;
    for (int r = 0; r < m_sig; ++r) {
      for (int i = 0; i < spec_.q; ++i)
        for (int j = i; j < spec_.q; ++j) {
          if (!pinned(idx)) {
            const double lb = std::isfinite(low_[idx]) && i == j ? std::max(0.0, low_[idx]) : (i == j ? 0.0 : kNegInf);
            if (i == j)
              x.push_back(std::log(std::max(theta[idx] - lb, 1e-12)));
            else
              x.push_back(theta[idx]);
          }
          ++idx;
        }
    }
    // transition block: per-column logits relative to the last regime
    if (spec_.switching()) {
      for (int col = 0; col < spec_.k; ++col) {
        const double ref =
            std::max(theta[trans_off + col * spec_.k + (spec_.k - 1)], 1e-12);
        for (int row = 0; row < spec_.k - 1; ++row)
          x.push_back(std::log(std::max(theta[trans_off + col * spec_.k + row], 1e-12) / ref));
      }
    }
    return Eigen::Map<Vec>(x.data(), static_cast<Eigen::Index>(x.size()));
  }

  Vec to_theta(const Vec& x, const Vec& theta_ref) const {
    Vec theta = theta_ref;
    const int sig_off = spec_.n_mu() + spec_.n_phi() + spec_.n_beta();
    const int trans_off = sig_off + spec_.n_sigma();
    int xi = 0;

    for (int i = 0; i < sig_off; ++i) {
      if (pinned(i)) {
        theta[i] = low_[i];
        continue;
      }
      theta[i] = x_to_box(x[xi++], low_[i], upp_[i]);
    }
    const int m_sig = (spec_.switching() && spec_.msvar) ? spec_.k : 1;
    int idx = sig_off;
    for (int r = 0; r < m_sig; ++r) {
      for (int i = 0; i < spec_.q; ++i)
        for (int j = i; j < spec_.q; ++j) {
          if (pinned(idx)) {
            theta[idx] = low_[idx];
          } else if (i == j) {
            const double lb = std::isfinite(low_[idx]) ? std::max(0.0, low_[idx]) : 0.0;
            double v = lb + std::exp(x[xi++]);
            if (std::isfinite(upp_[idx])) v = std::min(v, upp_[idx]);
            theta[idx] = v;
          } else {
            theta[idx] = x[xi++];
          }
          ++idx;
        }
    }
    if (spec_.switching()) {
      for (int col = 0; col < spec_.k; ++col) {
        Vec logits = Vec::Zero(spec_.k);
        for (int row = 0; row < spec_.k - 1; ++row) logits[row] = x[xi++];
        const double mx = logits.maxCoeff();
        Vec probs = (logits.array() - mx).exp();
        probs /= probs.sum();
        // project onto any user box for the probabilities, then renormalize
        for (int pass = 0; pass < 3; ++pass) {
          bool clipped = false;
          for (int row = 0; row < spec_.k; ++row) {
            const int ti = trans_off + col * spec_.k + row;
            double v = probs[row];
            if (std::isfinite(low_[ti]) && v < low_[ti]) { v = low_[ti]; clipped = true; }
            if (std::isfinite(upp_[ti]) && v > upp_[ti]) { v = upp_[ti]; clipped = true; }
            probs[row] = v;
          }
          probs /= probs.sum();
          if (!clipped) break;
        }
        for (int row = 0; row < spec_.k; ++row)
          theta[trans_off + col * spec_.k + row] = probs[row];
      }
    }
    return theta;
  }

 private:
  bool pinned(int i) const {
    return std::isfinite(low_[i]) && low_[i] == upp_[i];
  }
  static double box_to_x(double v, double lo, double hi) {
    const bool bl = std::isfinite(lo), bh = std::isfinite(hi);
    if (bl && bh) {
      const double z = std::clamp((v - lo) / (hi - lo), 1e-12, 1.0 - 1e-12);
      return std::log(z / (1.0 - z));
    }
    if (bl) return std::log(std::max(v - lo, 1e-12));
    if (bh) return -std::log(std::max(hi - v, 1e-12));
    return v;
  }
  static double x_to_box(double x, double lo, double hi) {
    const bool bl = std::isfinite(lo), bh = std::isfinite(hi);
    if (bl && bh) return lo + (hi - lo) / (1.0 + std::exp(-x));
    if (bl) return lo + std::exp(x);
    if (bh) return hi - std::exp(-x);
    return x;
  }

  ModelSpec spec_;
  Vec low_, upp_;
};

}  // namespace

FittedModel fit_switching_mle(const Mat& y, const ModelSpec& spec,
                              const EstimOptions& options) {
  spec.validate();
  options.validate();
  ModelSpec espec = spec;
  espec.msmu = options.msmu;
  espec.msvar = options.msvar;

  const ThetaTransform tf(espec, options.mle_theta_low, options.mle_theta_upp);
  const int n_starts = options.use_diff_init;

  struct MleRun {
    Vec theta;
    double loglik = kNegInf;
    bool converged = false;
    Vec init;
  };
  std::vector<MleRun> runs(n_starts);

  auto run_one = [&](int s) {
    Vec theta0 = (s == 0 && options.init_theta)
                     ? *options.init_theta
                     : initial_values(y, espec, derive_stream(options.seed, s));
    runs[s].init = theta0;
    const Vec x0 = tf.to_x(theta0);
    auto neg_ll = [&](const Vec& x) {
      const Vec theta = tf.to_theta(x, theta0);
      return -total_loglik(theta, y, espec);
    };
    const int budget = options.mle_max_evals > 0
                           ? options.mle_max_evals
                           : 500 * std::max<int>(1, static_cast<int>(x0.size()));
    const LocalResult lr = nelder_mead_min(neg_ll, x0, 0.1, budget, 1e-10);
    runs[s].theta = tf.to_theta(lr.x, theta0);
    runs[s].loglik = -lr.fmin;
    runs[s].converged = lr.converged;
  };

  const int workers = std::max(1, std::min(options.workers, n_starts));
  if (workers == 1) {
    for (int s = 0; s < n_starts; ++s) run_one(s);
  } else {
    std::vector<std::thread> pool;
    std::atomic<int> next{0};
    for (int wkr = 0; wkr < workers; ++wkr)
      pool.emplace_back([&] {
        for (int s = next.fetch_add(1); s < n_starts; s = next.fetch_add(1)) run_one(s);
      });
    for (auto& th : pool) th.join();
  }

  int best = 0;
  for (int s = 1; s < n_starts; ++s)
    if (runs[s].loglik > runs[best].loglik) best = s;
  if (!std::isfinite(runs[best].loglik))
    throw estimation_error("fit_switching_mle: optimization failed from every start");

  FittedModel fm;
  fm.spec = espec;
  fm.t_effective = static_cast<int>(y.rows()) - espec.p;
  for (int s = 0; s < n_starts; ++s)
    fm.trace.push_back({runs[s].init, runs[s].loglik, runs[s].converged});
  fm.converged = runs[best].converged;

  fm.theta = canonicalize_regimes(espec, runs[best].theta);
  fm.names = theta_names(espec);
  if (espec.k >= 2) {
    const FilterOutput filt = hamilton_filter(fm.theta, y, espec);
    fm.smoothed = kim_smoother(filt);
    fm.loglik = filt.loglik;
    fm.residuals = expected_residuals(fm.theta, y, espec,
                                      fm.smoothed.xi_smoothed_full, filt.space);
  } else {
    fm.loglik = linear_loglik(fm.theta, y, espec);
  }
  finalize_information_criteria(fm);
  return fm;
}

FittedModel fit_switching(const Mat& y, const ModelSpec& spec,
                          const EstimOptions& options) {
  if (options.method == EstimOptions::Method::MLE)
    return fit_switching_mle(y, spec, options);
  FittedModel em = fit_switching_em(y, spec, options);
  if (options.mle_refine) {
    EstimOptions refine = options;
    refine.method = EstimOptions::Method::MLE;
    refine.use_diff_init = 1;
    refine.init_theta = em.theta;
    FittedModel ml = fit_switching_mle(y, spec, refine);
    if (ml.loglik >= em.loglik) {
      ml.trace = em.trace;
      ml.em_loglik_path = em.em_loglik_path;
      return ml;
    }
  }
  return em;
}

Vec standard_errors(const Mat& y, FittedModel& fitted) {
  const ModelSpec& spec = fitted.spec;
  const Vec theta = fitted.theta;
  const int d = static_cast<int>(theta.size());

  auto f = [&](const Vec& th) -> double {
    try {
      return total_loglik(th, y, spec);
    } catch (const std::exception&) {
      return kNaN;
    }
  };

  Vec h(d);
  for (int i = 0; i < d; ++i) h[i] = 1e-5 * std::max(std::abs(theta[i]), 1.0);

  Mat hess(d, d);
  const double f0 = f(theta);
  for (int i = 0; i < d; ++i) {
    for (int j = i; j < d; ++j) {
      double v;
      if (i == j) {
        Vec tp = theta, tm = theta;
        tp[i] += h[i];
        tm[i] -= h[i];
        v = (f(tp) - 2.0 * f0 + f(tm)) / (h[i] * h[i]);
      } else {
        Vec tpp = theta, tpm = theta, tmp = theta, tmm = theta;
        tpp[i] += h[i]; tpp[j] += h[j];
        tpm[i] += h[i]; tpm[j] -= h[j];
        tmp[i] -= h[i]; tmp[j] += h[j];
        tmm[i] -= h[i]; tmm[j] -= h[j];
        v = (f(tpp) - f(tpm) - f(tmp) + f(tmm)) / (4.0 * h[i] * h[j]);
      }
      hess(i, j) = v;
      hess(j, i) = v;
    }
  }

  Vec se = Vec::Constant(d, kNaN);
  if (!hess.allFinite()) {
    fitted.warnings.push_back("standard errors unavailable: Hessian not finite");
    fitted.se = se;
    return se;
  }
  const Mat info = -hess;
  Eigen::FullPivLU<Mat> lu(info);
  if (!lu.isInvertible()) {
    fitted.warnings.push_back("standard errors unavailable: singular Hessian");
    fitted.se = se;
    return se;
  }
  const Mat cov = lu.inverse();
  bool flagged = false;
  for (int i = 0; i < d; ++i) {
    const double v = cov(i, i);
    if (v > 0.0) {
      se[i] = std::sqrt(v);
    } else {
      flagged = true;  // wrong curvature; leave NaN
    }
  }
  if (flagged) fitted.warnings.push_back("negative-variance diagonal in Hessian inverse");
  fitted.se = se;
  return se;
}

}  // namespace regimetest
