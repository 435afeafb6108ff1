#include "regimetest/dgp.hpp"

#include <Eigen/Cholesky>
#include <Eigen/Eigenvalues>

#include <cmath>

namespace regimetest {

namespace {

// independent substreams so that a k = 1 switching spec consumes exactly
// the draws of its linear counterpart
constexpr std::uint64_t kChainStream = 1;
constexpr std::uint64_t kErrorStream = 2;

Mat chol_factor(const Mat& sigma, const char* what) {
  Eigen::LLT<Mat> llt(sigma);
  if (llt.info() != Eigen::Success)
    throw validation_error(std::string(what) + ": sigma must be positive definite");
  return llt.matrixL();
}

double companion_spectral_radius(const std::vector<Mat>& phi, int q) {
  const int p = static_cast<int>(phi.size());
  if (p == 0) return 0.0;
  Mat comp = Mat::Zero(p * q, p * q);
  for (int l = 0; l < p; ++l) comp.block(0, l * q, q, q) = phi[l];
  if (p > 1)
    comp.block(q, 0, (p - 1) * q, (p - 1) * q) =
        Mat::Identity((p - 1) * q, (p - 1) * q);
  return comp.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

int DgpSpec::resolved_burnin() const {
  if (burnin >= 0) return burnin;
  if (family == ModelFamily::Normal || family == ModelFamily::HMM) return 0;
  return p == 0 ? 0 : 100;
}

void DgpSpec::validate() const {
  if (n < 1) throw validation_error("DgpSpec: n must be >= 1");
  if (q < 1 || p < 0 || k < 1) throw validation_error("DgpSpec: bad dimensions");
  const bool sw = family_is_switching(family);
  if (!sw && k != 1) throw validation_error("DgpSpec: linear family requires k = 1");
  if (!sw && trans) throw validation_error("DgpSpec: linear family takes no transition matrix");
  if (k >= 2) {
    if (!trans) throw validation_error("DgpSpec: switching process needs a transition matrix");
    trans->validate();
    if (trans->m != k) throw validation_error("DgpSpec: transition matrix size != k");
  }
  if (mu.rows() != k || mu.cols() != q) throw validation_error("DgpSpec: mu must be k x q");
  if (static_cast<int>(phi.size()) != p) throw validation_error("DgpSpec: phi must have p lags");
  for (const Mat& f : phi)
    if (f.rows() != q || f.cols() != q) throw validation_error("DgpSpec: phi blocks must be q x q");
  if (static_cast<int>(sigma.size()) != k) throw validation_error("DgpSpec: sigma must have k entries");
  for (const Mat& s : sigma)
    if (s.rows() != q || s.cols() != q || (s - s.transpose()).cwiseAbs().maxCoeff() > 1e-10)
      throw validation_error("DgpSpec: sigma blocks must be symmetric q x q");
  const int total = n + resolved_burnin();
  if (beta) {
    if (!exog) throw validation_error("DgpSpec: beta given without exog");
    if (beta->cols() != q || exog->cols() != beta->rows())
      throw validation_error("DgpSpec: beta/exog dimensions inconsistent");
  }
  if (exog && exog->rows() != total)
    throw validation_error("DgpSpec: exog must have n + burnin rows");
  if (eps && (eps->rows() != total || eps->cols() != q))
    throw validation_error("DgpSpec: eps must be (n + burnin) x q");
  if (resolved_burnin() < 0) throw validation_error("DgpSpec: burnin must be >= 0");
}

SimOutput simulate(const DgpSpec& spec) {
  spec.validate();
  const int burn = spec.resolved_burnin();
  const int total = spec.n + burn;
  const int q = spec.q;

  std::vector<Mat> chol(spec.k);
  for (int r = 0; r < spec.k; ++r) chol[r] = chol_factor(spec.sigma[r], "simulate");

  // latent states, 0-based internally
  std::vector<int> st(total, 0);
  if (spec.k >= 2) {
    RegimePath path =
        simulate_chain(*spec.trans, total, derive_stream(spec.seed, kChainStream));
    for (int t = 0; t < total; ++t) st[t] = path.states[t] - 1;
  }

  Mat eps;
  if (spec.eps) {
    eps = *spec.eps;
  } else {
    Rng rng(spec.seed, kErrorStream);
    eps.resize(total, q);
    for (int t = 0; t < total; ++t)
      for (int i = 0; i < q; ++i) eps(t, i) = rng.normal();
  }

  // pre-sample values sit at the conditional mean of the initial state,
  // so lag deviations before t = 0 vanish
  Mat y(total, q);
  for (int t = 0; t < total; ++t) {
    Vec v = spec.mu.row(st[t]).transpose();
    for (int l = 1; l <= spec.p; ++l) {
      if (t - l < 0) continue;
      v += spec.phi[l - 1] *
           (y.row(t - l).transpose() - spec.mu.row(st[t - l]).transpose());
    }
    if (spec.beta) v += spec.beta->transpose() * spec.exog->row(t).transpose();
    v += chol[st[t]] * eps.row(t).transpose();
    y.row(t) = v.transpose();
  }

  SimOutput out;
  out.spec = spec;
  out.y = y.bottomRows(spec.n);
  out.states.seed = spec.seed;
  out.states.states.resize(spec.n);
  for (int t = 0; t < spec.n; ++t) out.states.states[t] = st[burn + t] + 1;
  out.nonstationary = companion_spectral_radius(spec.phi, q) >= 1.0;
  return out;
}

Mat draw_errors(int n, int q, const Mat& sigma, std::uint64_t seed) {
  if (n < 1 || q < 1) throw validation_error("draw_errors: bad dimensions");
  if (sigma.rows() != q || sigma.cols() != q)
    throw validation_error("draw_errors: sigma must be q x q");
  const Mat L = chol_factor(sigma, "draw_errors");
  Rng rng(seed);
  Mat e(n, q);
  Vec z(q);
  for (int t = 0; t < n; ++t) {
    for (int i = 0; i < q; ++i) z[i] = rng.normal();
    e.row(t) = (L * z).transpose();
  }
  return e;
}

}  // namespace regimetest
