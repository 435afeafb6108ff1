#include "regimetest/model.hpp"

#include <map>
#include <sstream>

namespace regimetest {

std::string family_name(ModelFamily f) {
  switch (f) {
    case ModelFamily::Normal: return "normal";
    case ModelFamily::AR: return "ar";
    case ModelFamily::ARX: return "arx";
    case ModelFamily::VAR: return "var";
    case ModelFamily::VARX: return "varx";
    case ModelFamily::MSAR: return "msar";
    case ModelFamily::MSARX: return "msarx";
    case ModelFamily::MSVAR: return "msvar";
    case ModelFamily::MSVARX: return "msvarx";
    case ModelFamily::HMM: return "hmm";
  }
  return "?";
}

ModelFamily family_from_name(const std::string& name) {
  static const std::map<std::string, ModelFamily> table = {
      {"normal", ModelFamily::Normal}, {"ar", ModelFamily::AR},
      {"arx", ModelFamily::ARX},       {"var", ModelFamily::VAR},
      {"varx", ModelFamily::VARX},     {"msar", ModelFamily::MSAR},
      {"msarx", ModelFamily::MSARX},   {"msvar", ModelFamily::MSVAR},
      {"msvarx", ModelFamily::MSVARX}, {"hmm", ModelFamily::HMM}};
  auto it = table.find(name);
  if (it == table.end()) throw validation_error("unknown model family: " + name);
  return it->second;
}

bool family_is_switching(ModelFamily f) {
  switch (f) {
    case ModelFamily::MSAR:
    case ModelFamily::MSARX:
    case ModelFamily::MSVAR:
    case ModelFamily::MSVARX:
    case ModelFamily::HMM: return true;
    default: return false;
  }
}

bool family_has_exog(ModelFamily f) {
  switch (f) {
    case ModelFamily::ARX:
    case ModelFamily::VARX:
    case ModelFamily::MSARX:
    case ModelFamily::MSVARX:
    case ModelFamily::Normal:  // Nmdl/HMmdl style: regressors always allowed
    case ModelFamily::HMM: return true;
    default: return false;
  }
}

void ModelSpec::validate() const {
  if (p < 0) throw validation_error("ModelSpec: p must be >= 0");
  if (q < 1) throw validation_error("ModelSpec: q must be >= 1");
  if (k < 1) throw validation_error("ModelSpec: k must be >= 1");
  if (family_is_switching(family) && k < 2)
    throw validation_error("ModelSpec: switching family requires k >= 2");
  if (!family_is_switching(family) && k != 1)
    throw validation_error("ModelSpec: linear family requires k = 1");
  if (exog && !family_has_exog(family))
    throw validation_error("ModelSpec: family does not accept exogenous regressors");
}

Vec vech(const Mat& s) {
  const int q = static_cast<int>(s.rows());
  Vec v(q * (q + 1) / 2);
  int idx = 0;
  for (int i = 0; i < q; ++i)
    for (int j = i; j < q; ++j) v[idx++] = s(i, j);
  return v;
}

Mat unvech(const Vec& v, int q) {
  Mat s(q, q);
  int idx = 0;
  for (int i = 0; i < q; ++i)
    for (int j = i; j < q; ++j) {
      s(i, j) = v[idx];
      s(j, i) = v[idx];
      ++idx;
    }
  return s;
}

Params unpack_theta(const ModelSpec& spec, const Vec& theta) {
  if (theta.size() != spec.n_theta())
    throw validation_error("unpack_theta: theta has wrong length");
  Params par;
  int off = 0;

  const int mu_regimes = (spec.switching() && spec.msmu) ? spec.k : 1;
  par.mu.resize(spec.k, spec.q);
  for (int r = 0; r < spec.k; ++r) {
    const int src = std::min(r, mu_regimes - 1);
    for (int i = 0; i < spec.q; ++i) par.mu(r, i) = theta[off + src * spec.q + i];
  }
  off += mu_regimes * spec.q;

  par.phi.resize(spec.p);
  for (int l = 0; l < spec.p; ++l) {
    par.phi[l].resize(spec.q, spec.q);
    for (int i = 0; i < spec.q; ++i)
      for (int j = 0; j < spec.q; ++j) par.phi[l](i, j) = theta[off++];
  }

  par.beta.resize(spec.qz(), spec.q);
  for (int z = 0; z < spec.qz(); ++z)
    for (int i = 0; i < spec.q; ++i) par.beta(z, i) = theta[off++];

  const int sig_regimes = (spec.switching() && spec.msvar) ? spec.k : 1;
  const int vlen = spec.n_sigma_each();
  par.sigma.resize(spec.k);
  for (int r = 0; r < spec.k; ++r) {
    const int src = std::min(r, sig_regimes - 1);
    par.sigma[r] = unvech(theta.segment(off + src * vlen, vlen), spec.q);
  }
  off += sig_regimes * vlen;

  if (spec.switching()) {
    Mat p(spec.k, spec.k);
    for (int i = 0; i < spec.k; ++i)       // from-state (column)
      for (int j = 0; j < spec.k; ++j)     // to-state (row)
        p(j, i) = theta[off++];
    par.trans.m = spec.k;
    par.trans.p_mat = std::move(p);
  }
  return par;
}

Vec pack_theta(const ModelSpec& spec, const Params& par) {
  Vec theta(spec.n_theta());
  int off = 0;

  const int mu_regimes = (spec.switching() && spec.msmu) ? spec.k : 1;
  for (int r = 0; r < mu_regimes; ++r)
    for (int i = 0; i < spec.q; ++i) theta[off++] = par.mu(r, i);

  for (int l = 0; l < spec.p; ++l)
    for (int i = 0; i < spec.q; ++i)
      for (int j = 0; j < spec.q; ++j) theta[off++] = par.phi[l](i, j);

  for (int z = 0; z < spec.qz(); ++z)
    for (int i = 0; i < spec.q; ++i) theta[off++] = par.beta(z, i);

  const int sig_regimes = (spec.switching() && spec.msvar) ? spec.k : 1;
  for (int r = 0; r < sig_regimes; ++r) {
    Vec v = vech(par.sigma[r]);
    theta.segment(off, v.size()) = v;
    off += static_cast<int>(v.size());
  }

  if (spec.switching()) {
    for (int i = 0; i < spec.k; ++i)
      for (int j = 0; j < spec.k; ++j) theta[off++] = par.trans.p_mat(j, i);
  }
  return theta;
}

std::vector<std::string> theta_names(const ModelSpec& spec) {
  std::vector<std::string> names;
  names.reserve(spec.n_theta());
  auto tag = [](const std::string& base) { return base; };

  const int mu_regimes = (spec.switching() && spec.msmu) ? spec.k : 1;
  for (int r = 0; r < mu_regimes; ++r)
    for (int i = 0; i < spec.q; ++i) {
      std::ostringstream os;
      if (spec.q == 1) {
        os << "mu";
        if (mu_regimes > 1) os << "_" << r + 1;
      } else {
        os << "mu_" << i + 1;
        if (mu_regimes > 1) os << "," << r + 1;
      }
      names.push_back(tag(os.str()));
    }

  for (int l = 0; l < spec.p; ++l)
    for (int i = 0; i < spec.q; ++i)
      for (int j = 0; j < spec.q; ++j) {
        std::ostringstream os;
        os << "phi_" << l + 1;
        if (spec.q > 1) os << "," << i + 1 << j + 1;
        names.push_back(os.str());
      }

  for (int z = 0; z < spec.qz(); ++z)
    for (int i = 0; i < spec.q; ++i) {
      std::ostringstream os;
      os << "beta_" << z + 1;
      if (spec.q > 1) os << "," << i + 1;
      names.push_back(os.str());
    }

  const int sig_regimes = (spec.switching() && spec.msvar) ? spec.k : 1;
  for (int r = 0; r < sig_regimes; ++r) {
    for (int i = 0; i < spec.q; ++i)
      for (int j = i; j < spec.q; ++j) {
        std::ostringstream os;
        if (spec.q == 1) {
          os << "sig";
          if (sig_regimes > 1) os << "_" << r + 1;
        } else {
          os << "sig_" << i + 1 << j + 1;
          if (sig_regimes > 1) os << "," << r + 1;
        }
        names.push_back(os.str());
      }
  }

  if (spec.switching()) {
    for (int i = 0; i < spec.k; ++i)
      for (int j = 0; j < spec.k; ++j) {
        std::ostringstream os;
        os << "p_" << i + 1 << j + 1;
        names.push_back(os.str());
      }
  }
  return names;
}

}  // namespace regimetest
