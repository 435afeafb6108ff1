#include "regimetest/optim.hpp"

#include <algorithm>
#include <cmath>

#include "regimetest/rng.hpp"

namespace regimetest {

void SearchProblem::validate() const {
  if (!objective) throw validation_error("SearchProblem: objective not set");
  if (lower.size() != upper.size() || lower.size() == 0)
    throw validation_error("SearchProblem: bounds must be non-empty and equal-sized");
  for (Eigen::Index i = 0; i < lower.size(); ++i) {
    if (!std::isfinite(lower[i]) || !std::isfinite(upper[i]) || lower[i] > upper[i])
      throw validation_error("SearchProblem: bounds must be finite with lower <= upper");
  }
  if (budget < 1) throw validation_error("SearchProblem: budget must be >= 1");
}

namespace {

struct Tracker {
  const SearchProblem& prob;
  SearchResult res;
  bool done = false;

  explicit Tracker(const SearchProblem& p) : prob(p) {
    res.x = 0.5 * (p.lower + p.upper);
  }

  // evaluates, updates best-so-far, returns true when the search must stop
  bool eval(const Vec& x, double& value) {
    value = prob.objective(x);
    ++res.evals;
    if (value > res.value) {
      res.value = value;
      res.x = x;
    }
    res.best_trace.push_back(res.value);
    if (prob.threshold_stop && res.value >= *prob.threshold_stop) {
      res.early_exit = true;
      done = true;
    }
    if (res.evals >= prob.budget) done = true;
    return done;
  }
};

Vec clamp_box(Vec x, const Vec& lo, const Vec& hi) {
  for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = std::clamp(x[i], lo[i], hi[i]);
  return x;
}

}  // namespace

SearchResult particle_swarm(const SearchProblem& problem) {
  problem.validate();
  const int d = static_cast<int>(problem.lower.size());
  const int swarm = std::max(13, 4 + static_cast<int>(std::floor(3.0 * std::log(d))));
  const double w = 0.7213;   // inertia
  const double cp = 1.193;   // cognitive
  const double cg = 1.193;   // social

  Rng rng(problem.seed);
  Tracker trk(problem);
  const Vec range = problem.upper - problem.lower;

  std::vector<Vec> x(swarm), v(swarm), pbest(swarm);
  std::vector<double> pval(swarm, -std::numeric_limits<double>::infinity());
  Vec gbest = trk.res.x;
  double gval = -std::numeric_limits<double>::infinity();

  for (int i = 0; i < swarm && !trk.done; ++i) {
    x[i].resize(d);
    v[i].resize(d);
    for (int j = 0; j < d; ++j) {
      x[i][j] = problem.lower[j] + rng.uniform() * range[j];
      v[i][j] = (rng.uniform() - 0.5) * range[j];
    }
    double f;
    trk.eval(x[i], f);
    pbest[i] = x[i];
    pval[i] = f;
    if (f > gval) {
      gval = f;
      gbest = x[i];
    }
  }

  while (!trk.done) {
    for (int i = 0; i < swarm && !trk.done; ++i) {
      for (int j = 0; j < d; ++j) {
        v[i][j] = w * v[i][j] + cp * rng.uniform() * (pbest[i][j] - x[i][j]) +
                  cg * rng.uniform() * (gbest[j] - x[i][j]);
        x[i][j] += v[i][j];
        if (x[i][j] < problem.lower[j]) {
          x[i][j] = problem.lower[j];
          v[i][j] = 0.0;
        } else if (x[i][j] > problem.upper[j]) {
          x[i][j] = problem.upper[j];
          v[i][j] = 0.0;
        }
      }
      double f;
      trk.eval(x[i], f);
      if (f > pval[i]) {
        pval[i] = f;
        pbest[i] = x[i];
      }
      if (f > gval) {
        gval = f;
        gbest = x[i];
      }
    }
  }
  return trk.res;
}

SearchResult simulated_annealing(const SearchProblem& problem) {
  problem.validate();
  const int d = static_cast<int>(problem.lower.size());
  const double t0 = 5000.0;
  const double cooling = 0.95;

  Rng rng(problem.seed);
  Tracker trk(problem);
  const Vec range = problem.upper - problem.lower;

  Vec x = 0.5 * (problem.lower + problem.upper);
  double fx;
  if (trk.eval(x, fx)) return trk.res;

  double temp = t0;
  while (!trk.done) {
    // proposal scale shrinks with temperature but never fully freezes
    const double scale = std::max(temp / t0, 0.02);
    Vec cand = x;
    for (int j = 0; j < d; ++j) cand[j] += rng.normal() * 0.5 * scale * range[j];
    cand = clamp_box(std::move(cand), problem.lower, problem.upper);

    double fc;
    const bool stop = trk.eval(cand, fc);
    const double delta = fc - fx;
    if (delta >= 0.0 || rng.uniform() < std::exp(delta / std::max(temp, 1e-300))) {
      x = cand;
      fx = fc;
    }
    temp *= cooling;
    if (stop) break;
  }
  return trk.res;
}

LocalResult nelder_mead_min(const Objective& f, const Vec& x0, double step,
                            int max_evals, double ftol) {
  const int d = static_cast<int>(x0.size());
  LocalResult out;
  if (d == 0) {
    out.x = x0;
    out.fmin = f(x0);
    out.evals = 1;
    out.converged = true;
    return out;
  }

  std::vector<Vec> pts(d + 1, x0);
  std::vector<double> val(d + 1);
  int evals = 0;
  auto safe_f = [&](const Vec& x) {
    ++evals;
    double v;
    try {
      v = f(x);
    } catch (...) {
      v = std::numeric_limits<double>::infinity();
    }
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };

  for (int i = 1; i <= d; ++i) {
    const double h = (x0[i - 1] != 0.0) ? step * std::abs(x0[i - 1]) : step;
    pts[i][i - 1] += std::max(h, 1e-8);
  }
  for (int i = 0; i <= d; ++i) val[i] = safe_f(pts[i]);

  while (evals < max_evals) {
    std::vector<int> ord(d + 1);
    for (int i = 0; i <= d; ++i) ord[i] = i;
    std::sort(ord.begin(), ord.end(), [&](int a, int b) { return val[a] < val[b]; });
    const int best = ord[0], worst = ord[d], second = ord[d - 1];

    if (std::abs(val[worst] - val[best]) <=
        ftol * (std::abs(val[best]) + std::abs(val[worst]) + 1e-300)) {
      out.converged = true;
      break;
    }

    Vec centroid = Vec::Zero(d);
    for (int i = 0; i <= d; ++i)
      if (i != worst) centroid += pts[i];
    centroid /= d;

    const Vec refl = centroid + (centroid - pts[worst]);
    const double f_refl = safe_f(refl);
    if (f_refl < val[ord[0]]) {
      const Vec expd = centroid + 2.0 * (centroid - pts[worst]);
      const double f_expd = safe_f(expd);
      if (f_expd < f_refl) {
        pts[worst] = expd;
        val[worst] = f_expd;
      } else {
        pts[worst] = refl;
        val[worst] = f_refl;
      }
    } else if (f_refl < val[second]) {
      pts[worst] = refl;
      val[worst] = f_refl;
    } else {
      const Vec contr = centroid + 0.5 * (pts[worst] - centroid);
      const double f_contr = safe_f(contr);
      if (f_contr < val[worst]) {
        pts[worst] = contr;
        val[worst] = f_contr;
      } else {
        for (int i = 0; i <= d; ++i) {
          if (i == best) continue;
          pts[i] = pts[best] + 0.5 * (pts[i] - pts[best]);
          val[i] = safe_f(pts[i]);
        }
      }
    }
  }

  int best = 0;
  for (int i = 1; i <= d; ++i)
    if (val[i] < val[best]) best = i;
  out.x = pts[best];
  out.fmin = val[best];
  out.evals = evals;
  return out;
}

LocalResult bounded_bfgs_min(const Objective& f, const Vec& x0, const Vec& lo,
                             const Vec& hi, int max_iters) {
  const int d = static_cast<int>(x0.size());
  LocalResult out;
  int evals = 0;
  auto safe_f = [&](const Vec& x) {
    ++evals;
    double v;
    try {
      v = f(x);
    } catch (...) {
      v = std::numeric_limits<double>::infinity();
    }
    return std::isnan(v) ? std::numeric_limits<double>::infinity() : v;
  };
  auto proj = [&](Vec x) { return clamp_box(std::move(x), lo, hi); };
  auto grad = [&](const Vec& x, double fx) {
    Vec g(d);
    for (int i = 0; i < d; ++i) {
      const double h = 1e-6 * std::max(1.0, std::abs(x[i]));
      Vec xp = x, xm = x;
      xp[i] = std::min(x[i] + h, hi[i]);
      xm[i] = std::max(x[i] - h, lo[i]);
      const double denom = xp[i] - xm[i];
      if (denom <= 0.0) {
        g[i] = 0.0;
        continue;
      }
      g[i] = (safe_f(xp) - safe_f(xm)) / denom;
    }
    (void)fx;
    return g;
  };

  Vec x = proj(x0);
  double fx = safe_f(x);
  Vec g = grad(x, fx);
  Mat h_inv = Mat::Identity(d, d);

  for (int it = 0; it < max_iters; ++it) {
    if ((proj(x - g) - x).lpNorm<Eigen::Infinity>() < 1e-9) {
      out.converged = true;
      break;
    }
    Vec dir = -(h_inv * g);
    if (dir.dot(g) >= 0.0) dir = -g;  // not a descent direction; reset

    double alpha = 1.0;
    bool moved = false;
    Vec x_new;
    double f_new = fx;
    for (int ls = 0; ls < 30; ++ls) {
      x_new = proj(x + alpha * dir);
      f_new = safe_f(x_new);
      if (f_new < fx - 1e-4 * alpha * std::abs(g.dot(dir))) {
        moved = true;
        break;
      }
      alpha *= 0.5;
    }
    if (!moved) {
      out.converged = true;  // no descent possible at line-search resolution
      break;
    }

    const Vec g_new = grad(x_new, f_new);
    const Vec s = x_new - x;
    const Vec yv = g_new - g;
    const double sy = s.dot(yv);
    if (sy > 1e-12) {
      const Mat outer_sy = s * yv.transpose();
      const Mat eye = Mat::Identity(d, d);
      h_inv = (eye - outer_sy / sy) * h_inv * (eye - outer_sy.transpose() / sy) +
              (s * s.transpose()) / sy;
    } else {
      h_inv = Mat::Identity(d, d);
    }
    x = x_new;
    fx = f_new;
    g = g_new;
  }

  out.x = x;
  out.fmin = fx;
  out.evals = evals;
  return out;
}

}  // namespace regimetest
