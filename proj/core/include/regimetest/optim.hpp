#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "regimetest/types.hpp"

namespace regimetest {

using Objective = std::function<double(const Vec&)>;

/*
 * Bounded-box global maximization problem for the derivative-free searches.
 * threshold_stop triggers an early exit as soon as the best value reaches
 * it (used by the maximized Monte Carlo searches, where any p-value above
 * the test level already settles the decision).
 */
struct SearchProblem {
  Objective objective;  // maximized
  Vec lower;
  Vec upper;
  int budget = 1000;    // max objective evaluations
  std::optional<double> threshold_stop;
  std::uint64_t seed = 0;

  void validate() const;
};

struct SearchResult {
  Vec x;
  double value = -std::numeric_limits<double>::infinity();
  int evals = 0;
  bool early_exit = false;         // stopped on threshold_stop
  std::vector<double> best_trace;  // best-so-far after each evaluation
};

SearchResult particle_swarm(const SearchProblem& problem);
SearchResult simulated_annealing(const SearchProblem& problem);

/*
 * Local minimizers used behind MLE and the grid concentrations. Both stay
 * inside [lo, hi] (pass +-inf entries for unbounded coordinates).
 */
struct LocalResult {
  Vec x;
  double fmin = std::numeric_limits<double>::infinity();
  int evals = 0;
  bool converged = false;
};

LocalResult nelder_mead_min(const Objective& f, const Vec& x0, double step,
                            int max_evals, double ftol);

// Projected quasi-Newton (BFGS with box projection, finite-difference
// gradients).
LocalResult bounded_bfgs_min(const Objective& f, const Vec& x0, const Vec& lo,
                             const Vec& hi, int max_iters = 200);

}  // namespace regimetest
