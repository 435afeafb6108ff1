#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "regimetest/dgp.hpp"
#include "regimetest/estimation.hpp"

namespace regimetest {

/*
 * Exchangeable Monte Carlo p-value: p = (N + 1 - R) / (N + 1) with
 * R = sum_i I[stat0 >= stat_i]. Ties between the observed and simulated
 * statistics are broken by auxiliary i.i.d. uniforms (lexicographic
 * comparison on (value, u)), which keeps the p-value exact under
 * exchangeability even with atoms in the null distribution.
 */
struct MCResult {
  double stat0 = kNaN;
  std::vector<double> null_stats;
  int rank = 0;
  double pvalue = kNaN;
  std::array<double, 3> quantiles{kNaN, kNaN, kNaN};  // 0.90 / 0.95 / 0.99
  std::uint64_t seed = 0;
};

MCResult mc_pvalue(double stat0, const std::vector<double>& null_stats,
                   std::uint64_t tie_seed);

// Statistic of one simulated dataset. Replication seeds come in through
// sim.spec.seed so anything random inside derives from them.
using StatFn = std::function<double(const SimOutput& sim)>;

/*
 * Simulates N datasets from the fitted null model (same T, same exogenous
 * block) and evaluates stat_fn on each. Replication i always runs on the
 * substream derived from (seed, i), and the output is ordered by i, so the
 * result is identical for any worker count. A replication whose statistic
 * throws is retried once on a fresh substream; more than 5% failures abort
 * with a test_error.
 */
std::vector<double> simulate_null_stats(const FittedModel& null_fit,
                                        const StatFn& stat_fn, int n,
                                        std::uint64_t seed, int workers);

// DgpSpec reproducing the fitted model's process with n observations.
// Burn-in defaults to 100 for lag models without exogenous regressors and
// 0 otherwise (an exogenous block pins the time alignment).
DgpSpec dgp_from_fit(const FittedModel& fit, int n, std::uint64_t seed);

// Deterministic index-ordered parallel loop shared by the MC procedures.
void parallel_for(int n, int workers, const std::function<void(int)>& body);

}  // namespace regimetest
