#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "regimetest/rng.hpp"
#include "regimetest/types.hpp"

namespace regimetest {

/*
 * First-order Markov chain on states {1..M}.
 *
 * The transition matrix is stored column-stochastic: entry (j, i) is
 * P(S_t = j | S_{t-1} = i), i.e. column i holds the distribution of the
 * next state given current state i. Every module in the library adopts
 * this convention, so a distribution over states evolves as pi' = P * pi.
 */
struct TransitionMatrix {
  int m = 0;   // regime count
  Mat p_mat;   // M x M, columns sum to 1

  TransitionMatrix() = default;
  TransitionMatrix(int m_, Mat p);

  // P(S_t = to | S_{t-1} = from), 1-based states.
  double prob(int to, int from) const { return p_mat(to - 1, from - 1); }

  void validate() const;
};

// Convenience constructor for two regimes from the diagonal probabilities.
TransitionMatrix two_state(double p11, double p22);

struct RegimePath {
  std::vector<int> states;  // values in {1..M}
  std::uint64_t seed = 0;
};

// Stationary distribution pi with P pi = pi, computed from the normal
// equations of A = [I - P; 1']. Throws estimation_error("not ergodic")
// when A'A is singular beyond tolerance (condition number > 1e12).
Vec ergodic_distribution(const TransitionMatrix& P);

// Draws a state path of length n. When init (1-based) is absent the first
// state is drawn from the ergodic distribution. Deterministic in
// (P, n, seed, init).
RegimePath simulate_chain(const TransitionMatrix& P, int n, std::uint64_t seed,
                          std::optional<int> init = std::nullopt);

}  // namespace regimetest
