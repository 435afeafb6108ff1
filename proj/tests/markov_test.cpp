#include "doctest.h"

#include "regimetest/markov.hpp"
#include "regimetest/rng.hpp"

using namespace regimetest;

namespace {

TransitionMatrix random_stochastic(int m, Rng& rng) {
  Mat p(m, m);
  for (int i = 0; i < m; ++i) {
    double sum = 0.0;
    for (int j = 0; j < m; ++j) {
      p(j, i) = 0.05 + rng.uniform();
      sum += p(j, i);
    }
    p.col(i) /= sum;
  }
  return TransitionMatrix(m, p);
}

}  // namespace

TEST_CASE("ergodic distribution: two-regime closed form") {
  const TransitionMatrix p = two_state(0.95, 0.90);
  const Vec pi = ergodic_distribution(p);
  CHECK(pi[0] == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
  CHECK(pi[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("ergodic distribution: symmetric columns") {
  Mat p(2, 2);
  p << 0.5, 0.5, 0.5, 0.5;
  const Vec pi = ergodic_distribution(TransitionMatrix(2, p));
  CHECK(pi[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(pi[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("ergodic distribution: reducible chain rejected") {
  CHECK_THROWS_AS(ergodic_distribution(TransitionMatrix(2, Mat::Identity(2, 2))),
                  estimation_error);
}

TEST_CASE("ergodic distribution: stationarity on random chains") {
  Rng rng(42);
  for (int rep = 0; rep < 100; ++rep) {
    const int m = 2 + rep % 3;
    const TransitionMatrix p = random_stochastic(m, rng);
    const Vec pi = ergodic_distribution(p);
    CHECK(pi.minCoeff() >= 0.0);
    CHECK(std::abs(pi.sum() - 1.0) < 1e-12);
    CHECK((p.p_mat * pi - pi).lpNorm<Eigen::Infinity>() < 1e-10);
  }
}

TEST_CASE("ergodic distribution: closed form agrees with normal equations") {
  Rng rng(7);
  for (int rep = 0; rep < 50; ++rep) {
    const double p11 = 0.02 + 0.96 * rng.uniform();
    const double p22 = 0.02 + 0.96 * rng.uniform();
    const Vec pi = ergodic_distribution(two_state(p11, p22));
    const double pi1 = (1.0 - p22) / (2.0 - p11 - p22);
    CHECK(std::abs(pi[0] - pi1) < 1e-12);
  }
}

TEST_CASE("transition matrix validation") {
  Mat bad(2, 2);
  bad << 0.9, 0.1, 0.2, 0.9;  // column 1 sums to 1.1
  CHECK_THROWS_AS(TransitionMatrix(2, bad), validation_error);
  CHECK_THROWS_AS(TransitionMatrix(0, Mat::Ones(0, 0)), validation_error);
}

TEST_CASE("simulate_chain: absorbing state") {
  const RegimePath path = simulate_chain(two_state(1.0, 0.6), 10, 99, 1);
  for (int s : path.states) CHECK(s == 1);
}

TEST_CASE("simulate_chain: deterministic cycle") {
  const RegimePath path = simulate_chain(two_state(0.0, 0.0), 4, 5, 1);
  CHECK(path.states == std::vector<int>{1, 2, 1, 2});
}

TEST_CASE("simulate_chain: long-run frequency") {
  Mat p(2, 2);
  p << 0.5, 0.5, 0.5, 0.5;
  const RegimePath path = simulate_chain(TransitionMatrix(2, p), 10000, 314);
  int ones = 0;
  for (int s : path.states)
    if (s == 1) ++ones;
  CHECK(std::abs(ones / 10000.0 - 0.5) < 0.02);
}

TEST_CASE("simulate_chain: bit-identical under the same seed") {
  const TransitionMatrix p = two_state(0.9, 0.8);
  const RegimePath a = simulate_chain(p, 500, 2024, 2);
  const RegimePath b = simulate_chain(p, 500, 2024, 2);
  CHECK(a.states == b.states);
  const RegimePath c = simulate_chain(p, 500, 2025, 2);
  CHECK(a.states != c.states);
}

TEST_CASE("simulate_chain: invalid init rejected") {
  CHECK_THROWS_AS(simulate_chain(two_state(0.9, 0.8), 10, 1, 3), validation_error);
  CHECK_THROWS_AS(simulate_chain(two_state(0.9, 0.8), 0, 1), validation_error);
}
