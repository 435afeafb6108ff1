#include "regimetest/markov.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <sstream>

namespace regimetest {

TransitionMatrix::TransitionMatrix(int m_, Mat p) : m(m_), p_mat(std::move(p)) {
  validate();
}

void TransitionMatrix::validate() const {
  if (m < 1) throw validation_error("TransitionMatrix: regime count must be >= 1");
  if (p_mat.rows() != m || p_mat.cols() != m)
    throw validation_error("TransitionMatrix: p_mat must be M x M");
  for (int i = 0; i < m; ++i) {
    double col_sum = 0.0;
    for (int j = 0; j < m; ++j) {
      const double v = p_mat(j, i);
      if (!(v >= 0.0 && v <= 1.0))
        throw validation_error("TransitionMatrix: entries must lie in [0, 1]");
      col_sum += v;
    }
    if (std::abs(col_sum - 1.0) > 1e-12) {
      std::ostringstream os;
      os << "TransitionMatrix: column " << i + 1 << " sums to " << col_sum;
      throw validation_error(os.str());
    }
  }
}

TransitionMatrix two_state(double p11, double p22) {
  Mat p(2, 2);
  p << p11, 1.0 - p22,
       1.0 - p11, p22;
  return TransitionMatrix(2, p);
}

Vec ergodic_distribution(const TransitionMatrix& P) {
  P.validate();
  const int m = P.m;

  // A = [I - P; 1'], pi solves A'A pi = A' e_{M+1}.
  Mat a(m + 1, m);
  a.topRows(m) = Mat::Identity(m, m) - P.p_mat;
  a.bottomRows(1).setOnes();

  const Mat ata = a.transpose() * a;
  Eigen::SelfAdjointEigenSolver<Mat> es(ata);
  const Vec ev = es.eigenvalues();
  const double lo = ev.minCoeff();
  const double hi = ev.maxCoeff();
  if (!(lo > 0.0) || hi / lo > 1e12)
    throw estimation_error("ergodic_distribution: chain is not ergodic");

  Vec rhs = a.transpose() * Vec::Unit(m + 1, m);
  Vec pi = ata.ldlt().solve(rhs);

  // Round away the tiny negatives the normal equations can leave behind.
  for (int i = 0; i < m; ++i)
    if (pi[i] < 0.0 && pi[i] > -1e-12) pi[i] = 0.0;
  pi /= pi.sum();
  return pi;
}

RegimePath simulate_chain(const TransitionMatrix& P, int n, std::uint64_t seed,
                          std::optional<int> init) {
  P.validate();
  if (n < 1) throw validation_error("simulate_chain: n must be >= 1");
  if (init && (*init < 1 || *init > P.m))
    throw validation_error("simulate_chain: init state out of range");

  Rng rng(seed);
  RegimePath path;
  path.seed = seed;
  path.states.resize(n);

  int s;
  if (init) {
    s = *init - 1;
  } else {
    s = rng.categorical(ergodic_distribution(P));
  }
  path.states[0] = s + 1;
  for (int t = 1; t < n; ++t) {
    s = rng.categorical(P.p_mat.col(s));
    path.states[t] = s + 1;
  }
  return path;
}

}  // namespace regimetest
