#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace regimetest {

using Mat = Eigen::MatrixXd;
using Vec = Eigen::VectorXd;

// Invalid inputs (bad dimensions, out-of-range options, malformed files).
class validation_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Estimation could not produce a usable fit (non-convergence after retries,
// rank-deficient regressors, degenerate likelihood).
class estimation_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A test procedure failed as a whole (e.g. too many replication failures).
class test_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline double log_sum_exp(const Vec& x) {
  const double m = x.maxCoeff();
  if (!std::isfinite(m)) return m;  // all -inf stays -inf
  double s = 0.0;
  for (Eigen::Index i = 0; i < x.size(); ++i) s += std::exp(x[i] - m);
  return m + std::log(s);
}

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

// Empirical quantile with linear interpolation between order statistics
// (the convention most stats software defaults to).
double empirical_quantile(std::vector<double> sorted_or_not, double prob);

// Standard normal CDF.
inline double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace regimetest
