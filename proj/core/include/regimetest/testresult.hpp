#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "regimetest/estimation.hpp"

namespace regimetest {

/*
 * One printed line of a test: the statistic, the 0.90/0.95/0.99 percentiles
 * of its simulated null (reported loosely as "critical values"), and the
 * Monte Carlo or bootstrap p-value. Procedures with several statistics
 * (moment combinations, supTS/expTS, the HAC lag table) emit one row each.
 */
struct TestRow {
  std::string label;
  double stat = kNaN;
  std::array<double, 3> quantiles{kNaN, kNaN, kNaN};
  double pvalue = kNaN;
  std::map<std::string, double> details;
};

struct TestResult {
  std::string procedure;
  std::vector<TestRow> rows;
  std::optional<FittedModel> fit0;
  std::optional<FittedModel> fit1;
  std::optional<Vec> argmax;  // maximized procedures: nuisance point attaining sup
  std::vector<std::string> warnings;
  std::uint64_t seed = 0;
  bool converged = true;  // false when a search exhausted its budget
};

}  // namespace regimetest
