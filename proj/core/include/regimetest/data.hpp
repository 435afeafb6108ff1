#pragma once

#include <optional>
#include <string>
#include <vector>

#include "regimetest/types.hpp"

namespace regimetest {

namespace detail {
struct RawDataset {
  const char* name;
  int start_year;
  int start_quarter;
  int n;
  const double* levels;
  const double* growth;
};
extern const RawDataset* kBundled[];
extern const int kBundledCount;
}  // namespace detail

/*
 * Bundled quarterly macro series: ISO quarter-start dates, levels, and
 * 100 * dlog growth (NaN on the anchor row). The growth column is the
 * series the tests consume.
 */
struct Dataset {
  std::string name;
  std::vector<std::string> dates;
  Vec levels;
  Vec growth;

  // finite growth observations as a T x 1 matrix
  Mat growth_series() const;
};

std::vector<std::string> dataset_names();
Dataset load_bundled(const std::string& name);

struct CsvOptions {
  std::optional<std::string> date_col;
  std::string value_col;
  bool header = true;
};

struct LoadedSeries {
  std::vector<std::string> dates;  // empty unless date_col given
  Vec values;
  std::vector<std::string> warnings;
};

// Strict numeric CSV reader: rejects rows with non-numeric values (error
// names the row), warns on non-monotone dates.
LoadedSeries load_csv(const std::string& path, const CsvOptions& options);

// 100 * (log level_t - log level_{t-1}); throws on non-positive levels.
Vec growth_rate(const Vec& levels);

void write_dataset_csv(const Dataset& ds, const std::string& path);

}  // namespace regimetest
