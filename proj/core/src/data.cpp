#include "regimetest/data.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace regimetest {

namespace {

std::string quarter_date(int year, int quarter) {
  static const char* kMonth[] = {"01", "04", "07", "10"};
  std::ostringstream os;
  os << year << "-" << kMonth[quarter - 1] << "-01";
  return os.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  fields.push_back(cur);
  return fields;
}

}  // namespace

Mat Dataset::growth_series() const {
  std::vector<double> vals;
  vals.reserve(growth.size());
  for (Eigen::Index i = 0; i < growth.size(); ++i)
    if (std::isfinite(growth[i])) vals.push_back(growth[i]);
  Mat y(static_cast<int>(vals.size()), 1);
  for (std::size_t i = 0; i < vals.size(); ++i) y(static_cast<int>(i), 0) = vals[i];
  return y;
}

std::vector<std::string> dataset_names() {
  std::vector<std::string> names;
  for (int i = 0; i < detail::kBundledCount; ++i)
    names.emplace_back(detail::kBundled[i]->name);
  return names;
}

Dataset load_bundled(const std::string& name) {
  for (int i = 0; i < detail::kBundledCount; ++i) {
    const detail::RawDataset* raw = detail::kBundled[i];
    if (name != raw->name) continue;
    Dataset ds;
    ds.name = raw->name;
    ds.levels.resize(raw->n);
    ds.growth.resize(raw->n);
    int year = raw->start_year;
    int quarter = raw->start_quarter;
    for (int t = 0; t < raw->n; ++t) {
      ds.dates.push_back(quarter_date(year, quarter));
      ds.levels[t] = raw->levels[t];
      ds.growth[t] = raw->growth[t];
      if (++quarter == 5) {
        quarter = 1;
        ++year;
      }
    }
    return ds;
  }
  throw validation_error("unknown dataset: " + name);
}

LoadedSeries load_csv(const std::string& path, const CsvOptions& options) {
  std::ifstream in(path);
  if (!in) throw validation_error("load_csv: cannot open " + path);

  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    rows.push_back(split_csv_line(line));
  }
  if (rows.empty()) throw validation_error("load_csv: " + path + " is empty");

  int value_idx = -1;
  int date_idx = -1;
  std::size_t first_data = 0;
  if (options.header) {
    const auto& head = rows[0];
    for (std::size_t i = 0; i < head.size(); ++i) {
      if (head[i] == options.value_col) value_idx = static_cast<int>(i);
      if (options.date_col && head[i] == *options.date_col) date_idx = static_cast<int>(i);
    }
    if (value_idx < 0)
      throw validation_error("load_csv: column '" + options.value_col + "' missing");
    if (options.date_col && date_idx < 0)
      throw validation_error("load_csv: column '" + *options.date_col + "' missing");
    first_data = 1;
    if (rows.size() == 1) throw validation_error("load_csv: no data rows in " + path);
  } else {
    try {
      value_idx = std::stoi(options.value_col);
      if (options.date_col) date_idx = std::stoi(*options.date_col);
    } catch (const std::exception&) {
      throw validation_error("load_csv: without a header, columns are 0-based indices");
    }
  }

  LoadedSeries out;
  std::vector<double> vals;
  for (std::size_t r = first_data; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (value_idx >= static_cast<int>(row.size()))
      throw validation_error("load_csv: row " + std::to_string(r + 1) + " too short");
    const std::string& cell = row[value_idx];
    try {
      std::size_t pos = 0;
      const double v = std::stod(cell, &pos);
      if (pos != cell.size()) throw std::invalid_argument(cell);
      vals.push_back(v);
    } catch (const std::exception&) {
      throw validation_error("load_csv: row " + std::to_string(r + 1) +
                             ": non-numeric value '" + cell + "'");
    }
    if (date_idx >= 0) {
      if (date_idx >= static_cast<int>(row.size()))
        throw validation_error("load_csv: row " + std::to_string(r + 1) + " missing date");
      out.dates.push_back(row[date_idx]);
    }
  }
  out.values.resize(static_cast<Eigen::Index>(vals.size()));
  for (std::size_t i = 0; i < vals.size(); ++i)
    out.values[static_cast<Eigen::Index>(i)] = vals[i];

  if (!out.dates.empty()) {
    for (std::size_t i = 1; i < out.dates.size(); ++i) {
      if (out.dates[i] <= out.dates[i - 1]) {
        out.warnings.push_back("dates not strictly increasing at row " +
                               std::to_string(i + first_data + 1));
        break;
      }
    }
  }
  return out;
}

Vec growth_rate(const Vec& levels) {
  for (Eigen::Index i = 0; i < levels.size(); ++i)
    if (!(levels[i] > 0.0))
      throw validation_error("growth_rate: levels must be positive");
  Vec g(levels.size() - 1);
  for (Eigen::Index i = 1; i < levels.size(); ++i)
    g[i - 1] = 100.0 * (std::log(levels[i]) - std::log(levels[i - 1]));
  return g;
}

void write_dataset_csv(const Dataset& ds, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw validation_error("write_dataset_csv: cannot open " + path);
  out << "date,level,growth\n";
  out.precision(12);
  for (std::size_t t = 0; t < ds.dates.size(); ++t) {
    out << ds.dates[t] << "," << ds.levels[static_cast<Eigen::Index>(t)] << ",";
    const double g = ds.growth[static_cast<Eigen::Index>(t)];
    if (std::isfinite(g)) out << g;
    out << "\n";
  }
}

}  // namespace regimetest
