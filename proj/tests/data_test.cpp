#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "regimetest/data.hpp"

using namespace regimetest;

namespace {

struct TempFile {
  std::string path;
  explicit TempFile(const std::string& content) {
    path = std::string(std::tmpnam(nullptr)) + ".csv";
    std::ofstream out(path);
    out << content;
  }
  ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("bundled datasets: four names, valid quarterly structure") {
  const auto names = dataset_names();
  REQUIRE(names.size() == 4);
  CHECK(names[0] == "hamilton84GNP");
  CHECK(names[1] == "chp10GNP");
  CHECK(names[2] == "USGNP");
  CHECK(names[3] == "USRGDP");

  for (const auto& name : names) {
    const Dataset ds = load_bundled(name);
    CHECK(ds.dates.size() == static_cast<std::size_t>(ds.levels.size()));
    for (std::size_t i = 1; i < ds.dates.size(); ++i) CHECK(ds.dates[i] > ds.dates[i - 1]);
    // growth consistent with levels
    for (Eigen::Index t = 1; t < ds.levels.size(); ++t) {
      const double g = 100.0 * (std::log(ds.levels[t]) - std::log(ds.levels[t - 1]));
      CHECK(std::abs(g - ds.growth[t]) < 1e-6);
    }
  }
}

TEST_CASE("bundled hamilton84GNP: 135 growth observations, 1951Q2 to 1984Q4") {
  const Dataset ds = load_bundled("hamilton84GNP");
  const Mat y = ds.growth_series();
  CHECK(y.rows() == 135);
  CHECK(ds.dates.front() == "1951-01-01");  // anchor level row
  CHECK(ds.dates[1] == "1951-04-01");       // first growth observation
  CHECK(ds.dates.back() == "1984-10-01");
  // first and last published growth values
  CHECK(y(0, 0) == doctest::Approx(2.59316421));
  CHECK(y(134, 0) == doctest::Approx(0.14802167));
}

TEST_CASE("load_bundled: unknown name rejected") {
  CHECK_THROWS_AS(load_bundled("nope"), validation_error);
}

TEST_CASE("load_csv: well-formed three-row file") {
  TempFile f("date,y\n2000-01-01,1.5\n2000-04-01,2.5\n2000-07-01,-3.25\n");
  CsvOptions opt;
  opt.date_col = "date";
  opt.value_col = "y";
  const LoadedSeries s = load_csv(f.path, opt);
  REQUIRE(s.values.size() == 3);
  CHECK(s.values[2] == doctest::Approx(-3.25));
  CHECK(s.dates.size() == 3);
  CHECK(s.warnings.empty());
}

TEST_CASE("load_csv: missing column and empty file are errors") {
  TempFile f("date,y\n2000-01-01,1.5\n");
  CsvOptions opt;
  opt.value_col = "z";
  CHECK_THROWS_AS(load_csv(f.path, opt), validation_error);

  TempFile empty("");
  opt.value_col = "y";
  CHECK_THROWS_AS(load_csv(empty.path, opt), validation_error);
}

TEST_CASE("load_csv: non-numeric cell names the row") {
  TempFile f("y\n1.0\nbad\n3.0\n");
  CsvOptions opt;
  opt.value_col = "y";
  try {
    load_csv(f.path, opt);
    FAIL("expected validation_error");
  } catch (const validation_error& e) {
    CHECK(std::string(e.what()).find("row 3") != std::string::npos);
  }
}

TEST_CASE("load_csv: non-monotone dates produce a warning") {
  TempFile f("date,y\n2001-01-01,1\n2000-01-01,2\n");
  CsvOptions opt;
  opt.date_col = "date";
  opt.value_col = "y";
  const LoadedSeries s = load_csv(f.path, opt);
  REQUIRE(!s.warnings.empty());
}

TEST_CASE("growth_rate: log identities") {
  Vec flat(2);
  flat << 100.0, 100.0;
  CHECK(growth_rate(flat)[0] == doctest::Approx(0.0));

  Vec one(2);
  one << 100.0, 100.0 * std::exp(0.01);
  CHECK(growth_rate(one)[0] == doctest::Approx(1.0).epsilon(1e-12));

  Vec ratio(4);
  ratio << 100.0, 110.0, 121.0, 133.1;
  const Vec g = growth_rate(ratio);
  CHECK(g[0] == doctest::Approx(g[1]).epsilon(1e-12));
  CHECK(g[1] == doctest::Approx(g[2]).epsilon(1e-12));

  Vec bad(2);
  bad << 1.0, -1.0;
  CHECK_THROWS_AS(growth_rate(bad), validation_error);
}

TEST_CASE("dataset CSV round trip") {
  const Dataset ds = load_bundled("USRGDP");
  const std::string path = std::string(std::tmpnam(nullptr)) + ".csv";
  write_dataset_csv(ds, path);

  CsvOptions opt;
  opt.date_col = "date";
  opt.value_col = "level";
  const LoadedSeries levels = load_csv(path, opt);
  REQUIRE(levels.values.size() == ds.levels.size());
  for (Eigen::Index t = 0; t < ds.levels.size(); ++t)
    CHECK(levels.values[t] == doctest::Approx(ds.levels[t]).epsilon(1e-12));
  CHECK(levels.dates == ds.dates);
  std::remove(path.c_str());
}
