#include "regimetest/serialize.hpp"

#include <algorithm>
#include <cmath>

namespace regimetest {

namespace {

json finite_or_null(double v) {
  if (std::isfinite(v)) return v;
  return nullptr;
}

json quantile_summary(const Mat& resid) {
  json out = json::array();
  for (int i = 0; i < resid.cols(); ++i) {
    std::vector<double> col(resid.rows());
    for (int t = 0; t < resid.rows(); ++t) col[t] = resid(t, i);
    std::sort(col.begin(), col.end());
    json row;
    row["min"] = col.front();
    row["q1"] = empirical_quantile(col, 0.25);
    row["median"] = empirical_quantile(col, 0.5);
    row["q3"] = empirical_quantile(col, 0.75);
    row["max"] = col.back();
    out.push_back(row);
  }
  return out;
}

}  // namespace

json fitted_to_json(const FittedModel& fm) {
  json out;
  out["family"] = family_name(fm.spec.family);
  out["p"] = fm.spec.p;
  out["q"] = fm.spec.q;
  out["k"] = fm.spec.k;
  out["msmu"] = fm.spec.msmu;
  out["msvar"] = fm.spec.msvar;

  json coefs = json::array();
  for (Eigen::Index i = 0; i < fm.theta.size(); ++i) {
    json c;
    c["name"] = i < static_cast<Eigen::Index>(fm.names.size())
                    ? fm.names[static_cast<std::size_t>(i)]
                    : ("theta_" + std::to_string(i));
    c["value"] = fm.theta[i];
    if (fm.se && i < fm.se->size()) c["se"] = finite_or_null((*fm.se)[i]);
    coefs.push_back(c);
  }
  out["coefficients"] = coefs;
  out["loglik"] = finite_or_null(fm.loglik);
  out["aic"] = finite_or_null(fm.aic);
  out["bic"] = finite_or_null(fm.bic);
  out["t_effective"] = fm.t_effective;
  out["converged"] = fm.converged;
  if (fm.residuals.size() > 0) out["residual_quantiles"] = quantile_summary(fm.residuals);
  if (!fm.warnings.empty()) out["warnings"] = fm.warnings;
  out["n_starts"] = fm.trace.size();
  return out;
}

json testresult_to_json(const TestResult& res) {
  json out;
  out["procedure"] = res.procedure;
  json rows = json::array();
  for (const TestRow& row : res.rows) {
    json r;
    r["label"] = row.label;
    r["stat"] = finite_or_null(row.stat);
    json q;
    q["0.90"] = finite_or_null(row.quantiles[0]);
    q["0.95"] = finite_or_null(row.quantiles[1]);
    q["0.99"] = finite_or_null(row.quantiles[2]);
    r["quantiles"] = q;
    r["pvalue"] = finite_or_null(row.pvalue);
    if (!row.details.empty()) {
      json d;
      for (const auto& [k, v] : row.details) d[k] = finite_or_null(v);
      r["details"] = d;
    }
    rows.push_back(r);
  }
  out["rows"] = rows;
  out["seed"] = res.seed;
  out["converged"] = res.converged;
  if (res.fit0) out["fit0"] = fitted_to_json(*res.fit0);
  if (res.fit1) out["fit1"] = fitted_to_json(*res.fit1);
  if (res.argmax) {
    json a = json::array();
    for (Eigen::Index i = 0; i < res.argmax->size(); ++i) a.push_back((*res.argmax)[i]);
    out["argmax"] = a;
  }
  if (!res.warnings.empty()) out["warnings"] = res.warnings;
  return out;
}

json report_to_json(const RunReport& report) {
  json out;
  out["schema_version"] = report.schema_version;
  out["command"] = report.command;
  out["config"] = report.config;
  out["seed"] = report.seed;
  out["workers"] = report.workers;
  out["timing_sec"] = report.timing_sec;
  out["warnings"] = report.warnings;
  out["result"] = report.result;
  return out;
}

void validate_report(const json& report) {
  static const std::vector<std::pair<const char*, json::value_t>> required = {
      {"schema_version", json::value_t::number_integer},
      {"command", json::value_t::string},
      {"config", json::value_t::object},
      {"seed", json::value_t::number_unsigned},
      {"workers", json::value_t::number_integer},
      {"timing_sec", json::value_t::number_float},
      {"warnings", json::value_t::array},
      {"result", json::value_t::object},
  };
  for (const auto& [key, type] : required) {
    if (!report.contains(key))
      throw validation_error(std::string("report missing key: ") + key);
    const auto& v = report.at(key);
    const bool numeric_ok =
        (type == json::value_t::number_integer || type == json::value_t::number_unsigned ||
         type == json::value_t::number_float) &&
        v.is_number();
    if (!numeric_ok && v.type() != type)
      throw validation_error(std::string("report key has wrong type: ") + key);
  }
  if (report["schema_version"].get<int>() != 1)
    throw validation_error("unsupported report schema version");
}

}  // namespace regimetest
