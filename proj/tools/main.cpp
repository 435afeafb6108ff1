// regimetest command line: simulate / fit / test / data with JSON reports.
// Exit codes: 0 success, 2 validation error, 3 estimation failure,
// 4 test-procedure failure.

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

#include "regimetest/data.hpp"
#include "regimetest/dgp.hpp"
#include "regimetest/serialize.hpp"
#include "regimetest/test_lrt.hpp"
#include "regimetest/test_moments.hpp"
#include "regimetest/test_stability.hpp"
#include "regimetest/test_hlr.hpp"

namespace rt = regimetest;
using rt::json;

namespace {

constexpr std::uint64_t kDefaultSeed = 12345;

int resolve_workers(int flag_value) {
  if (flag_value > 0) return flag_value;
  if (const char* env = std::getenv("REGIMETEST_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

void emit_report(rt::RunReport& report, const std::string& out_path,
                 std::chrono::steady_clock::time_point started) {
  report.timing_sec =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  const json j = rt::report_to_json(report);
  rt::validate_report(j);
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
  } else {
    std::ofstream out(out_path);
    if (!out) throw rt::validation_error("cannot write report to " + out_path);
    out << j.dump(2) << "\n";
  }
}

// ---- matrix/json glue ------------------------------------------------

rt::Mat json_to_matrix(const json& v, const std::string& field) {
  try {
    if (v.is_number()) {
      return rt::Mat::Constant(1, 1, v.get<double>());
    }
    if (v.is_array() && !v.empty() && v[0].is_number()) {
      rt::Mat m(static_cast<int>(v.size()), 1);
      for (std::size_t i = 0; i < v.size(); ++i) m(static_cast<int>(i), 0) = v[i].get<double>();
      return m;
    }
    if (v.is_array() && !v.empty() && v[0].is_array()) {
      const int rows = static_cast<int>(v.size());
      const int cols = static_cast<int>(v[0].size());
      rt::Mat m(rows, cols);
      for (int r = 0; r < rows; ++r) {
        if (static_cast<int>(v[r].size()) != cols)
          throw rt::validation_error(field + ": ragged matrix");
        for (int c = 0; c < cols; ++c) m(r, c) = v[r][c].get<double>();
      }
      return m;
    }
  } catch (const json::exception&) {
  }
  throw rt::validation_error(field + ": expected a number, vector, or matrix");
}

json matrix_to_json(const rt::Mat& m) {
  json rows = json::array();
  for (int r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (int c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

rt::Mat read_input_matrix(const std::string& path, std::vector<std::string> cols,
                          std::vector<std::string>& warnings) {
  std::ifstream probe(path);
  if (!probe) throw rt::validation_error("cannot open input file " + path);
  std::string header;
  std::getline(probe, header);
  probe.close();

  std::vector<std::string> names;
  std::string cur;
  for (char ch : header) {
    if (ch == ',') {
      names.push_back(cur);
      cur.clear();
    } else if (ch != '\r') {
      cur += ch;
    }
  }
  names.push_back(cur);

  if (cols.empty()) {
    for (const auto& n : names)
      if (n != "date" && n != "state" && !n.empty()) cols.push_back(n);
    if (cols.empty()) throw rt::validation_error("no usable columns in " + path);
  }

  rt::Mat y;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    rt::CsvOptions opt;
    opt.value_col = cols[c];
    const rt::LoadedSeries s = rt::load_csv(path, opt);
    if (c == 0) y.resize(s.values.size(), static_cast<int>(cols.size()));
    if (s.values.size() != y.rows())
      throw rt::validation_error("column length mismatch in " + path);
    y.col(static_cast<int>(c)) = s.values;
    for (const auto& w : s.warnings) warnings.push_back(w);
  }
  return y;
}

// ---- simulate --------------------------------------------------------

struct SimulateArgs {
  std::string family;
  std::string config_path;
  std::string out_csv;
  std::uint64_t seed = kDefaultSeed;
  int n = -1;
  int burnin = -1;
  bool seed_given = false;
};

rt::DgpSpec parse_dgp(const SimulateArgs& args, json& echo) {
  json cfg = json::object();
  if (!args.config_path.empty()) {
    std::ifstream in(args.config_path);
    if (!in) throw rt::validation_error("cannot open config " + args.config_path);
    try {
      in >> cfg;
    } catch (const json::exception& e) {
      throw rt::validation_error(std::string("config parse error: ") + e.what());
    }
  }

  rt::DgpSpec spec;
  spec.family = rt::family_from_name(args.family);

  auto need = [&](const char* field) -> const json& {
    if (!cfg.contains(field))
      throw rt::validation_error(std::string("missing required field `") + field +
                                 "` for family " + args.family);
    return cfg.at(field);
  };

  spec.n = args.n > 0 ? args.n : need("n").get<int>();
  if (cfg.contains("q")) spec.q = cfg["q"].get<int>();
  if (cfg.contains("p")) spec.p = cfg["p"].get<int>();

  const bool switching = rt::family_is_switching(spec.family);
  if (switching) {
    spec.k = need("k").get<int>();
    if (spec.k >= 2) {
      const rt::Mat pm = json_to_matrix(need("P"), "P");
      spec.trans = rt::TransitionMatrix(spec.k, pm);
    }
  }

  rt::Mat mu = json_to_matrix(need("mu"), "mu");
  if (mu.rows() == 1 && mu.cols() == spec.k && spec.k > 1 && spec.q == 1)
    mu.transposeInPlace();
  if (mu.cols() != spec.q && mu.rows() == spec.q && mu.cols() == spec.k)
    mu.transposeInPlace();
  if (mu.rows() != std::max(spec.k, 1) || mu.cols() != spec.q) {
    if (mu.size() == spec.k * spec.q) {
      mu.resize(spec.k, spec.q);
    } else {
      throw rt::validation_error("mu: expected k x q values");
    }
  }
  spec.mu = mu;

  // sigma: scalar, k-vector of variances, one matrix, or k matrices
  const json& sig = need("sigma");
  spec.sigma.clear();
  if (sig.is_number()) {
    spec.sigma.assign(std::max(1, spec.k), rt::Mat::Constant(1, 1, sig.get<double>()));
  } else if (sig.is_array() && !sig.empty() && sig[0].is_number() && spec.q == 1) {
    for (const auto& v : sig) spec.sigma.push_back(rt::Mat::Constant(1, 1, v.get<double>()));
  } else if (sig.is_array() && !sig.empty() && sig[0].is_array() && sig[0][0].is_number()) {
    spec.sigma.assign(std::max(1, spec.k), json_to_matrix(sig, "sigma"));
  } else if (sig.is_array() && !sig.empty() && sig[0].is_array() && sig[0][0].is_array()) {
    for (const auto& m : sig) spec.sigma.push_back(json_to_matrix(m, "sigma"));
  } else {
    throw rt::validation_error("sigma: expected variance(s) or covariance matrix(es)");
  }

  if (cfg.contains("phi")) {
    const json& phi = cfg["phi"];
    spec.phi.clear();
    if (phi.is_number()) {
      spec.phi.push_back(rt::Mat::Constant(1, 1, phi.get<double>()));
    } else if (phi.is_array() && !phi.empty() && phi[0].is_number()) {
      if (spec.q == 1) {
        for (const auto& v : phi) spec.phi.push_back(rt::Mat::Constant(1, 1, v.get<double>()));
      } else {
        throw rt::validation_error("phi: multivariate lags must be matrices");
      }
    } else if (phi.is_array() && !phi.empty() && phi[0].is_array() && phi[0][0].is_number()) {
      spec.phi.push_back(json_to_matrix(phi, "phi"));
    } else if (phi.is_array()) {
      for (const auto& m : phi) spec.phi.push_back(json_to_matrix(m, "phi"));
    }
    if (spec.p == 0) spec.p = static_cast<int>(spec.phi.size());
  }
  if (static_cast<int>(spec.phi.size()) != spec.p)
    throw rt::validation_error("phi: expected p lag blocks");

  spec.burnin = args.burnin >= 0 ? args.burnin
                                 : (cfg.contains("burnin") ? cfg["burnin"].get<int>() : -1);
  if (cfg.contains("beta")) {
    spec.beta = json_to_matrix(cfg["beta"], "beta");
    if (!cfg.contains("exog_csv"))
      throw rt::validation_error("beta given without `exog_csv`");
  }
  if (cfg.contains("exog_csv")) {
    std::vector<std::string> warn;
    spec.exog = read_input_matrix(cfg["exog_csv"].get<std::string>(), {}, warn);
  }
  spec.seed = args.seed;

  echo["family"] = args.family;
  echo["n"] = spec.n;
  echo["q"] = spec.q;
  echo["p"] = spec.p;
  echo["k"] = spec.k;
  echo["burnin"] = spec.burnin;
  echo["mu"] = matrix_to_json(spec.mu);
  return spec;
}

int cmd_simulate(const SimulateArgs& args, const std::string& report_path) {
  const auto started = std::chrono::steady_clock::now();
  json echo = json::object();
  rt::DgpSpec spec = parse_dgp(args, echo);
  const rt::SimOutput sim = rt::simulate(spec);

  std::ofstream out(args.out_csv);
  if (!out) throw rt::validation_error("cannot write " + args.out_csv);
  out.precision(17);
  if (spec.q == 1) {
    out << "y,state\n";
  } else {
    for (int i = 0; i < spec.q; ++i) out << "y" << i + 1 << ",";
    out << "state\n";
  }
  for (int t = 0; t < sim.y.rows(); ++t) {
    for (int i = 0; i < spec.q; ++i) out << sim.y(t, i) << ",";
    out << sim.states.states[t] << "\n";
  }
  out.close();

  rt::RunReport report;
  report.command = "simulate";
  report.config = echo;
  report.seed = args.seed;
  report.workers = 1;
  if (sim.nonstationary) report.warnings.push_back("AR companion spectral radius >= 1");
  report.result = json::object({{"rows", sim.y.rows()},
                                {"columns", spec.q},
                                {"csv", args.out_csv}});
  emit_report(report, report_path, started);
  return 0;
}

// ---- fit ------------------------------------------------------------

struct FitArgs {
  std::string model = "msar";
  std::string input;
  std::vector<std::string> cols;
  int p = 0;
  int k = 2;
  std::string method = "em";
  int starts = 1;
  bool msmu = true;
  bool msvar = true;
  bool get_se = true;
  bool refine = false;
  int maxit = 500;
  double tol = 1e-8;
  std::uint64_t seed = kDefaultSeed;
  int workers = 0;
  std::string probs_path;
};

int cmd_fit(const FitArgs& args, const std::string& report_path) {
  const auto started = std::chrono::steady_clock::now();
  rt::RunReport report;
  report.command = "fit";
  report.seed = args.seed;
  report.workers = resolve_workers(args.workers);

  rt::Mat y = read_input_matrix(args.input, args.cols, report.warnings);

  rt::ModelFamily family = rt::family_from_name(args.model);
  int k = args.k;
  if (rt::family_is_switching(family) && k == 1) {
    // one-regime request for a switching family: estimate the nested
    // linear model instead
    report.warnings.push_back("k = 1 with family " + args.model +
                              "; fitting the linear counterpart");
    family = rt::family_for(static_cast<int>(y.cols()), args.p, 1);
  }
  if (!rt::family_is_switching(family)) k = 1;

  rt::ModelSpec spec;
  spec.family = family;
  spec.p = args.p;
  spec.q = static_cast<int>(y.cols());
  spec.k = k;
  spec.msmu = args.msmu;
  spec.msvar = args.msvar;

  rt::FittedModel fm;
  if (k == 1) {
    fm = rt::fit_linear(y, spec, args.get_se);
  } else {
    rt::EstimOptions opt;
    opt.msmu = args.msmu;
    opt.msvar = args.msvar;
    opt.method = args.method == "mle" ? rt::EstimOptions::Method::MLE
                                      : rt::EstimOptions::Method::EM;
    opt.use_diff_init = args.starts;
    opt.maxit = args.maxit;
    opt.tol = args.tol;
    opt.get_se = false;
    opt.mle_refine = args.refine;
    opt.seed = args.seed;
    opt.workers = report.workers;
    fm = rt::fit_switching(y, spec, opt);
    if (args.get_se) rt::standard_errors(y, fm);
  }

  if (!args.probs_path.empty() && fm.smoothed.xi_smoothed.size() > 0) {
    std::ofstream out(args.probs_path);
    if (!out) throw rt::validation_error("cannot write " + args.probs_path);
    out.precision(17);
    for (int j = 0; j < fm.smoothed.xi_smoothed.cols(); ++j)
      out << (j ? "," : "") << "regime" << j + 1;
    out << "\n";
    for (int t = 0; t < fm.smoothed.xi_smoothed.rows(); ++t) {
      for (int j = 0; j < fm.smoothed.xi_smoothed.cols(); ++j)
        out << (j ? "," : "") << fm.smoothed.xi_smoothed(t, j);
      out << "\n";
    }
  }

  report.config = json::object({{"model", args.model},
                                {"p", args.p},
                                {"k", k},
                                {"method", args.method},
                                {"starts", args.starts},
                                {"msmu", args.msmu},
                                {"msvar", args.msvar},
                                {"maxit", args.maxit},
                                {"tol", args.tol},
                                {"input", args.input}});
  report.result = rt::fitted_to_json(fm);
  for (const auto& w : fm.warnings) report.warnings.push_back(w);
  emit_report(report, report_path, started);
  return 0;
}

// ---- test -----------------------------------------------------------

struct TestCommon {
  std::string input;
  std::vector<std::string> cols;
  int p = 1;
  int n_reps = 99;
  std::uint64_t seed = kDefaultSeed;
  int workers = 0;
  std::string config_path;
};

json load_extra_config(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw rt::validation_error("cannot open config " + path);
  json cfg;
  try {
    in >> cfg;
  } catch (const json::exception& e) {
    throw rt::validation_error(std::string("config parse error: ") + e.what());
  }
  return cfg;
}

void finish_test_report(rt::RunReport& report, const rt::TestResult& res,
                        const std::string& report_path,
                        std::chrono::steady_clock::time_point started) {
  report.result = rt::testresult_to_json(res);
  for (const auto& w : res.warnings) report.warnings.push_back(w);
  emit_report(report, report_path, started);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"regime-count testing for Markov switching time series models"};
  app.require_subcommand(1);

  std::string report_path;
  app.add_option("--out", report_path, "write the JSON report here instead of stdout")
      ->capture_default_str();

  // ---- simulate ----
  SimulateArgs sim_args;
  auto* sim = app.add_subcommand("simulate", "simulate a process to CSV");
  sim->add_option("--family", sim_args.family, "model family")->required();
  sim->add_option("--config", sim_args.config_path, "JSON file with DGP values");
  sim->add_option("--out", sim_args.out_csv, "output CSV path")->required();
  sim->add_option("--seed", sim_args.seed, "RNG seed");
  sim->add_option("--n", sim_args.n, "sample size (overrides config)");
  sim->add_option("--burnin", sim_args.burnin, "burn-in (overrides config)");

  // ---- fit ----
  FitArgs fit_args;
  auto* fit = app.add_subcommand("fit", "estimate a model from CSV input");
  fit->add_option("--model", fit_args.model, "model family")->required();
  fit->add_option("--input", fit_args.input, "input CSV")->required();
  fit->add_option("--col", fit_args.cols, "input column name (repeatable)");
  fit->add_option("--p", fit_args.p, "lag order");
  fit->add_option("--k", fit_args.k, "regime count");
  fit->add_option("--method", fit_args.method, "em or mle")
      ->check(CLI::IsMember({"em", "mle"}));
  fit->add_option("--starts", fit_args.starts, "number of random starts");
  fit->add_flag("--msmu,!--no-msmu", fit_args.msmu, "regime-switching mean");
  fit->add_flag("--msvar,!--no-msvar", fit_args.msvar, "regime-switching variance");
  fit->add_flag("--se,!--no-se", fit_args.get_se, "report standard errors");
  fit->add_flag("--refine-mle", fit_args.refine, "polish the EM fit with MLE");
  fit->add_option("--maxit", fit_args.maxit, "iteration cap");
  fit->add_option("--tol", fit_args.tol, "convergence tolerance");
  fit->add_option("--seed", fit_args.seed, "RNG seed");
  fit->add_option("--workers", fit_args.workers, "parallel workers");
  fit->add_option("--probs", fit_args.probs_path, "write smoothed probabilities CSV");

  // ---- test ----
  auto* test = app.add_subcommand("test", "hypothesis tests for the number of regimes");
  test->require_subcommand(1);

  TestCommon tc;
  auto add_common = [&](CLI::App* sub, bool with_n = true) {
    sub->add_option("--input", tc.input, "input CSV")->required();
    sub->add_option("--col", tc.cols, "input column name (repeatable)");
    sub->add_option("--p", tc.p, "lag order");
    if (with_n) sub->add_option("--N", tc.n_reps, "Monte Carlo replications");
    sub->add_option("--seed", tc.seed, "RNG seed");
    sub->add_option("--workers", tc.workers, "parallel workers");
    sub->add_option("--config", tc.config_path, "extra JSON config");
  };

  // lmc-lrt / mmc-lrt
  int k0 = 1, k1 = 2, starts = 5, starts_sim = -1;
  bool lrt_msmu = true, lrt_msvar = true;
  std::string lrt_method = "em";
  double trans_prob_eps = -1.0, var_lower = -1.0;
  auto* lmc = test->add_subcommand("lmc-lrt", "local Monte Carlo likelihood ratio test");
  add_common(lmc);
  lmc->add_option("--k0", k0, "regimes under the null");
  lmc->add_option("--k1", k1, "regimes under the alternative");
  lmc->add_option("--starts", starts, "initial values for the alternative fit");
  lmc->add_option("--starts-sim", starts_sim, "starts inside replications");
  lmc->add_flag("--msmu,!--no-msmu", lrt_msmu, "switching mean");
  lmc->add_flag("--msvar,!--no-msvar", lrt_msvar, "switching variance");
  lmc->add_option("--method", lrt_method, "estimation method for the alternative")
      ->check(CLI::IsMember({"em", "mle"}));
  lmc->add_option("--trans-prob-eps", trans_prob_eps,
                  "bootstrap emulation: transition probabilities in [eps, 1-eps]");
  lmc->add_option("--var-lower", var_lower, "bootstrap emulation: variance lower bound");

  double mmc_eps = 0.0, threshold_stop = -1.0;
  bool ci_union = true;
  std::string optimizer = "pso";
  int mmc_maxit = 100;
  auto* mmc = test->add_subcommand("mmc-lrt", "maximized Monte Carlo likelihood ratio test");
  add_common(mmc);
  mmc->add_option("--k0", k0, "regimes under the null");
  mmc->add_option("--k1", k1, "regimes under the alternative");
  mmc->add_option("--starts", starts, "initial values for the alternative fit");
  mmc->add_option("--starts-sim", starts_sim, "starts inside replications");
  mmc->add_flag("--msmu,!--no-msmu", lrt_msmu, "switching mean");
  mmc->add_flag("--msvar,!--no-msvar", lrt_msvar, "switching variance");
  mmc->add_option("--eps", mmc_eps, "fixed-radius box half-width");
  mmc->add_flag("--ci-union,!--no-ci-union", ci_union, "union with the 2-s.e. box");
  mmc->add_option("--optimizer", optimizer, "pso or sa")
      ->check(CLI::IsMember({"pso", "sa"}));
  mmc->add_option("--threshold-stop", threshold_stop, "early-exit p-value");
  mmc->add_option("--maxit", mmc_maxit, "search evaluation budget");

  // dl-mc / dl-mmc
  int n2 = 10000;
  double phi_bound = 0.99;
  auto* dlmc = test->add_subcommand("dl-mc", "moment-based local Monte Carlo test");
  add_common(dlmc);
  dlmc->add_option("--N2", n2, "stage-1 replications");

  auto* dlmmc = test->add_subcommand("dl-mmc", "moment-based maximized Monte Carlo test");
  add_common(dlmmc);
  dlmmc->add_option("--N2", n2, "stage-1 replications");
  dlmmc->add_option("--eps", mmc_eps, "fixed-radius box half-width");
  dlmmc->add_flag("--ci-union,!--no-ci-union", ci_union, "union with the 2-s.e. box");
  dlmmc->add_option("--optimizer", optimizer, "pso or sa")
      ->check(CLI::IsMember({"pso", "sa"}));
  dlmmc->add_option("--threshold-stop", threshold_stop, "early-exit p-value");
  dlmmc->add_option("--maxit", mmc_maxit, "search evaluation budget");
  dlmmc->add_option("--phi-bound", phi_bound, "AR coefficient search bound");

  // chp
  double rho_b = 0.7;
  bool chp_msvar = false;
  int rho_grid = 20, h_grid = 20, chp_n = 3000;
  auto* chp = test->add_subcommand("chp", "parameter stability test");
  add_common(chp, false);
  chp->add_option("--N", chp_n, "bootstrap replications");
  chp->add_option("--rho-b", rho_b, "bound for the latent autocorrelation");
  chp->add_flag("--msvar", chp_msvar, "include the variance direction");
  chp->add_option("--rho-grid", rho_grid, "rho grid size");
  chp->add_option("--h-grid", h_grid, "direction grid size");

  // hlr
  bool hlr_msvar = false;
  int gridsize = 10, n_sim = 1000;
  double mugrid_from = rt::kNaN, mugrid_by = rt::kNaN;
  double siggrid_from = rt::kNaN, siggrid_by = rt::kNaN;
  std::vector<double> pgrid;
  std::vector<double> theta_low, theta_upp;
  auto* hlr = test->add_subcommand("hlr", "standardized likelihood ratio bound test");
  add_common(hlr, false);
  hlr->add_flag("--msvar", hlr_msvar, "second-regime variance grid");
  hlr->add_option("--gridsize", gridsize, "points per nuisance grid");
  hlr->add_option("--mugrid-from", mugrid_from, "mu2 grid origin");
  hlr->add_option("--mugrid-by", mugrid_by, "mu2 grid step");
  hlr->add_option("--siggrid-from", siggrid_from, "sigma2 grid origin");
  hlr->add_option("--siggrid-by", siggrid_by, "sigma2 grid step");
  hlr->add_option("--pgrid", pgrid, "transition probability grid values");
  hlr->add_option("--n-sim", n_sim, "bound simulation draws");
  hlr->add_option("--theta-low", theta_low, "restricted-parameter lower bounds");
  hlr->add_option("--theta-upp", theta_upp, "restricted-parameter upper bounds");

  // ---- data ----
  auto* data = app.add_subcommand("data", "bundled datasets");
  data->require_subcommand(1);
  auto* data_list = data->add_subcommand("list", "list bundled datasets");
  std::string ds_name, ds_out;
  auto* data_export = data->add_subcommand("export", "write a bundled dataset to CSV");
  data_export->add_option("--name", ds_name, "dataset name")->required();
  data_export->add_option("--out", ds_out, "output CSV path")->required();

  try {
    app.parse(argc, argv);

    const auto started = std::chrono::steady_clock::now();

    if (*sim) return cmd_simulate(sim_args, report_path);
    if (*fit) return cmd_fit(fit_args, report_path);

    if (*data_list) {
      rt::RunReport report;
      report.command = "data list";
      report.config = json::object();
      report.seed = 0;
      json list = json::array();
      for (const auto& name : rt::dataset_names()) {
        const rt::Dataset ds = rt::load_bundled(name);
        list.push_back(json::object({{"name", name},
                                     {"rows", ds.dates.size()},
                                     {"first", ds.dates.front()},
                                     {"last", ds.dates.back()}}));
      }
      report.result = json::object({{"datasets", list}});
      emit_report(report, report_path, started);
      return 0;
    }
    if (*data_export) {
      const rt::Dataset ds = rt::load_bundled(ds_name);
      rt::write_dataset_csv(ds, ds_out);
      rt::RunReport report;
      report.command = "data export";
      report.config = json::object({{"name", ds_name}});
      report.seed = 0;
      report.result = json::object({{"csv", ds_out}, {"rows", ds.dates.size()}});
      emit_report(report, report_path, started);
      return 0;
    }

    // test subcommands
    rt::RunReport report;
    rt::Mat y = read_input_matrix(tc.input, tc.cols, report.warnings);
    const json extra = load_extra_config(tc.config_path);

    // precedence: explicit flags > config file > defaults
    CLI::App* active = *lmc    ? static_cast<CLI::App*>(lmc)
                       : *mmc  ? mmc
                       : *dlmc ? dlmc
                       : *dlmmc ? dlmmc
                       : *chp  ? chp
                                : hlr;
    auto merge_int = [&](const char* key, const char* flag, int& target) {
      if (extra.contains(key) && active->count(flag) == 0) target = extra[key].get<int>();
    };
    auto merge_dbl = [&](const char* key, const char* flag, double& target) {
      if (extra.contains(key) && active->count(flag) == 0) target = extra[key].get<double>();
    };
    auto merge_bool = [&](const char* key, const char* flag, bool& target) {
      if (extra.contains(key) && active->count(flag) == 0) target = extra[key].get<bool>();
    };
    if (*chp) {
      merge_int("N", "--N", chp_n);
    } else {
      merge_int("N", "--N", tc.n_reps);
    }
    merge_int("N2", "--N2", n2);
    merge_int("k0", "--k0", k0);
    merge_int("k1", "--k1", k1);
    merge_int("starts", "--starts", starts);
    merge_int("maxit", "--maxit", mmc_maxit);
    merge_int("gridsize", "--gridsize", gridsize);
    merge_int("n_sim", "--n-sim", n_sim);
    merge_int("workers", "--workers", tc.workers);
    merge_dbl("eps", "--eps", mmc_eps);
    merge_dbl("threshold_stop", "--threshold-stop", threshold_stop);
    merge_dbl("rho_b", "--rho-b", rho_b);
    merge_bool("CI_union", "--ci-union", ci_union);

    report.seed = tc.seed;
    report.workers = resolve_workers(tc.workers);

    if (*lmc || *mmc) {
      rt::LRTestConfig config;
      config.n_reps = tc.n_reps;
      config.p = tc.p;
      config.k0 = k0;
      config.k1 = k1;
      config.seed = tc.seed;
      config.workers = report.workers;
      config.mdl_h0_options.use_diff_init = k0 == 1 ? 1 : starts;
      config.mdl_h0_options.seed = rt::derive_stream(tc.seed, 1);
      config.mdl_h1_options.use_diff_init = starts;
      config.mdl_h1_options.msmu = lrt_msmu;
      config.mdl_h1_options.msvar = lrt_msvar;
      config.mdl_h1_options.method = lrt_method == "mle" ? rt::EstimOptions::Method::MLE
                                                         : rt::EstimOptions::Method::EM;
      config.mdl_h1_options.seed = rt::derive_stream(tc.seed, 2);
      config.use_diff_init_sim = starts_sim;
      if (trans_prob_eps >= 0.0) config.trans_prob_eps = trans_prob_eps;
      if (var_lower >= 0.0) config.var_lower = var_lower;

      json cfg_echo = json::object({{"N", config.n_reps},
                                    {"p", config.p},
                                    {"k0", k0},
                                    {"k1", k1},
                                    {"starts", starts},
                                    {"starts_sim", starts_sim},
                                    {"msmu", lrt_msmu},
                                    {"msvar", lrt_msvar},
                                    {"method", lrt_method},
                                    {"input", tc.input}});

      if (*lmc) {
        report.command = "test lmc-lrt";
        report.config = cfg_echo;
        finish_test_report(report, rt::lmc_lrt(y, config), report_path, started);
      } else {
        rt::MMCOptions opts;
        opts.eps = mmc_eps;
        opts.ci_union = ci_union;
        opts.optimizer = optimizer == "sa" ? rt::MMCOptions::Optimizer::SA
                                           : rt::MMCOptions::Optimizer::PSO;
        if (threshold_stop >= 0.0) opts.threshold_stop = threshold_stop;
        opts.maxit = mmc_maxit;
        cfg_echo["eps"] = mmc_eps;
        cfg_echo["ci_union"] = ci_union;
        cfg_echo["optimizer"] = optimizer;
        cfg_echo["maxit"] = mmc_maxit;
        report.command = "test mmc-lrt";
        report.config = cfg_echo;
        finish_test_report(report, rt::mmc_lrt(y, config, opts), report_path, started);
      }
      return 0;
    }

    if (*dlmc || *dlmmc) {
      rt::DLConfig config;
      config.n_reps = tc.n_reps;
      config.n2 = n2;
      config.p = tc.p;
      config.seed = tc.seed;
      config.workers = report.workers;
      config.eps = mmc_eps;
      config.ci_union = ci_union;
      config.optimizer = optimizer == "pso" ? rt::DLConfig::Optimizer::PSO
                                            : rt::DLConfig::Optimizer::SA;
      if (threshold_stop >= 0.0) config.threshold_stop = threshold_stop;
      config.maxit = mmc_maxit;
      config.phi_bound = phi_bound;

      report.config = json::object({{"N", config.n_reps},
                                    {"N2", config.n2},
                                    {"p", config.p},
                                    {"input", tc.input}});
      if (*dlmc) {
        report.command = "test dl-mc";
        finish_test_report(report, rt::dlmc_test(y, config), report_path, started);
      } else {
        report.command = "test dl-mmc";
        report.config["eps"] = mmc_eps;
        report.config["ci_union"] = ci_union;
        report.config["optimizer"] = optimizer;
        finish_test_report(report, rt::dlmmc_test(y, config), report_path, started);
      }
      return 0;
    }

    if (*chp) {
      rt::CHPConfig config;
      config.n_boot = chp_n;
      config.rho_b = rho_b;
      config.msvar = chp_msvar;
      config.rho_grid_size = rho_grid;
      config.h_grid_size = h_grid;
      config.seed = tc.seed;
      config.workers = report.workers;
      report.command = "test chp";
      report.config = json::object({{"N", chp_n},
                                    {"rho_b", rho_b},
                                    {"msvar", chp_msvar},
                                    {"p", tc.p},
                                    {"input", tc.input}});
      finish_test_report(report, rt::chp_test(y, tc.p, config), report_path, started);
      return 0;
    }

    if (*hlr) {
      rt::HansenConfig config;
      config.p = tc.p;
      config.msvar = hlr_msvar;
      config.gridsize = gridsize;
      if (std::isfinite(mugrid_from)) config.mugrid_from = mugrid_from;
      if (std::isfinite(mugrid_by)) config.mugrid_by = mugrid_by;
      if (std::isfinite(siggrid_from)) config.siggrid_from = siggrid_from;
      if (std::isfinite(siggrid_by)) config.siggrid_by = siggrid_by;
      config.pgrid = pgrid;
      config.n_sim = n_sim;
      config.seed = tc.seed;
      config.workers = report.workers;
      if (!theta_low.empty()) {
        config.theta_null_low =
            Eigen::Map<rt::Vec>(theta_low.data(), static_cast<Eigen::Index>(theta_low.size()));
        config.theta_null_upp =
            Eigen::Map<rt::Vec>(theta_upp.data(), static_cast<Eigen::Index>(theta_upp.size()));
      }
      report.command = "test hlr";
      report.config = json::object({{"p", tc.p},
                                    {"msvar", hlr_msvar},
                                    {"gridsize", gridsize},
                                    {"n_sim", n_sim},
                                    {"input", tc.input}});
      finish_test_report(report, rt::hlr_test(y, config), report_path, started);
      return 0;
    }

    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help and friends
    app.exit(e);
    return 2;
  } catch (const rt::validation_error& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const rt::estimation_error& e) {
    std::cerr << "estimation error: " << e.what() << "\n";
    return 3;
  } catch (const rt::test_error& e) {
    std::cerr << "test error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
