// Command-line front end: analyze, sweep, validate, fair-pm.
//
// Exit codes: 0 success, 1 invalid input, 2 numerical failure.

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hetnet/config_io.hpp"
#include "hetnet/errors.hpp"
#include "hetnet/report.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kNumerical = 2;

struct Common {
  std::string config_path;
  std::string out_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
  std::uint64_t mc_trials = 0;
  bool quiet = false;
};

hetnet::ScenarioConfig load_config(const Common& c) {
  auto cfg = c.config_path.empty() ? hetnet::ScenarioConfig{} : hetnet::load_scenario_file(c.config_path);
  if (c.seed_set) cfg.seed = c.seed;
  cfg.validate();
  return cfg;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw hetnet::ValidationError("config", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes to --out if given, else stdout.
void emit(const Common& c, const std::string& text) {
  if (c.out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(c.out_path, std::ios::binary);
  if (!out) throw hetnet::ValidationError("out", "cannot open " + c.out_path + " for writing");
  out << text;
  if (!out) throw hetnet::ValidationError("out", "write failed for " + c.out_path);
}

void note(const Common& c, const std::string& msg) {
  if (!c.quiet) std::cerr << msg << '\n';
}

int run_analyze(const Common& c) {
  const auto cfg = load_config(c);
  hetnet::RunOptions opts;
  if (c.mc_trials > 0) {
    opts.with_montecarlo = true;
    opts.montecarlo.trials = c.mc_trials;
    opts.montecarlo.seed = cfg.seed;
  }
  const auto rep = hetnet::run_scenario(cfg, opts);
  emit(c, hetnet::report_to_json(rep) + "\n");
  return kOk;
}

int run_sweep(const Common& c, const std::string& variable, const std::vector<double>& values) {
  const auto cfg = load_config(c);
  hetnet::SweepSpec spec;
  if (!variable.empty()) {
    spec.variable = hetnet::parse_sweep_variable(variable);
    spec.values = values;
  } else if (!c.config_path.empty()) {
    auto from_file = hetnet::parse_sweep_json(read_file(c.config_path));
    if (!from_file) throw hetnet::ValidationError("sweep", "no sweep block in config and no --variable");
    spec = *from_file;
  } else {
    throw hetnet::ValidationError("sweep", "give --variable/--values or a config with a sweep block");
  }
  spec.validate();
  const auto rows = hetnet::run_sweep(cfg, spec);
  std::ostringstream csv;
  hetnet::write_sweep_csv(csv, spec, rows);
  emit(c, csv.str());
  std::size_t failed = 0;
  for (const auto& r : rows) failed += r.ok ? 0 : 1;
  note(c, std::to_string(rows.size()) + " sweep points, " + std::to_string(failed) + " failed");
  return kOk;
}

int run_validate(const Common& c, int temporal_cells, double temporal_minutes) {
  const auto cfg = load_config(c);
  const auto rep = hetnet::run_scenario(cfg);
  std::vector<double> betas = {0.1, cfg.beta, 10.0};
  std::sort(betas.begin(), betas.end());
  betas.erase(std::unique(betas.begin(), betas.end()), betas.end());

  hetnet::OutageOptions mc;
  mc.trials = c.mc_trials > 0 ? c.mc_trials : 100'000;
  mc.seed = cfg.seed;
  mc.thresholds = betas;
  const auto sim = hetnet::simulate_outage(
      hetnet::OutageScenario::from_config(cfg, rep.load.zeta_center, rep.load.zeta_edge), mc);
  const auto model = cfg.coverage_model();

  std::ostringstream csv;
  csv << "quantity,class,beta,analytic,simulated,std_error,abs_diff\n";
  auto row = [&](const char* q, const char* cls, double beta, double a, const hetnet::SimEstimate& s) {
    csv << q << ',' << cls << ',' << (std::isnan(beta) ? std::string() : hetnet::format_number(beta))
        << ',' << hetnet::format_number(a) << ',' << hetnet::format_number(s.mean) << ','
        << hetnet::format_number(s.std_error) << ',' << hetnet::format_number(std::abs(a - s.mean))
        << '\n';
  };
  for (std::size_t i = 0; i < betas.size(); ++i) {
    const double b = betas[i];
    row("outage", "ccu", b, 1.0 - hetnet::ccu_coverage(model, b, rep.load.zeta_center),
        sim.ccu_outage[i]);
    row("outage", "ceu", b,
        1.0 - hetnet::ceu_coverage(model, b, rep.load.zeta_edge, cfg.series_options()),
        sim.ceu_outage[i]);
  }
  row("ccu_fraction", "ccu", NAN, cfg.region * cfg.region, sim.ccu_fraction);
  if (temporal_cells > 0) {
    hetnet::TemporalOptions t;
    t.cells = temporal_cells;
    t.sim_minutes = temporal_minutes;
    t.seed = cfg.seed;
    const auto ts = hetnet::simulate_temporal(cfg, rep.load, t);
    if (!ts.stationary) note(c, "warning: temporal run looks non-stationary (drift z = " +
                                    hetnet::format_number(ts.drift_z) + ")");
    row("activity", "ccu", NAN, rep.load.zeta_center, ts.activity_center);
    row("activity", "ceu", NAN, rep.load.zeta_edge, ts.activity_edge);
    row("blocking", "ccu", NAN, rep.blocking.b_ccu, ts.blocking_center);
    row("blocking", "ceu", NAN, rep.blocking.b_ceu, ts.blocking_edge);
  }
  emit(c, csv.str());
  return kOk;
}

int run_fair_pm(const Common& c, const hetnet::FairPmOptions& opts) {
  const auto cfg = load_config(c);
  const auto r = hetnet::fair_pm_search(cfg, opts);
  std::ostringstream csv;
  csv << "p_m,blocking_ccu,blocking_ceu,abs_gap,evaluations\n"
      << hetnet::format_number(r.p_m) << ',' << hetnet::format_number(r.b_ccu) << ','
      << hetnet::format_number(r.b_ceu) << ',' << hetnet::format_number(std::abs(r.b_ccu - r.b_ceu))
      << ',' << r.iterations << '\n';
  emit(c, csv.str());
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Load-aware coverage, blocking and energy efficiency of two-tier cellular networks"};
  app.require_subcommand(1);
  Common common;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", common.config_path, "Scenario JSON file");
    sub->add_option("--out", common.out_path, "Output file (default: stdout)");
    sub->add_option_function<std::uint64_t>(
        "--seed", [&](const std::uint64_t& s) { common.seed = s; common.seed_set = true; },
        "Override the scenario seed");
    sub->add_option("--mc-trials", common.mc_trials, "Monte-Carlo trials");
    sub->add_flag("--quiet", common.quiet, "Suppress progress messages");
  };

  auto* analyze = app.add_subcommand("analyze", "Analyze one scenario; prints a JSON report");
  add_common(analyze);

  auto* sweep = app.add_subcommand("sweep", "Sweep one parameter; writes CSV");
  add_common(sweep);
  std::string variable;
  std::vector<double> values;
  sweep->add_option("--variable", variable, "lambda_m_per_min_m2 | lambda_f_per_m2 | p_m | beta");
  sweep->add_option("--values", values, "Sweep values")->delimiter(',');

  auto* validate = app.add_subcommand("validate", "Monte-Carlo vs analytic side by side; writes CSV");
  add_common(validate);
  int temporal_cells = 0;
  double temporal_minutes = 200.0;
  validate->add_option("--temporal-cells", temporal_cells, "Cells for the traffic simulation (0 = skip)");
  validate->add_option("--temporal-minutes", temporal_minutes, "Simulated minutes per cell");

  auto* fair = app.add_subcommand("fair-pm", "Find p_m that equalizes center and edge blocking");
  add_common(fair);
  hetnet::FairPmOptions fair_opts;
  fair->add_option("--tol", fair_opts.target_tol, "Target |b_ccu - b_ceu|");
  fair->add_option("--lo", fair_opts.lo, "Lower end of the p_m bracket");
  fair->add_option("--hi", fair_opts.hi, "Upper end of the p_m bracket");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (*analyze) return run_analyze(common);
    if (*sweep) return run_sweep(common, variable, values);
    if (*validate) return run_validate(common, temporal_cells, temporal_minutes);
    if (*fair) return run_fair_pm(common, fair_opts);
  } catch (const hetnet::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kInvalid;
  } catch (const hetnet::NumericalError& e) {
    std::cerr << "numerical failure in " << e.stage() << ": " << e.what() << '\n';
    return kNumerical;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  }
  return kInvalid;
}
