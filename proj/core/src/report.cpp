#include "hetnet/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "hetnet/errors.hpp"
#include "hetnet/parallel.hpp"

namespace hetnet {
namespace {

template <class Fn>
auto staged(const char* stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const NumericalError& e) {
    throw NumericalError(stage, e.what());
  }
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(line);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!line.empty() && line.back() == sep) out.emplace_back();
  return out;
}

}  // namespace

ScenarioReport run_scenario(const ScenarioConfig& config, const RunOptions& opts) {
  config.validate();
  ScenarioReport rep;
  rep.config = config;
  rep.load = staged("load", [&] { return solve_fixed_point(config); });
  const auto model = config.coverage_model();
  staged("coverage", [&] {
    rep.coverage_ccu = ccu_coverage(model, config.beta, rep.load.zeta_center);
    rep.coverage_ceu =
        ceu_coverage(model, config.beta, rep.load.zeta_edge, config.series_options());
    return 0;
  });
  rep.blocking = staged("blocking", [&] { return network_blocking(config, rep.load); });
  rep.energy = staged("energy", [&] { return energy_efficiency(config, rep.load, rep.blocking); });
  if (opts.with_montecarlo) {
    rep.montecarlo = staged("montecarlo", [&] {
      auto mc = opts.montecarlo;
      if (mc.thresholds.empty()) mc.thresholds = {config.beta};
      return simulate_outage(
          OutageScenario::from_config(config, rep.load.zeta_center, rep.load.zeta_edge), mc);
    });
  }
  return rep;
}

const char* sweep_column(SweepVariable v) {
  switch (v) {
    case SweepVariable::kLambdaM: return "lambda_m_per_min_m2";
    case SweepVariable::kLambdaF: return "lambda_f_per_m2";
    case SweepVariable::kPm: return "p_m";
    case SweepVariable::kBeta: return "beta";
  }
  return "value";
}

SweepVariable parse_sweep_variable(const std::string& name) {
  if (name == "lambda_m_per_min_m2" || name == "lambda_m") return SweepVariable::kLambdaM;
  if (name == "lambda_f_per_m2" || name == "lambda_f") return SweepVariable::kLambdaF;
  if (name == "p_m") return SweepVariable::kPm;
  if (name == "beta") return SweepVariable::kBeta;
  throw ValidationError("sweep.variable", "unknown sweep variable '" + name + "'");
}

const std::vector<std::string>& sweep_output_columns() {
  static const std::vector<std::string> cols = {
      "zeta_center",  "zeta_edge",    "coverage_ccu",     "coverage_ceu",
      "blocking_ccu", "blocking_ceu", "blocking_network", "eta_bps_per_joule_m2"};
  return cols;
}

void SweepSpec::validate() const {
  detail::require(!values.empty(), "sweep.values", "sweep needs at least one value");
  bool up = true, down = true;
  for (std::size_t i = 1; i < values.size(); ++i) {
    up = up && values[i] > values[i - 1];
    down = down && values[i] < values[i - 1];
  }
  detail::require(values.size() == 1 || up || down, "sweep.values",
                  "values must be strictly increasing or strictly decreasing");
  for (double v : values) detail::require(std::isfinite(v), "sweep.values", "must be finite");
  const auto& cols = sweep_output_columns();
  for (const auto& o : outputs) {
    detail::require(std::find(cols.begin(), cols.end(), o) != cols.end(), "sweep.outputs",
                    "unknown output column");
  }
}

ScenarioConfig apply_sweep_value(const ScenarioConfig& base, SweepVariable v, double value) {
  ScenarioConfig c = base;
  switch (v) {
    case SweepVariable::kLambdaM: c.lambda_m = value; break;
    case SweepVariable::kLambdaF: c.lambda_f = value; break;
    case SweepVariable::kBeta: c.beta = value; break;
    case SweepVariable::kPm:
      detail::require(is_shared(base.policy), "sweep.variable",
                      "p_m can only be swept under shared allocation");
      c.policy = SharedSpectrum{value};
      break;
  }
  return c;
}

std::vector<SweepRow> run_sweep(const ScenarioConfig& config, const SweepSpec& sweep,
                                unsigned threads) {
  sweep.validate();
  // Reject a structurally invalid sweep before any work starts.
  for (double v : sweep.values) apply_sweep_value(config, sweep.variable, v).validate();
  std::vector<SweepRow> rows(sweep.values.size());
  parallel_for(rows.size(), threads, [&](std::size_t i) {
    SweepRow& row = rows[i];
    row.value = sweep.values[i];
    try {
      const auto rep = run_scenario(apply_sweep_value(config, sweep.variable, row.value));
      row.zeta_center = rep.load.zeta_center;
      row.zeta_edge = rep.load.zeta_edge;
      row.coverage_ccu = rep.coverage_ccu;
      row.coverage_ceu = rep.coverage_ceu;
      row.blocking_ccu = rep.blocking.b_ccu;
      row.blocking_ceu = rep.blocking.b_ceu;
      row.blocking_network = rep.blocking.b_network;
      row.eta = rep.energy.eta;
    } catch (const NumericalError& e) {
      row = SweepRow{};
      row.value = sweep.values[i];
      row.ok = false;
      row.status = "error:" + e.stage();
    }
  });
  return rows;
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void write_sweep_csv(std::ostream& out, const SweepSpec& sweep, const std::vector<SweepRow>& rows) {
  const auto& all = sweep_output_columns();
  const auto& cols = sweep.outputs.empty() ? all : sweep.outputs;
  out << sweep_column(sweep.variable);
  for (const auto& c : all) {
    if (std::find(cols.begin(), cols.end(), c) != cols.end()) out << ',' << c;
  }
  out << ",status\n";
  for (const auto& r : rows) {
    out << format_number(r.value);
    const double vals[] = {r.zeta_center,  r.zeta_edge,    r.coverage_ccu,    r.coverage_ceu,
                           r.blocking_ccu, r.blocking_ceu, r.blocking_network};
    for (std::size_t j = 0; j < all.size(); ++j) {
      if (std::find(cols.begin(), cols.end(), all[j]) == cols.end()) continue;
      out << ',';
      if (!r.ok) continue;
      if (j + 1 == all.size()) {
        if (r.eta) out << format_number(*r.eta);
      } else {
        out << format_number(vals[j]);
      }
    }
    out << ',' << r.status << '\n';
  }
}

std::vector<SweepRow> parse_sweep_csv(std::istream& in, SweepSpec* spec) {
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("csv", "missing header row");
  const auto header = split(line, ',');
  if (header.size() < 2 || header.back() != "status") {
    throw ValidationError("csv", "header must end with a status column");
  }
  const auto variable = parse_sweep_variable(header.front());
  std::vector<std::string> outputs(header.begin() + 1, header.end() - 1);
  std::vector<SweepRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != header.size()) throw ValidationError("csv", "ragged row: " + line);
    SweepRow r;
    r.value = std::stod(cells.front());
    r.status = cells.back();
    r.ok = r.status == "ok";
    for (std::size_t j = 1; j + 1 < cells.size(); ++j) {
      const auto& name = header[j];
      const auto& cell = cells[j];
      if (cell.empty()) continue;
      const double v = std::stod(cell);
      if (name == "zeta_center") r.zeta_center = v;
      else if (name == "zeta_edge") r.zeta_edge = v;
      else if (name == "coverage_ccu") r.coverage_ccu = v;
      else if (name == "coverage_ceu") r.coverage_ceu = v;
      else if (name == "blocking_ccu") r.blocking_ccu = v;
      else if (name == "blocking_ceu") r.blocking_ceu = v;
      else if (name == "blocking_network") r.blocking_network = v;
      else if (name == "eta_bps_per_joule_m2") r.eta = v;
      else throw ValidationError("csv", "unknown column " + name);
    }
    rows.push_back(std::move(r));
  }
  if (spec) {
    spec->variable = variable;
    spec->values.clear();
    for (const auto& r : rows) spec->values.push_back(r.value);
    spec->outputs = outputs.size() == sweep_output_columns().size() ? std::vector<std::string>{}
                                                                     : outputs;
  }
  return rows;
}

}  // namespace hetnet
