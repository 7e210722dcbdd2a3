#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "hetnet/blocking.hpp"
#include "hetnet/energy.hpp"
#include "hetnet/load.hpp"
#include "hetnet/montecarlo.hpp"
#include "hetnet/scenario.hpp"

namespace hetnet {

struct RunOptions {
  /// Attach a Monte-Carlo outage block at the fixed-point activity factors.
  bool with_montecarlo = false;
  OutageOptions montecarlo;
};

struct ScenarioReport {
  ScenarioConfig config;
  LoadSolution load;
  /// Coverage at config.beta with the fixed-point activity factors.
  double coverage_ccu = 0.0;
  double coverage_ceu = 0.0;
  BlockingReport blocking;
  EnergyReport energy;
  std::optional<OutageResult> montecarlo;
};

/// Full analytic pipeline: fixed point, coverage, blocking, energy. A failing
/// stage is rethrown as NumericalError whose stage() names it.
ScenarioReport run_scenario(const ScenarioConfig& config, const RunOptions& opts = {});

enum class SweepVariable { kLambdaM, kLambdaF, kPm, kBeta };

/// CSV column name of the swept quantity, with units.
const char* sweep_column(SweepVariable v);
SweepVariable parse_sweep_variable(const std::string& name);

struct SweepSpec {
  SweepVariable variable = SweepVariable::kLambdaM;
  std::vector<double> values;
  /// Output columns to emit; empty means all.
  std::vector<std::string> outputs;

  void validate() const;
};

/// Output columns in emission order.
const std::vector<std::string>& sweep_output_columns();

struct SweepRow {
  double value = 0.0;
  bool ok = true;
  std::string status = "ok";  ///< "ok" or "error:<stage>"
  double zeta_center = 0.0;
  double zeta_edge = 0.0;
  double coverage_ccu = 0.0;
  double coverage_ceu = 0.0;
  double blocking_ccu = 0.0;
  double blocking_ceu = 0.0;
  double blocking_network = 0.0;
  std::optional<double> eta;

  bool operator==(const SweepRow&) const = default;
};

ScenarioConfig apply_sweep_value(const ScenarioConfig& base, SweepVariable v, double value);

/// One row per value, in the order given; points run concurrently and a
/// failing point yields a row with ok = false instead of aborting.
std::vector<SweepRow> run_sweep(const ScenarioConfig& config, const SweepSpec& sweep,
                                unsigned threads = 0);

/// Shortest decimal form that reads back to the same double.
std::string format_number(double v);

void write_sweep_csv(std::ostream& out, const SweepSpec& sweep, const std::vector<SweepRow>& rows);

/// Inverse of write_sweep_csv; missing columns read back as zero.
std::vector<SweepRow> parse_sweep_csv(std::istream& in, SweepSpec* spec = nullptr);

}  // namespace hetnet
