#pragma once

#include <cstdint>
#include <vector>

#include "hetnet/coverage.hpp"
#include "hetnet/spectrum.hpp"

namespace hetnet {

/// Ordered SIR thresholds (linear) of the modulation-and-coding schemes plus
/// the per-channel bandwidth and the per-user rate requirement.
class McsTable {
 public:
  McsTable(std::vector<double> thresholds, double bandwidth_hz, double rate_bps);

  /// 15 thresholds evenly spaced in dB from -6.5 dB to 19.6 dB. This grid is a
  /// library default, not a measured link-level table.
  static McsTable default_table(double bandwidth_hz = 180e3, double rate_bps = 90e3);

  const std::vector<double>& thresholds() const { return thresholds_; }
  std::size_t size() const { return thresholds_.size(); }
  double bandwidth_hz() const { return bandwidth_hz_; }
  double rate_bps() const { return rate_bps_; }

  /// Channels needed to carry rate_bps with MCS i: R_th / (B log2(1 + Gamma_i)).
  double channels_at(std::size_t i) const;

 private:
  std::vector<double> thresholds_;
  double bandwidth_hz_;
  double rate_bps_;
};

struct SolverSettings {
  double fixed_point_tol = 1e-6;
  int fixed_point_max_iter = 60;
  double series_tol = 1e-8;
  int series_max_terms = 1000;
  double blocking_rel_tol = 1e-7;
  double area_tail = 1e-6;
};

/// One network scenario. Densities per m^2, arrival density per (min m^2),
/// service rate per minute, powers in Watts per channel.
struct ScenarioConfig {
  double lambda_b = 5e-6;
  double lambda_f = 50 * 5e-6;
  double lambda_m = 2e-4;
  double mu = 1.0;
  double alpha = 4.0;
  double p_b = 1.0;
  double p_f = 0.01;
  int channels = 50;
  double bandwidth_hz = 180e3;
  double rate_bps = 90e3;
  double region = 0.707;
  double beta = 1.0;  ///< SIR threshold at which coverage is reported
  SpectrumPolicy policy = SharedSpectrum{0.4};
  std::vector<double> mcs_thresholds = McsTable::default_table().thresholds();
  SolverSettings solver;
  std::uint64_t seed = 1;

  /// Throws ValidationError naming the first offending field.
  void validate() const;

  double delta() const { return 2.0 / alpha; }
  McsTable mcs() const { return McsTable(mcs_thresholds, bandwidth_hz, rate_bps); }
  CoverageModel coverage_model() const;
  SeriesOptions series_options() const { return {solver.series_tol, solver.series_max_terms, true}; }
  /// Arrival densities of cell-center and cell-edge users.
  double lambda_center() const { return lambda_m * region * region; }
  double lambda_edge() const { return lambda_m * (1.0 - region * region); }
};

double db_to_linear(double db);
double linear_to_db(double linear);

}  // namespace hetnet
