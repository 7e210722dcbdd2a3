#pragma once

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "hetnet/blocking.hpp"
#include "hetnet/geometry.hpp"
#include "hetnet/load.hpp"
#include "hetnet/scenario.hpp"

namespace hetnet {

/// Mergeable (count, sum, sum of squares) accumulator.
class RunningStats {
 public:
  void add(double x) {
    ++n_;
    sum_ += x;
    sumsq_ += x * x;
  }
  void merge(const RunningStats& o) {
    n_ += o.n_;
    sum_ += o.sum_;
    sumsq_ += o.sumsq_;
  }
  std::uint64_t count() const { return n_; }
  double sum() const { return sum_; }
  double mean() const { return n_ ? sum_ / static_cast<double>(n_) : 0.0; }
  /// Unbiased sample variance.
  double variance() const {
    if (n_ < 2) return 0.0;
    const double n = static_cast<double>(n_);
    return std::max(0.0, (sumsq_ - sum_ * sum_ / n) / (n - 1.0));
  }
  double std_error() const { return n_ ? std::sqrt(variance() / static_cast<double>(n_)) : 0.0; }

 private:
  std::uint64_t n_ = 0;
  double sum_ = 0.0;
  double sumsq_ = 0.0;
};

struct SimEstimate {
  double mean = 0.0;
  double std_error = 0.0;  ///< sample std / sqrt(trials)
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;

  static SimEstimate from(const RunningStats& s, std::uint64_t seed) {
    return {s.mean(), s.std_error(), s.count(), seed};
  }
};

struct SirSample {
  UserClass user_class;
  double sir;
  double serving_distance;
};

// ---------------------------------------------------------------- outage

/// Spatial model for one SIR snapshot. Every MBS other than the serving one
/// occupies the test user's channel independently with probability
/// zeta_center (for cell-center users) or zeta_edge (for cell-edge users).
struct OutageScenario {
  double lambda_b = 5e-6;
  double lambda_f = 2.5e-4;
  double channels = 50;
  SpectrumPolicy policy = SharedSpectrum{0.4};
  double alpha = 4.0;
  double p_f_rel = 0.01;
  double region = 0.707;
  double zeta_center = 1.0;
  double zeta_edge = 1.0;

  static OutageScenario from_config(const ScenarioConfig& c, double zeta_center,
                                    double zeta_edge);
};

enum class UserPlacement { kGuardDisk, kOrigin };

struct OutageOptions {
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 1;
  std::vector<double> thresholds{1.0};
  /// Window radius in meters; 0 selects the radius holding min_expected_mbs.
  double window_radius = 0.0;
  double min_expected_mbs = 500.0;
  UserPlacement placement = UserPlacement::kGuardDisk;
  /// Users are dropped uniformly within guard_fraction * window_radius.
  double guard_fraction = 0.5;
  unsigned threads = 0;
  std::uint64_t chunk_size = 2000;
  /// Fail if either class gets fewer samples than this (0 disables).
  std::uint64_t min_class_trials = 100;
  /// When set, one "trial,class,sir,serving_distance_m" line per trial.
  std::ostream* records = nullptr;
};

struct OutageResult {
  std::vector<double> thresholds;
  std::vector<SimEstimate> ccu_outage;
  std::vector<SimEstimate> ceu_outage;
  SimEstimate ccu_fraction;
  double window_radius = 0.0;
};

double default_window_radius(double lambda_b, double min_expected_mbs);

/// One SIR sample; exposed for tests and the record stream.
SirSample sample_sir(const OutageScenario& s, double window_radius, UserPlacement placement,
                     double guard_fraction, Rng& rng, std::vector<Point2>& scratch);

/// Outage P(SIR <= beta) per class and threshold. Trials are split into
/// chunks seeded from (seed, chunk index) and merged in chunk order, so the
/// result does not depend on the thread count.
OutageResult simulate_outage(const OutageScenario& scenario, const OutageOptions& opts);

// -------------------------------------------------------------- temporal

enum class AreaSource { kGamma, kEmpiricalVoronoi };

enum class DemandModel {
  kMcsSampled,  ///< per-call demand drawn from the MCS mix at the fixed point
  kClassMean,   ///< every call of a class needs exactly its mean demand
};

struct TemporalOptions {
  double sim_minutes = 200.0;
  int cells = 2000;
  double warmup_fraction = 0.1;
  std::uint64_t seed = 1;
  AreaSource area_source = AreaSource::kGamma;
  DemandModel demand = DemandModel::kMcsSampled;
  /// If positive, every cell has this area (m^2) instead of a random one.
  double fixed_area = 0.0;
  unsigned threads = 0;
};

struct TemporalResult {
  /// Time-averaged occupied channels over the band size, averaged over cells.
  SimEstimate activity_center;
  SimEstimate activity_edge;
  /// Fraction of blocked arrivals per cell, averaged over cells.
  SimEstimate blocking_center;
  SimEstimate blocking_edge;
  std::uint64_t arrivals = 0;
  /// z-score of the activity difference between the two halves of the
  /// measurement window; |z| > 4 flags a non-stationary run.
  double drift_z = 0.0;
  bool stationary = true;
};

/// Discrete-event simulation of independent cells fed by Poisson arrivals
/// (cell-center share R^2) with exponential holding times. Shared allocation
/// admits a call while its band has fewer than floor(N p / nbar) calls;
/// co-channel/orthogonal allocation admits while the channel budget allows.
TemporalResult simulate_temporal(const ScenarioConfig& config, const LoadSolution& solution,
                                 const TemporalOptions& opts);

struct LossSimOptions {
  double minutes = 20'000.0;
  double warmup_minutes = 200.0;
  int batches = 20;
  std::uint64_t seed = 1;
  double mu = 1.0;
};

struct LossSimResult {
  SimEstimate blocking_center;
  SimEstimate blocking_edge;
};

/// Single two-class loss system (fixed demands, channel-budget admission);
/// standard errors from batch means.
LossSimResult simulate_loss_system(const MultiClassLossSystem& system, const LossSimOptions& opts);

/// Areas (m^2) of at least `cells` Voronoi cells of a sampled MBS pattern,
/// measured by nearest-MBS assignment of uniform probe points.
std::vector<double> sample_voronoi_areas(double lambda_b, int cells, std::uint64_t seed,
                                         int probes_per_cell = 400);

}  // namespace hetnet
