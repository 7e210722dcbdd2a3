#pragma once

#include <span>

#include "hetnet/coverage.hpp"
#include "hetnet/scenario.hpp"

namespace hetnet {

/// Shape of the Gamma law used for the macro cell area.
inline constexpr double kCellAreaShape = 3.5;

/// Expected channels per admitted call: sum_i c_i * P(MCS i), where
/// P(MCS i) = (C(Gamma_i) - C(Gamma_{i+1})) / C(Gamma_1) is the MCS mix among
/// served users and C(Gamma_{T+1}) = 0. `coverage` holds C(Gamma_i).
double mean_channels(std::span<const double> coverage, const McsTable& mcs);

/// Probability of each MCS among served users (same normalization as above).
std::vector<double> mcs_probabilities(std::span<const double> coverage);

/// Gamma(3.5, rate 3.5 lambda_b) density of the cell area a (m^2).
double cell_area_pdf(double a, double lambda_b);

/// Gamma(shape, rate shape * lambda_b) density: mean 1/lambda_b for any shape.
double cell_area_pdf(double a, double lambda_b, double shape);

/// Area beyond which the cell-area law has mass `tail`.
double cell_area_quantile_upper(double lambda_b, double tail, double shape = kCellAreaShape);

/// Dimensionless offered load per band: lambda * nbar / (lambda_b * mu * band_channels).
double offered_ratio(double arrival_density, double nbar, double lambda_b, double mu,
                     double band_channels);

/// Mean of min(offered * lambda_b * a, 1) over the cell-area law, in closed
/// form via regularized incomplete gamma functions.
double activity_factor(double offered);

enum class FixedPointMethod { kBisection, kDampedPicard };

struct FixedPointOptions {
  double tol = 1e-6;
  int max_iter = 60;
  FixedPointMethod method = FixedPointMethod::kBisection;
  double damping = 0.5;  ///< Picard step weight
};

struct LoadSolution {
  SpectrumPolicy policy;
  /// Under co-channel/orthogonal allocation both equal the common zeta_C.
  double zeta_center = 0.0;
  double zeta_edge = 0.0;
  double nbar_c = 0.0;
  double nbar_e = 0.0;
  double residual = 0.0;
  int iterations = 0;
  /// Coverage at the MCS thresholds at the fixed point.
  CoverageCurve mcs_coverage;

  /// p_m zeta_SC + (1 - p_m) zeta_SE under shared allocation, else zeta_C.
  double zeta_overall() const;
};

/// Scalar fixed point zeta = phi(zeta) with phi(0) >= 0 and phi(1) <= 1.
struct ScalarFixedPoint {
  double zeta;
  double residual;
  int iterations;
};

template <class Phi>
ScalarFixedPoint find_fixed_point(Phi&& phi, const FixedPointOptions& opts);

/// Couples coverage, channel demand and activity. Under shared allocation the
/// center and edge bands are two independent scalar problems; otherwise a
/// single zeta_C drives both classes and both coverages are recomputed on
/// every evaluation.
LoadSolution solve_fixed_point(const ScenarioConfig& config, const McsTable& mcs,
                               const FixedPointOptions& opts = {});

inline LoadSolution solve_fixed_point(const ScenarioConfig& config) {
  return solve_fixed_point(config, config.mcs(),
                           {config.solver.fixed_point_tol, config.solver.fixed_point_max_iter});
}

}  // namespace hetnet

#include "hetnet/detail/fixed_point_impl.hpp"
