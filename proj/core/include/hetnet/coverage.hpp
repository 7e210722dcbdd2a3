#pragma once

#include <vector>

#include "hetnet/geometry.hpp"
#include "hetnet/spectrum.hpp"

namespace hetnet {

/// Everything one coverage evaluation depends on. `lambda_f_eff` is the
/// density of femtos on the user's channel (see femto_density_ccu/ceu).
struct CoverageInputs {
  double beta = 1.0;
  double lambda_b = 5e-6;
  double lambda_f_eff = 0.0;
  double zeta = 1.0;
  double delta = 0.5;
  RegionThreshold region{0.707};
  double p_f_rel = 0.01;

  void validate() const;
};

struct SeriesOptions {
  double tol = 1e-8;
  int max_terms = 1000;
  /// Add the Euler-Maclaurin remainder of the truncated n-sum. Without it the
  /// partial sums converge like K^-2 and tol is rarely met within max_terms.
  bool tail_correction = true;
};

struct SeriesResult {
  double value;
  int terms;              ///< n-terms summed explicitly
  double last_increment;  ///< |S_{K+1} - S_K| at termination
};

/// Femto term pi*delta*csc(pi*delta) * (lambda_f/lambda_b) * (beta*P_f)^delta.
double femto_coverage_term(const CoverageInputs& in);

/// Cell-center coverage with femtos at inputs.lambda_f_eff.
double cov_ccu_ssa(const CoverageInputs& in);

/// Cell-edge coverage under shared allocation (edge band is femto-free, so
/// lambda_f_eff is ignored). Throws NumericalError if tol is not met.
SeriesResult cov_ceu_ssa_series(const CoverageInputs& in, const SeriesOptions& opts = {});

/// Same quantity by quadrature of the conditional Laplace transforms against
/// the edge serving-distance density.
double cov_ceu_ssa_integral(const CoverageInputs& in, double rel_tol = 1e-10);

/// Cell-center coverage under co-channel allocation.
double cov_ccu_csa(const CoverageInputs& in);

/// Cell-edge coverage under co-channel allocation; femtos at lambda_f_eff
/// interfere in both dominant-interferer branches.
SeriesResult cov_ceu_csa(const CoverageInputs& in, const SeriesOptions& opts = {});

double cov_ceu_csa_integral(const CoverageInputs& in, double rel_tol = 1e-10);

/// Network-level description needed to turn a policy into coverage inputs.
struct CoverageModel {
  SpectrumPolicy policy = SharedSpectrum{0.4};
  double lambda_b = 5e-6;
  double lambda_f = 2.5e-4;
  double channels = 50;
  double delta = 0.5;
  RegionThreshold region{0.707};
  double p_f_rel = 0.01;
};

double ccu_coverage(const CoverageModel& model, double beta, double zeta);
double ceu_coverage(const CoverageModel& model, double beta, double zeta,
                    const SeriesOptions& opts = {});

struct CoverageCurve {
  std::vector<double> thresholds;
  std::vector<double> ccu;
  std::vector<double> ceu;
};

/// Coverage of both classes at each threshold; each threshold evaluated
/// independently.
CoverageCurve coverage_curve(const CoverageModel& model, const std::vector<double>& thresholds,
                             double zeta_center, double zeta_edge, const SeriesOptions& opts = {});

}  // namespace hetnet
