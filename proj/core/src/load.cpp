#include "hetnet/load.hpp"

#include <cmath>

#include "hetnet/errors.hpp"
#include "hetnet/numerics/special_functions.hpp"

namespace hetnet {

std::vector<double> mcs_probabilities(std::span<const double> coverage) {
  detail::require(!coverage.empty(), "coverage", "need one value per MCS threshold");
  for (std::size_t i = 0; i < coverage.size(); ++i) {
    detail::require(coverage[i] >= 0.0 && coverage[i] <= 1.0, "coverage",
                    "values must lie in [0, 1]");
    if (i > 0) {
      detail::require(coverage[i] <= coverage[i - 1] + 1e-12, "coverage",
                      "must be nonincreasing over thresholds");
    }
  }
  if (!(coverage[0] > 0.0)) {
    throw NumericalError("mean_channels", "coverage at the lowest MCS threshold is zero");
  }
  std::vector<double> p(coverage.size());
  for (std::size_t i = 0; i < coverage.size(); ++i) {
    const double next = i + 1 < coverage.size() ? coverage[i + 1] : 0.0;
    p[i] = std::max(coverage[i] - next, 0.0) / coverage[0];
  }
  return p;
}

double mean_channels(std::span<const double> coverage, const McsTable& mcs) {
  detail::require(coverage.size() == mcs.size(), "coverage",
                  "need exactly one value per MCS threshold");
  const auto p = mcs_probabilities(coverage);
  double n = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) n += mcs.channels_at(i) * p[i];
  return n;
}

double cell_area_pdf(double a, double lambda_b) { return cell_area_pdf(a, lambda_b, kCellAreaShape); }

double cell_area_pdf(double a, double lambda_b, double shape) {
  detail::require(a >= 0.0, "a", "area must be nonnegative");
  detail::require(lambda_b > 0.0, "lambda_b", "must be positive");
  detail::require(shape > 0.0, "shape", "must be positive");
  if (a == 0.0) return shape < 1.0 ? HUGE_VAL : (shape == 1.0 ? shape * lambda_b : 0.0);
  const double rate = shape * lambda_b;
  return std::exp(shape * std::log(rate) + (shape - 1.0) * std::log(a) - rate * a -
                  std::lgamma(shape));
}

double cell_area_quantile_upper(double lambda_b, double tail, double shape) {
  detail::require(lambda_b > 0.0, "lambda_b", "must be positive");
  return numerics::gamma_q_inverse(shape, tail) / (shape * lambda_b);
}

double offered_ratio(double arrival_density, double nbar, double lambda_b, double mu,
                     double band_channels) {
  detail::require(arrival_density >= 0.0, "arrival_density", "must be nonnegative");
  detail::require(nbar >= 0.0, "nbar", "must be nonnegative");
  detail::require(lambda_b > 0.0, "lambda_b", "must be positive");
  detail::require(mu > 0.0, "mu", "must be positive");
  detail::require(band_channels > 0.0, "band_channels", "must be positive");
  return arrival_density * nbar / (lambda_b * mu * band_channels);
}

double activity_factor(double offered) {
  detail::require(offered >= 0.0 && !std::isnan(offered), "offered", "must be nonnegative");
  if (offered == 0.0) return 0.0;
  if (std::isinf(offered)) return 1.0;
  // With t = 3.5 lambda_b a ~ Gamma(3.5, 1), the cell activity is min(offered t / 3.5, 1).
  const double knee = kCellAreaShape / offered;
  const double z = offered * numerics::gamma_p(kCellAreaShape + 1.0, knee) +
                   numerics::gamma_q(kCellAreaShape, knee);
  return std::min(z, 1.0);
}

double LoadSolution::zeta_overall() const {
  if (const auto* s = std::get_if<SharedSpectrum>(&policy)) {
    return s->p_m * zeta_center + (1.0 - s->p_m) * zeta_edge;
  }
  return zeta_center;
}

LoadSolution solve_fixed_point(const ScenarioConfig& config, const McsTable& mcs,
                               const FixedPointOptions& opts) {
  config.validate();
  const auto model = config.coverage_model();
  const auto series = config.series_options();
  const auto& th = mcs.thresholds();
  const double n = config.channels;

  auto center_curve = [&](double z) {
    std::vector<double> c;
    c.reserve(th.size());
    for (double b : th) c.push_back(ccu_coverage(model, b, z));
    return c;
  };
  auto edge_curve = [&](double z) {
    std::vector<double> c;
    c.reserve(th.size());
    for (double b : th) c.push_back(ceu_coverage(model, b, z, series));
    return c;
  };

  LoadSolution sol;
  sol.policy = config.policy;
  if (const auto* s = std::get_if<SharedSpectrum>(&config.policy)) {
    auto phi_c = [&](double z) {
      const double nbar = mean_channels(center_curve(z), mcs);
      return activity_factor(offered_ratio(config.lambda_center(), nbar, config.lambda_b,
                                           config.mu, n * s->p_m));
    };
    auto phi_e = [&](double z) {
      const double nbar = mean_channels(edge_curve(z), mcs);
      return activity_factor(offered_ratio(config.lambda_edge(), nbar, config.lambda_b,
                                           config.mu, n * (1.0 - s->p_m)));
    };
    const auto c = find_fixed_point(phi_c, opts);
    const auto e = find_fixed_point(phi_e, opts);
    sol.zeta_center = c.zeta;
    sol.zeta_edge = e.zeta;
    sol.residual = std::max(std::abs(c.residual), std::abs(e.residual));
    sol.iterations = std::max(c.iterations, e.iterations);
  } else {
    const double band = macro_channels(config.policy, n);
    const double r2 = config.region * config.region;
    auto phi = [&](double z) {
      const double nbar = r2 * mean_channels(center_curve(z), mcs) +
                          (1.0 - r2) * mean_channels(edge_curve(z), mcs);
      return activity_factor(offered_ratio(config.lambda_m, nbar, config.lambda_b, config.mu, band));
    };
    const auto c = find_fixed_point(phi, opts);
    sol.zeta_center = sol.zeta_edge = c.zeta;
    sol.residual = std::abs(c.residual);
    sol.iterations = c.iterations;
  }
  sol.mcs_coverage.thresholds = th;
  sol.mcs_coverage.ccu = center_curve(sol.zeta_center);
  sol.mcs_coverage.ceu = edge_curve(sol.zeta_edge);
  sol.nbar_c = mean_channels(sol.mcs_coverage.ccu, mcs);
  sol.nbar_e = mean_channels(sol.mcs_coverage.ceu, mcs);
  return sol;
}

}  // namespace hetnet
