#include "hetnet/scenario.hpp"

#include <cmath>

#include "hetnet/errors.hpp"

namespace hetnet {

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }

double linear_to_db(double linear) { return 10.0 * std::log10(linear); }

McsTable::McsTable(std::vector<double> thresholds, double bandwidth_hz, double rate_bps)
    : thresholds_(std::move(thresholds)), bandwidth_hz_(bandwidth_hz), rate_bps_(rate_bps) {
  detail::require(!thresholds_.empty(), "mcs_thresholds", "at least one threshold is required");
  for (std::size_t i = 0; i < thresholds_.size(); ++i) {
    detail::require(thresholds_[i] > 0.0 && std::isfinite(thresholds_[i]), "mcs_thresholds",
                    "thresholds must be positive and finite");
    if (i > 0) {
      detail::require(thresholds_[i] > thresholds_[i - 1], "mcs_thresholds",
                      "thresholds must be strictly increasing");
    }
  }
  detail::require(bandwidth_hz_ > 0.0, "channel_bandwidth_hz", "must be positive");
  detail::require(rate_bps_ > 0.0, "rate_requirement_bps", "must be positive");
}

McsTable McsTable::default_table(double bandwidth_hz, double rate_bps) {
  constexpr int kCount = 15;
  constexpr double kLowDb = -6.5;
  constexpr double kHighDb = 19.6;
  std::vector<double> t;
  t.reserve(kCount);
  for (int i = 0; i < kCount; ++i) {
    t.push_back(db_to_linear(kLowDb + (kHighDb - kLowDb) * i / (kCount - 1)));
  }
  return McsTable(std::move(t), bandwidth_hz, rate_bps);
}

double McsTable::channels_at(std::size_t i) const {
  return rate_bps_ / (bandwidth_hz_ * std::log2(1.0 + thresholds_.at(i)));
}

void ScenarioConfig::validate() const {
  detail::require(lambda_b > 0.0 && std::isfinite(lambda_b), "lambda_b_per_m2", "must be positive");
  detail::require(lambda_f >= 0.0 && std::isfinite(lambda_f), "lambda_f_per_m2",
                  "must be nonnegative");
  detail::require(lambda_m >= 0.0 && std::isfinite(lambda_m), "lambda_m_per_min_m2",
                  "must be nonnegative");
  detail::require(mu > 0.0 && std::isfinite(mu), "mu_per_min", "must be positive");
  detail::require(alpha > 2.0 && std::isfinite(alpha), "alpha", "must exceed 2");
  detail::require(p_b > 0.0, "p_b_watts", "must be positive");
  detail::require(p_f > 0.0, "p_f_watts", "must be positive");
  detail::require(channels >= 1, "channels", "must be at least 1");
  detail::require(bandwidth_hz > 0.0, "channel_bandwidth_hz", "must be positive");
  detail::require(rate_bps > 0.0, "rate_requirement_bps", "must be positive");
  detail::require(region > 0.0 && region < 1.0, "region_threshold",
                  "must lie in (0, 1) for a two-class scenario");
  detail::require(beta > 0.0 && std::isfinite(beta), "beta", "must be positive");
  if (const auto* s = std::get_if<SharedSpectrum>(&policy)) {
    detail::require(s->p_m > 0.0 && s->p_m < 1.0, "policy.p_m",
                    "must lie in (0, 1) under shared allocation");
  } else if (const auto* o = std::get_if<OrthogonalSpectrum>(&policy)) {
    detail::require(o->p_o >= 0.0 && o->p_o < 1.0, "policy.p_o", "must lie in [0, 1)");
  }
  (void)mcs();
  detail::require(solver.fixed_point_tol > 0.0, "solver.fixed_point_tolerance", "must be positive");
  detail::require(solver.fixed_point_max_iter >= 1, "solver.fixed_point_max_iterations",
                  "must be at least 1");
  detail::require(solver.series_tol > 0.0, "solver.series_tolerance", "must be positive");
  detail::require(solver.series_max_terms >= 2, "solver.series_max_terms", "must be at least 2");
  detail::require(solver.blocking_rel_tol > 0.0, "solver.blocking_rel_tolerance",
                  "must be positive");
  detail::require(solver.area_tail > 0.0 && solver.area_tail < 0.1, "solver.area_tail",
                  "must lie in (0, 0.1)");
}

CoverageModel ScenarioConfig::coverage_model() const {
  return CoverageModel{policy,  lambda_b,           lambda_f, static_cast<double>(channels),
                       delta(), RegionThreshold(region), p_f / p_b};
}

}  // namespace hetnet
