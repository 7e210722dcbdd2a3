#include "hetnet/energy.hpp"

#include "hetnet/errors.hpp"

namespace hetnet {

EnergyReport energy_efficiency(const ScenarioConfig& config, const LoadSolution& solution,
                               const BlockingReport& blocking) {
  config.validate();
  EnergyReport rep;
  rep.zeta_overall = solution.zeta_overall();
  if (rep.zeta_overall <= 0.0) return rep;
  const double r2 = config.region * config.region;
  const double scale = config.lambda_m * config.rate_bps / (config.mu * config.p_b);
  if (is_shared(config.policy)) {
    const double carried = r2 * (1.0 - blocking.b_ccu) + (1.0 - r2) * (1.0 - blocking.b_ceu);
    rep.eta = scale * carried / (config.channels * rep.zeta_overall);
  } else {
    const double band = macro_channels(config.policy, config.channels);
    rep.eta = scale * (1.0 - blocking.b_network) / (band * rep.zeta_overall);
  }
  return rep;
}

}  // namespace hetnet
