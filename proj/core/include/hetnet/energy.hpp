#pragma once

#include <optional>

#include "hetnet/blocking.hpp"
#include "hetnet/load.hpp"
#include "hetnet/scenario.hpp"

namespace hetnet {

struct EnergyReport {
  /// bps / (Joule m^2); empty when the overall activity is zero.
  std::optional<double> eta;
  double zeta_overall = 0.0;
};

/// Area energy efficiency. Shared allocation weighs per-class carried traffic
/// (R^2 (1 - B_SC) + (1 - R^2)(1 - B_SE)) against zeta_S; the other policies
/// use the area-averaged network blocking B_C and zeta_C.
EnergyReport energy_efficiency(const ScenarioConfig& config, const LoadSolution& solution,
                               const BlockingReport& blocking);

}  // namespace hetnet
