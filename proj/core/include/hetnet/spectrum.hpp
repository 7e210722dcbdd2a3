#pragma once

#include <string>
#include <variant>

namespace hetnet {

/// p_m of the channels carry cell-center users and co-channel femtos; the
/// remaining 1 - p_m carry cell-edge users with no femto reuse.
struct SharedSpectrum {
  double p_m;
};

/// Every channel is available to both user classes and to the femto tier.
struct CoChannelSpectrum {};

/// A fraction p_o of the channels is reserved for femtos; macro users get the
/// remaining N(1 - p_o) channels with no femto interference.
struct OrthogonalSpectrum {
  double p_o;
};

using SpectrumPolicy = std::variant<SharedSpectrum, CoChannelSpectrum, OrthogonalSpectrum>;

/// "ssa", "csa" or "osa".
std::string policy_name(const SpectrumPolicy& policy);

/// Throws ValidationError for p_m outside (0, 1] or p_o outside [0, 1).
void validate_policy(const SpectrumPolicy& policy);

bool is_shared(const SpectrumPolicy& policy);

/// Density of femtos sharing the channel of a cell-center user.
double femto_density_ccu(const SpectrumPolicy& policy, double lambda_f, double channels);

/// Density of femtos sharing the channel of a cell-edge user.
double femto_density_ceu(const SpectrumPolicy& policy, double lambda_f, double channels);

/// Channels usable by macro users on the shared (non-split) path:
/// N under co-channel allocation, N(1 - p_o) under orthogonal allocation.
double macro_channels(const SpectrumPolicy& policy, double channels);

}  // namespace hetnet
