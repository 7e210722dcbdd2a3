#include "hetnet/spectrum.hpp"

#include "hetnet/errors.hpp"

namespace hetnet {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

std::string policy_name(const SpectrumPolicy& policy) {
  return std::visit(overloaded{[](const SharedSpectrum&) { return std::string("ssa"); },
                               [](const CoChannelSpectrum&) { return std::string("csa"); },
                               [](const OrthogonalSpectrum&) { return std::string("osa"); }},
                    policy);
}

void validate_policy(const SpectrumPolicy& policy) {
  if (const auto* s = std::get_if<SharedSpectrum>(&policy)) {
    // p_m = 1 is admitted at formula level so SSA can be collapsed onto CSA.
    detail::require(s->p_m > 0.0 && s->p_m <= 1.0, "policy.p_m", "must lie in (0, 1]");
  } else if (const auto* o = std::get_if<OrthogonalSpectrum>(&policy)) {
    detail::require(o->p_o >= 0.0 && o->p_o < 1.0, "policy.p_o", "must lie in [0, 1)");
  }
}

bool is_shared(const SpectrumPolicy& policy) {
  return std::holds_alternative<SharedSpectrum>(policy);
}

double femto_density_ccu(const SpectrumPolicy& policy, double lambda_f, double channels) {
  validate_policy(policy);
  detail::require(lambda_f >= 0.0, "lambda_f", "must be nonnegative");
  detail::require(channels > 0.0, "channels", "must be positive");
  return std::visit(
      overloaded{[&](const SharedSpectrum& s) { return lambda_f / (channels * s.p_m); },
                 [&](const CoChannelSpectrum&) { return lambda_f / channels; },
                 [&](const OrthogonalSpectrum&) { return 0.0; }},
      policy);
}

double femto_density_ceu(const SpectrumPolicy& policy, double lambda_f, double channels) {
  validate_policy(policy);
  detail::require(lambda_f >= 0.0, "lambda_f", "must be nonnegative");
  detail::require(channels > 0.0, "channels", "must be positive");
  return std::holds_alternative<CoChannelSpectrum>(policy) ? lambda_f / channels : 0.0;
}

double macro_channels(const SpectrumPolicy& policy, double channels) {
  validate_policy(policy);
  if (const auto* o = std::get_if<OrthogonalSpectrum>(&policy)) return channels * (1.0 - o->p_o);
  return channels;
}

}  // namespace hetnet
