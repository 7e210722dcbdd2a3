#pragma once

#include "hetnet/geometry.hpp"

namespace hetnet {

/// Path-loss exponent alpha > 2 and the derived delta = 2 / alpha.
class PathLossModel {
 public:
  explicit PathLossModel(double alpha);

  double alpha() const { return alpha_; }
  double delta() const { return delta_; }

 private:
  double alpha_;
  double delta_;
};

/// Per-channel transmit powers of the macro and femto tiers (Watts).
struct TierPowers {
  double p_b;
  double p_f;

  TierPowers(double macro, double femto);
  double femto_relative() const { return p_f / p_b; }
};

enum class KernelMethod { kAuto, kClosedForm, kQuadrature };

/// I(z) = integral over [z, inf) of du / (1 + u^{1/delta}).
double tail_integral(double z, double delta, KernelMethod method = KernelMethod::kAuto);

/// H(beta, delta, R) = beta^delta * I(R^-2 beta^-delta).
double kernel_H(double beta, double delta, const RegionThreshold& r,
                KernelMethod method = KernelMethod::kAuto);

/// G(beta, delta, R) = H(beta, delta, 1) - H(beta, delta, R).
double kernel_G(double beta, double delta, const RegionThreshold& r,
                KernelMethod method = KernelMethod::kAuto);

/// Exponent coefficient pi * delta * csc(pi * delta) shared by the femto terms.
double femto_shape(double delta);

/// Laplace transform of the femto-tier interference at scale s.
double lt_femto(double s, double lambda_f_eff, double delta, double p_f_rel);

/// Macro interference to a cell-center user at serving distance r_c: active
/// interferers (density zeta * lambda_b) lie outside B(0, r_c / R).
double lt_mbs_ccu(double s, double r_c, double zeta, double lambda_b, double delta,
                  const RegionThreshold& r);

/// Macro interference to a cell-edge user at r_e, conditioned on the
/// strongest interferer (inside the annulus [r_e, r_e / R]) transmitting.
double lt_mbs_ceu_dominant_on(double s, double r_e, double zeta, double lambda_b, double delta,
                              const RegionThreshold& r);

/// Macro interference to a cell-edge user at r_e when the strongest
/// interferer is silent: active interferers anywhere outside B(0, r_e).
double lt_mbs_ceu_dominant_off(double s, double r_e, double zeta, double lambda_b, double delta);

}  // namespace hetnet
