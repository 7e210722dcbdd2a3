#include "hetnet/interference.hpp"

#include <cmath>
#include <numbers>

#include "hetnet/errors.hpp"
#include "hetnet/numerics/quadrature.hpp"

namespace hetnet {
namespace {

using std::numbers::pi;

void check_delta(double delta) {
  detail::require(delta > 0.0 && delta < 1.0, "delta", "must lie in (0, 1)");
}

void check_zeta(double zeta) {
  detail::require(zeta >= 0.0 && zeta <= 1.0, "zeta", "activity factor must lie in [0, 1]");
}

constexpr numerics::QuadratureOptions kKernelQuad{1e-12, 1e-300, 4000};

// I(z) by quadrature on finite intervals only. For u >= 1 substitute
// u = y^{-delta/(1-delta)}, which maps [max(z,1), inf) to [0, max(z,1)^{1-1/delta}]
// with integrand (delta/(1-delta)) / (1 + y^{1/(1-delta)}): bounded and smooth.
double tail_integral_quadrature(double z, double delta) {
  const double c = delta / (1.0 - delta);
  const double p = 1.0 / (1.0 - delta);
  auto outer = [p](double y) { return 1.0 / (1.0 + std::pow(y, p)); };
  auto inner = [delta](double u) { return 1.0 / (1.0 + std::pow(u, 1.0 / delta)); };
  if (z >= 1.0) {
    const double top = std::pow(z, 1.0 - 1.0 / delta);
    return c * numerics::checked(numerics::integrate(outer, 0.0, top, kKernelQuad), "kernel_H");
  }
  const double near = numerics::checked(numerics::integrate(inner, z, 1.0, kKernelQuad), "kernel_H");
  const double far = c * numerics::checked(numerics::integrate(outer, 0.0, 1.0, kKernelQuad), "kernel_H");
  return near + far;
}

}  // namespace

PathLossModel::PathLossModel(double alpha) : alpha_(alpha), delta_(2.0 / alpha) {
  detail::require(alpha > 2.0 && std::isfinite(alpha), "alpha", "path-loss exponent must exceed 2");
}

TierPowers::TierPowers(double macro, double femto) : p_b(macro), p_f(femto) {
  detail::require(macro > 0.0, "p_b", "macro power must be positive");
  detail::require(femto > 0.0, "p_f", "femto power must be positive");
}

double tail_integral(double z, double delta, KernelMethod method) {
  check_delta(delta);
  detail::require(z >= 0.0, "z", "lower limit must be nonnegative");
  const bool closed = delta == 0.5 && method != KernelMethod::kQuadrature;
  if (method == KernelMethod::kClosedForm) {
    detail::require(delta == 0.5, "delta", "closed form exists only for delta = 1/2");
  }
  if (std::isinf(z)) return 0.0;
  if (closed) return std::atan(1.0 / z);  // pi/2 - atan(z), accurate for large z
  return tail_integral_quadrature(z, delta);
}

double kernel_H(double beta, double delta, const RegionThreshold& r, KernelMethod method) {
  check_delta(delta);
  detail::require(beta > 0.0, "beta", "SIR threshold must be positive");
  const double bd = std::pow(beta, delta);
  if (delta == 0.5 && method != KernelMethod::kQuadrature) {
    return bd * std::atan(r.squared() * bd);
  }
  return bd * tail_integral(1.0 / (r.squared() * bd), delta, method);
}

double kernel_G(double beta, double delta, const RegionThreshold& r, KernelMethod method) {
  check_delta(delta);
  detail::require(beta > 0.0, "beta", "SIR threshold must be positive");
  const double bd = std::pow(beta, delta);
  if (delta == 0.5 && method != KernelMethod::kQuadrature) {
    // atan(a) - atan(b) = atan((a - b) / (1 + ab)) for ab > -1.
    const double b2 = r.squared() * bd;
    return bd * std::atan((bd - b2) / (1.0 + bd * b2));
  }
  return kernel_H(beta, delta, RegionThreshold(1.0), method) - kernel_H(beta, delta, r, method);
}

double femto_shape(double delta) {
  check_delta(delta);
  return pi * delta / std::sin(pi * delta);
}

double lt_femto(double s, double lambda_f_eff, double delta, double p_f_rel) {
  check_delta(delta);
  detail::require(s >= 0.0, "s", "must be nonnegative");
  detail::require(lambda_f_eff >= 0.0, "lambda_f_eff", "must be nonnegative");
  detail::require(p_f_rel > 0.0, "p_f_rel", "must be positive");
  if (s == 0.0 || lambda_f_eff == 0.0) return 1.0;
  return std::exp(-pi * lambda_f_eff * std::pow(s * p_f_rel, delta) * femto_shape(delta));
}

double lt_mbs_ccu(double s, double r_c, double zeta, double lambda_b, double delta,
                  const RegionThreshold& r) {
  check_delta(delta);
  check_zeta(zeta);
  detail::require(s >= 0.0, "s", "must be nonnegative");
  detail::require(r_c > 0.0, "r_c", "must be positive");
  detail::require(lambda_b > 0.0, "lambda_b", "must be positive");
  if (s == 0.0 || zeta == 0.0) return 1.0;
  const double sd = std::pow(s, delta);
  return std::exp(-pi * zeta * lambda_b * sd * tail_integral(r_c * r_c / (r.squared() * sd), delta));
}

double lt_mbs_ceu_dominant_off(double s, double r_e, double zeta, double lambda_b, double delta) {
  return lt_mbs_ccu(s, r_e, zeta, lambda_b, delta, RegionThreshold(1.0));
}

double lt_mbs_ceu_dominant_on(double s, double r_e, double zeta, double lambda_b, double delta,
                              const RegionThreshold& r) {
  check_delta(delta);
  detail::require(zeta > 0.0 && zeta <= 1.0, "zeta", "conditioning requires zeta in (0, 1]");
  detail::require(s >= 0.0, "s", "must be nonnegative");
  detail::require(r_e > 0.0, "r_e", "must be positive");
  detail::require(lambda_b > 0.0, "lambda_b", "must be positive");
  detail::require(!r.is_one(), "R", "annulus is empty for R = 1");
  if (s == 0.0) return 1.0;
  const double sd = std::pow(s, delta);
  const double z_in = r_e * r_e / sd;
  const double z_out = z_in / r.squared();
  const double k = pi * zeta * lambda_b;
  const double outer = k * sd * tail_integral(z_out, delta);
  // Interference from the annulus [r_e, r_e/R] given at least one active point.
  const double inner = k * sd * (tail_integral(z_in, delta) - tail_integral(z_out, delta));
  const double mass = k * r_e * r_e * (1.0 / r.squared() - 1.0);
  const double conditioned =
      std::exp(-inner) * std::expm1(-(mass - inner)) / std::expm1(-mass);
  return std::exp(-outer) * conditioned;
}

}  // namespace hetnet
