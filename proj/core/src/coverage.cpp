#include "hetnet/coverage.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "hetnet/errors.hpp"
#include "hetnet/interference.hpp"
#include "hetnet/numerics/quadrature.hpp"
#include "hetnet/numerics/summation.hpp"

namespace hetnet {
namespace {

// Tail of sum_{n>=m} f(n) with f(n) = sum_j s_j / (a n + o_j), sum_j s_j = 0,
// by Euler-Maclaurin with three Bernoulli corrections.
struct RationalTerms {
  double a;
  std::array<double, 4> s;
  std::array<double, 4> o;

  double at(double n) const {
    double v = 0.0;
    for (int j = 0; j < 4; ++j) v += s[j] / (a * n + o[j]);
    return v;
  }

  // d^p/dn^p f at n.
  double derivative(int p, double n) const {
    double factorial = 1.0;
    for (int i = 2; i <= p; ++i) factorial *= i;
    const double sign = (p % 2 == 0) ? 1.0 : -1.0;
    double v = 0.0;
    for (int j = 0; j < 4; ++j) v += s[j] / std::pow(a * n + o[j], p + 1);
    return sign * factorial * std::pow(a, p) * v;
  }

  double tail_from(double m) const {
    double integral = 0.0;
    for (int j = 0; j < 4; ++j) integral -= s[j] * std::log(a * m + o[j]);
    integral /= a;
    constexpr std::array<double, 3> b2j = {1.0 / 6.0, -1.0 / 30.0, 1.0 / 42.0};
    constexpr std::array<double, 3> fact2j = {2.0, 24.0, 720.0};
    double corr = 0.5 * at(m);
    for (int j = 0; j < 3; ++j) corr -= b2j[j] / fact2j[j] * derivative(2 * j + 1, m);
    return integral + corr;
  }
};

// Edge coverage with macro activity zeta and femto term y:
//   (1-zeta) * E[exp(-(zeta H1 + y) x)] + zeta * E[cond(x) exp(-(zeta Hr + y) x)],
// x = pi lambda_b r^2 distributed as (e^-x - e^-x/R^2)/(1-R^2).
SeriesResult edge_series(double beta, double delta, const RegionThreshold& region, double zeta,
                         double y, const SeriesOptions& opts) {
  detail::require(!region.is_one(), "R", "cell-edge coverage undefined for R = 1");
  detail::require(opts.tol > 0.0, "series.tol", "must be positive");
  detail::require(opts.max_terms >= 2, "series.max_terms", "must be at least 2");
  const double r2 = region.squared();
  const double h1 = kernel_H(beta, delta, RegionThreshold(1.0));
  const double b1 = zeta * h1 + y;
  const double unconditioned = (1.0 - zeta) / (1.0 - r2) * (1.0 / (1.0 + b1) - r2 / (1.0 + r2 * b1));
  if (zeta == 0.0) return {unconditioned, 0, 0.0};

  const double hr = kernel_H(beta, delta, region);
  const double g = kernel_G(beta, delta, region);
  RationalTerms f{};
  f.a = zeta * (1.0 - r2);
  const double base = zeta * r2 * hr + r2 * y;
  int j = 0;
  for (int k = 0; k <= 1; ++k) {
    for (int l = 0; l <= 1; ++l) {
      f.s[j] = ((k + l + 1) % 2 == 0) ? 1.0 : -1.0;
      f.o[j] = k * f.a + (1 - k) * zeta * r2 * g + base + (l == 0 ? 1.0 : r2);
      ++j;
    }
  }
  const double scale = zeta * r2 / (1.0 - r2);

  numerics::CompensatedSum partial;
  auto estimate = [&](int m) {
    return opts.tail_correction ? partial.value() + f.tail_from(m) : partial.value();
  };
  partial.add(f.at(0));
  double prev = estimate(1);
  for (int m = 1; m < opts.max_terms; ++m) {
    partial.add(f.at(m));
    const double cur = estimate(m + 1);
    const double inc = std::abs(cur - prev) * scale;
    if (inc < opts.tol) return {unconditioned + scale * cur, m + 1, inc};
    prev = cur;
  }
  throw NumericalError("cov_ceu_series", "no convergence to tol " + std::to_string(opts.tol) +
                                             " within " + std::to_string(opts.max_terms) +
                                             " terms");
}

double edge_integral(const CoverageInputs& in, double y_density, double rel_tol) {
  in.validate();
  detail::require(!in.region.is_one(), "R", "cell-edge coverage undefined for R = 1");
  const double alpha = 2.0 / in.delta;
  auto integrand = [&](double r) {
    if (r == 0.0) return 0.0;
    const double pdf = pdf_serving_distance_ceu(r, in.lambda_b, in.region);
    if (pdf == 0.0) return 0.0;
    const double s = in.beta * std::pow(r, alpha);
    double lt = (1.0 - in.zeta) * lt_mbs_ceu_dominant_off(s, r, in.zeta, in.lambda_b, in.delta);
    if (in.zeta > 0.0) {
      lt += in.zeta * lt_mbs_ceu_dominant_on(s, r, in.zeta, in.lambda_b, in.delta, in.region);
    }
    return pdf * lt * lt_femto(s, y_density, in.delta, in.p_f_rel);
  };
  const double length = 1.0 / std::sqrt(std::numbers::pi * in.lambda_b);
  numerics::QuadratureOptions q{rel_tol, 1e-15, 4000};
  return numerics::checked(numerics::integrate_to_infinity(integrand, 0.0, length, q),
                           "cov_ceu_integral");
}

double center_closed_form(const CoverageInputs& in) {
  in.validate();
  const double r2 = in.region.squared();
  const double h = in.zeta > 0.0 ? kernel_H(in.beta, in.delta, in.region) : 0.0;
  return 1.0 / (1.0 + in.zeta * r2 * h + r2 * femto_coverage_term(in));
}

CoverageInputs inputs_for(const CoverageModel& m, double beta, double zeta, double lambda_f_eff) {
  CoverageInputs in{beta, m.lambda_b, lambda_f_eff, zeta, m.delta, m.region, m.p_f_rel};
  return in;
}

}  // namespace

void CoverageInputs::validate() const {
  detail::require(beta > 0.0 && std::isfinite(beta), "beta", "SIR threshold must be positive");
  detail::require(lambda_b > 0.0, "lambda_b", "MBS density must be positive");
  detail::require(lambda_f_eff >= 0.0, "lambda_f_eff", "femto density must be nonnegative");
  detail::require(zeta >= 0.0 && zeta <= 1.0, "zeta", "activity factor must lie in [0, 1]");
  detail::require(delta > 0.0 && delta < 1.0, "delta", "must lie in (0, 1)");
  detail::require(p_f_rel > 0.0, "p_f_rel", "must be positive");
}

double femto_coverage_term(const CoverageInputs& in) {
  if (in.lambda_f_eff == 0.0) return 0.0;
  return femto_shape(in.delta) * (in.lambda_f_eff / in.lambda_b) *
         std::pow(in.beta * in.p_f_rel, in.delta);
}

double cov_ccu_ssa(const CoverageInputs& in) { return center_closed_form(in); }

double cov_ccu_csa(const CoverageInputs& in) { return center_closed_form(in); }

SeriesResult cov_ceu_ssa_series(const CoverageInputs& in, const SeriesOptions& opts) {
  in.validate();
  return edge_series(in.beta, in.delta, in.region, in.zeta, 0.0, opts);
}

double cov_ceu_ssa_integral(const CoverageInputs& in, double rel_tol) {
  return edge_integral(in, 0.0, rel_tol);
}

SeriesResult cov_ceu_csa(const CoverageInputs& in, const SeriesOptions& opts) {
  in.validate();
  return edge_series(in.beta, in.delta, in.region, in.zeta, femto_coverage_term(in), opts);
}

double cov_ceu_csa_integral(const CoverageInputs& in, double rel_tol) {
  return edge_integral(in, in.lambda_f_eff, rel_tol);
}

double ccu_coverage(const CoverageModel& m, double beta, double zeta) {
  const double lf = femto_density_ccu(m.policy, m.lambda_f, m.channels);
  const auto in = inputs_for(m, beta, zeta, lf);
  return is_shared(m.policy) ? cov_ccu_ssa(in) : cov_ccu_csa(in);
}

double ceu_coverage(const CoverageModel& m, double beta, double zeta, const SeriesOptions& opts) {
  const double lf = femto_density_ceu(m.policy, m.lambda_f, m.channels);
  const auto in = inputs_for(m, beta, zeta, lf);
  return (is_shared(m.policy) ? cov_ceu_ssa_series(in, opts) : cov_ceu_csa(in, opts)).value;
}

CoverageCurve coverage_curve(const CoverageModel& m, const std::vector<double>& thresholds,
                             double zeta_center, double zeta_edge, const SeriesOptions& opts) {
  CoverageCurve c;
  c.thresholds = thresholds;
  c.ccu.reserve(thresholds.size());
  c.ceu.reserve(thresholds.size());
  for (double b : thresholds) {
    c.ccu.push_back(ccu_coverage(m, b, zeta_center));
    c.ceu.push_back(ceu_coverage(m, b, zeta_edge, opts));
  }
  return c;
}

}  // namespace hetnet
