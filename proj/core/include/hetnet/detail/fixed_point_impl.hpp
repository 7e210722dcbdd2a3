#pragma once

#include <cmath>
#include <algorithm>
#include <string>

#include "hetnet/errors.hpp"

namespace hetnet {

template <class Phi>
ScalarFixedPoint find_fixed_point(Phi&& phi, const FixedPointOptions& opts) {
  detail::require(opts.tol > 0.0, "tol", "must be positive");
  detail::require(opts.max_iter >= 1, "max_iter", "must be at least 1");
  auto g = [&](double z) { return z - phi(z); };

  if (opts.method == FixedPointMethod::kDampedPicard) {
    detail::require(opts.damping > 0.0 && opts.damping <= 1.0, "damping", "must lie in (0, 1]");
    double z = 0.5;
    for (int it = 1; it <= opts.max_iter; ++it) {
      const double r = g(z);
      if (std::abs(r) < opts.tol) return {z, r, it};
      z = std::clamp(z - opts.damping * r, 0.0, 1.0);
    }
    throw NumericalError("fixed_point", "damped iteration did not converge in " +
                                            std::to_string(opts.max_iter) + " steps");
  }

  double lo = 0.0, hi = 1.0;
  const double g_lo = g(lo);
  if (std::abs(g_lo) < opts.tol) return {lo, g_lo, 1};
  const double g_hi = g(hi);
  if (std::abs(g_hi) < opts.tol) return {hi, g_hi, 2};
  if (g_lo > 0.0 || g_hi < 0.0) {
    throw NumericalError("fixed_point", "bracket [0, 1] is not sign-changing (g(0)=" +
                                            std::to_string(g_lo) + ", g(1)=" +
                                            std::to_string(g_hi) + ")");
  }
  for (int it = 1; it <= opts.max_iter; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double r = g(mid);
    if (std::abs(r) < opts.tol) return {mid, r, it};
    (r < 0.0 ? lo : hi) = mid;
  }
  throw NumericalError("fixed_point", "bisection did not converge in " +
                                          std::to_string(opts.max_iter) + " iterations; last bracket [" +
                                          std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

}  // namespace hetnet
