#pragma once

// Reference implementations used only by tests. They share no code with the
// library: special functions come from Boost.Math, sums are written out.

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>
#include <vector>

namespace oracle {

/// Integral over [z, inf) of du / (1 + u^{1/delta}) as delta * B(t_z; 1 - delta, delta),
/// t_z = 1 / (1 + z^{1/delta}) (incomplete beta, not regularized).
inline double tail_integral(double z, double delta) {
  const double w = std::pow(z, 1.0 / delta);
  const double t = 1.0 / (1.0 + w);
  if (t <= 0.5) return delta * boost::math::beta(1.0 - delta, delta, t);
  // Near t = 1 use the complement, with 1 - t formed without cancellation.
  const double complement = w / (1.0 + w);
  return delta * (boost::math::beta(1.0 - delta, delta) - boost::math::beta(delta, 1.0 - delta, complement));
}

inline double kernel_H(double beta, double delta, double R) {
  const double bd = std::pow(beta, delta);
  return bd * tail_integral(1.0 / (R * R * bd), delta);
}

/// Erlang-B from its closed form in the log domain.
inline double erlang_b_direct(int n, double rho) {
  if (rho == 0.0) return n == 0 ? 1.0 : 0.0;
  std::vector<double> logs(n + 1);
  double peak = -HUGE_VAL;
  for (int k = 0; k <= n; ++k) {
    logs[k] = k * std::log(rho) - std::lgamma(k + 1.0);
    peak = std::max(peak, logs[k]);
  }
  double z = 0.0;
  for (double l : logs) z += std::exp(l - peak);
  return std::exp(logs[n] - peak) / z;
}

inline double gamma_p(double s, double x) { return boost::math::gamma_p(s, x); }
inline double gamma_q(double s, double x) { return boost::math::gamma_q(s, x); }

/// Simpson's rule on [a, b] with n (even) panels.
template <class F>
double simpson(F&& f, double a, double b, int n) {
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

}  // namespace oracle
