#include "hetnet/numerics/special_functions.hpp"

#include <cmath>
#include <limits>

#include "hetnet/errors.hpp"

namespace hetnet::numerics {
namespace {

constexpr int kMaxIterations = 10000;
constexpr double kEps = 1e-16;

void check_args(double s, double x) {
  detail::require(s > 0.0 && std::isfinite(s), "s", "shape must be positive and finite");
  detail::require(x >= 0.0 && !std::isnan(x), "x", "argument must be nonnegative");
}

// P(s, x) by the power series, valid and fast for x < s + 1.
double series_p(double s, double x) {
  double term = 1.0 / s;
  double sum = term;
  for (int n = 1; n < kMaxIterations; ++n) {
    term *= x / (s + n);
    sum += term;
    if (std::abs(term) < std::abs(sum) * kEps) {
      return sum * std::exp(s * std::log(x) - x - std::lgamma(s));
    }
  }
  throw NumericalError("incomplete_gamma", "power series did not converge");
}

// Q(s, x) by the modified Lentz continued fraction, for x >= s + 1.
double continued_fraction_q(double s, double x) {
  constexpr double tiny = std::numeric_limits<double>::min() / kEps;
  double b = x + 1.0 - s;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < kMaxIterations; ++i) {
    const double an = -i * (i - s);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) < kEps) {
      return std::exp(s * std::log(x) - x - std::lgamma(s)) * h;
    }
  }
  throw NumericalError("incomplete_gamma", "continued fraction did not converge");
}

}  // namespace

double gamma_p(double s, double x) {
  check_args(s, x);
  if (x == 0.0) return 0.0;
  if (std::isinf(x)) return 1.0;
  if (x < s + 1.0) return series_p(s, x);
  return 1.0 - continued_fraction_q(s, x);
}

double gamma_q(double s, double x) {
  check_args(s, x);
  if (x == 0.0) return 1.0;
  if (std::isinf(x)) return 0.0;
  if (x < s + 1.0) return 1.0 - series_p(s, x);
  return continued_fraction_q(s, x);
}

double lower_incomplete_gamma(double s, double x) { return gamma_p(s, x) * std::tgamma(s); }

double upper_incomplete_gamma(double s, double x) { return gamma_q(s, x) * std::tgamma(s); }

double gamma_q_inverse(double s, double tail) {
  detail::require(tail > 0.0 && tail < 1.0, "tail", "must lie in (0, 1)");
  double lo = 0.0;
  double hi = s + 1.0;
  while (gamma_q(s, hi) > tail) hi *= 2.0;
  for (int i = 0; i < 200 && hi - lo > 1e-14 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (gamma_q(s, mid) > tail ? lo : hi) = mid;
  }
  return hi;
}

}  // namespace hetnet::numerics
