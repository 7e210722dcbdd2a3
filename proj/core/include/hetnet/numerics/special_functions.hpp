#pragma once

namespace hetnet::numerics {

/// Regularized lower incomplete gamma P(s, x) = gamma(s, x) / Gamma(s).
double gamma_p(double s, double x);

/// Regularized upper incomplete gamma Q(s, x) = Gamma(s, x) / Gamma(s).
double gamma_q(double s, double x);

/// Lower incomplete gamma gamma(s, x).
double lower_incomplete_gamma(double s, double x);

/// Upper incomplete gamma Gamma(s, x).
double upper_incomplete_gamma(double s, double x);

/// Smallest x with Q(s, x) <= tail, found by bisection on the monotone Q.
double gamma_q_inverse(double s, double tail);

}  // namespace hetnet::numerics
