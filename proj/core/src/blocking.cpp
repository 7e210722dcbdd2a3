#include "hetnet/blocking.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hetnet/errors.hpp"
#include "hetnet/numerics/quadrature.hpp"
#include "hetnet/numerics/summation.hpp"

namespace hetnet {
namespace {

// Fit tolerance for s . n <= N with real demands: absorbs rounding in s . n.
constexpr double kFitEps = 1e-12;

bool fits(double used, double capacity) { return used <= capacity * (1.0 + kFitEps) + kFitEps; }

double erlang_b_recursive(int servers, double rho) {
  if (rho == 0.0) return servers == 0 ? 1.0 : 0.0;
  double b = 1.0;
  for (int k = 1; k <= servers; ++k) b = rho * b / (k + rho * b);
  return b;
}

// Visits every state of {s : s . n <= N} with its unnormalized log weight.
template <class Visit>
std::size_t for_each_state(const MultiClassLossSystem& sys, std::size_t max_states, Visit&& visit) {
  const double n_c = sys.demands[0];
  const double n_e = sys.demands[1];
  const double log_c = sys.loads[0] > 0.0 ? std::log(sys.loads[0]) : 0.0;
  const double log_e = sys.loads[1] > 0.0 ? std::log(sys.loads[1]) : 0.0;
  const int max_e =
      sys.loads[1] > 0.0 ? static_cast<int>(std::floor(sys.capacity / n_e + kFitEps)) + 1 : 0;
  std::size_t count = 0;
  for (int s_e = 0; s_e <= max_e; ++s_e) {
    if (!fits(s_e * n_e, sys.capacity)) break;
    const double le = s_e * log_e - std::lgamma(s_e + 1.0);
    const int max_c = sys.loads[0] > 0.0
                          ? static_cast<int>(std::floor((sys.capacity - s_e * n_e) / n_c + kFitEps)) + 1
                          : 0;
    for (int s_c = 0; s_c <= max_c; ++s_c) {
      if (!fits(s_c * n_c + s_e * n_e, sys.capacity)) break;
      if (++count > max_states) {
        throw NumericalError("mc2d_state_probs",
                             "state space exceeds cap of " + std::to_string(max_states));
      }
      visit(s_c, s_e, s_c * log_c - std::lgamma(s_c + 1.0) + le);
    }
  }
  return count;
}

}  // namespace

LossSystem::LossSystem(int n, double load) : servers(n), offered_load(load) {
  detail::require(n >= 1, "servers", "must be at least 1");
  detail::require(load >= 0.0 && std::isfinite(load), "offered_load", "must be nonnegative");
}

double erlang_b(const LossSystem& system) {
  return erlang_b_recursive(system.servers, system.offered_load);
}

void MultiClassLossSystem::validate() const {
  detail::require(demands[0] > 0.0 && demands[1] > 0.0, "class_demands", "must be positive");
  detail::require(loads[0] >= 0.0 && loads[1] >= 0.0, "class_loads", "must be nonnegative");
  detail::require(std::isfinite(loads[0]) && std::isfinite(loads[1]), "class_loads",
                  "must be finite");
  detail::require(capacity > std::max(demands[0], demands[1]), "capacity",
                  "must exceed the largest demand");
}

std::vector<State2D> mc2d_state_probs(const MultiClassLossSystem& system, std::size_t max_states) {
  system.validate();
  std::vector<State2D> states;
  std::vector<double> logs;
  double peak = -HUGE_VAL;
  for_each_state(system, max_states, [&](int c, int e, double lw) {
    states.push_back({c, e, 0.0});
    logs.push_back(lw);
    peak = std::max(peak, lw);
  });
  numerics::CompensatedSum z;
  for (std::size_t i = 0; i < states.size(); ++i) {
    states[i].probability = std::exp(logs[i] - peak);
    z.add(states[i].probability);
  }
  const double norm = z.value();
  for (auto& s : states) s.probability /= norm;
  return states;
}

ClassBlocking blocking_2d(const MultiClassLossSystem& system, std::size_t max_states) {
  system.validate();
  // Two passes: the first finds the peak log weight for a stable exp.
  double peak = -HUGE_VAL;
  for_each_state(system, max_states, [&](int, int, double lw) { peak = std::max(peak, lw); });
  numerics::CompensatedSum z, blocked_c, blocked_e;
  const double n_c = system.demands[0];
  const double n_e = system.demands[1];
  for_each_state(system, max_states, [&](int c, int e, double lw) {
    const double w = std::exp(lw - peak);
    z.add(w);
    const double used = c * n_c + e * n_e;
    if (!fits(used + n_c, system.capacity)) blocked_c.add(w);
    if (!fits(used + n_e, system.capacity)) blocked_e.add(w);
  });
  return {blocked_c.value() / z.value(), blocked_e.value() / z.value()};
}

ClassBlocking kaufman_roberts(const MultiClassLossSystem& system, int resolution) {
  system.validate();
  detail::require(resolution >= 1, "resolution", "must be at least 1");
  const long cap = static_cast<long>(std::floor(system.capacity * resolution + 1e-9));
  std::array<long, 2> b{};
  for (int k = 0; k < 2; ++k) {
    b[k] = std::lround(system.demands[k] * resolution);
    if (b[k] < 1) {
      throw NumericalError("kaufman_roberts", "grid resolution " + std::to_string(resolution) +
                                                  " too coarse for demand " +
                                                  std::to_string(system.demands[k]));
    }
  }
  std::vector<double> q(static_cast<std::size_t>(cap) + 1, 0.0);
  q[0] = 1.0;
  for (long j = 1; j <= cap; ++j) {
    double v = 0.0;
    for (int k = 0; k < 2; ++k) {
      if (j >= b[k]) v += system.loads[k] * static_cast<double>(b[k]) * q[j - b[k]];
    }
    q[j] = v / static_cast<double>(j);
    if (q[j] > 1e250) {
      for (long i = 0; i <= j; ++i) q[i] *= 1e-250;
    }
  }
  numerics::CompensatedSum z, bc, be;
  for (long j = 0; j <= cap; ++j) {
    z.add(q[j]);
    if (j + b[0] > cap) bc.add(q[j]);
    if (j + b[1] > cap) be.add(q[j]);
  }
  return {bc.value() / z.value(), be.value() / z.value()};
}

BlockingReport network_blocking(const ScenarioConfig& config, const LoadSolution& solution,
                                const NetworkBlockingOptions& opts) {
  config.validate();
  BlockingReport rep;
  rep.policy = config.policy;
  const double r2 = config.region * config.region;
  const double lc = config.lambda_center() / config.mu;  // erlangs per m^2
  const double le = config.lambda_edge() / config.mu;
  const double n = config.channels;
  const double a_max = cell_area_quantile_upper(config.lambda_b, opts.area_tail, opts.area_shape);
  const double mean = 1.0 / config.lambda_b;
  // Panels at the mean and one standard deviation either side keep a
  // concentrated area law from falling between quadrature nodes.
  const double sd = mean / std::sqrt(opts.area_shape);
  std::vector<double> breaks = {0.0, std::max(0.0, mean - sd), mean, std::min(a_max, mean + sd), a_max};
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  numerics::QuadratureOptions q{opts.rel_tol, 1e-300, 4000};

  auto average = [&](auto&& blocking_at, const char* stage) {
    auto f = [&](double a) {
      const double pdf = cell_area_pdf(a, config.lambda_b, opts.area_shape);
      return pdf == 0.0 ? 0.0 : pdf * blocking_at(a);
    };
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < breaks.size(); ++i) {
      total += numerics::checked(numerics::integrate(f, breaks[i], breaks[i + 1], q), stage);
    }
    return std::clamp(total, 0.0, 1.0);
  };

  if (config.lambda_m == 0.0) {
    if (const auto* s = std::get_if<SharedSpectrum>(&config.policy)) {
      rep.servers_center = static_cast<int>(std::floor(n * s->p_m / solution.nbar_c));
      rep.servers_edge = static_cast<int>(std::floor(n * (1.0 - s->p_m) / solution.nbar_e));
    }
    return rep;
  }

  if (const auto* s = std::get_if<SharedSpectrum>(&config.policy)) {
    const int sc = static_cast<int>(std::floor(n * s->p_m / solution.nbar_c));
    const int se = static_cast<int>(std::floor(n * (1.0 - s->p_m) / solution.nbar_e));
    rep.servers_center = sc;
    rep.servers_edge = se;
    rep.b_ccu = sc == 0 ? 1.0
                        : average([&](double a) { return erlang_b_recursive(sc, a * lc); },
                                  "network_blocking.ccu");
    rep.b_ceu = se == 0 ? 1.0
                        : average([&](double a) { return erlang_b_recursive(se, a * le); },
                                  "network_blocking.ceu");
  } else {
    const double cap = macro_channels(config.policy, n);
    auto system_at = [&](double a) {
      return MultiClassLossSystem{cap, {solution.nbar_c, solution.nbar_e}, {a * lc, a * le}};
    };
    auto fits_at_all = [&](double demand) { return demand <= cap; };
    rep.b_ccu = !fits_at_all(solution.nbar_c)
                    ? 1.0
                    : average([&](double a) { return blocking_2d(system_at(a)).center; },
                              "network_blocking.ccu");
    rep.b_ceu = !fits_at_all(solution.nbar_e)
                    ? 1.0
                    : average([&](double a) { return blocking_2d(system_at(a)).edge; },
                              "network_blocking.ceu");
  }
  rep.b_network = r2 * rep.b_ccu + (1.0 - r2) * rep.b_ceu;
  return rep;
}

FairPmResult fair_pm_search(const ScenarioConfig& config, const FairPmOptions& opts) {
  detail::require(std::holds_alternative<SharedSpectrum>(config.policy), "policy",
                  "fair p_m search requires shared allocation");
  detail::require(opts.target_tol > 0.0, "target_tol", "must be positive");
  detail::require(0.0 < opts.lo && opts.lo < opts.hi && opts.hi < 1.0, "bracket",
                  "need 0 < lo < hi < 1");
  int evaluations = 0;
  auto eval = [&](double p) {
    ScenarioConfig c = config;
    c.policy = SharedSpectrum{p};
    const auto sol = solve_fixed_point(c);
    const auto b = network_blocking(c, sol);
    ++evaluations;
    return FairPmResult{p, b.b_ccu, b.b_ceu, evaluations};
  };
  auto gap = [](const FairPmResult& r) { return r.b_ccu - r.b_ceu; };

  auto lo = eval(opts.lo);
  if (std::abs(gap(lo)) < opts.target_tol) return lo;
  auto hi = eval(opts.hi);
  if (std::abs(gap(hi)) < opts.target_tol) return hi;
  if (gap(lo) < 0.0 || gap(hi) > 0.0) {
    throw NumericalError("fair_pm", "b_ccu - b_ceu has no sign change on [" +
                                        std::to_string(opts.lo) + ", " + std::to_string(opts.hi) +
                                        "]; fairness unattainable for this scenario");
  }
  for (int it = 0; it < opts.max_iter; ++it) {
    const auto mid = eval(0.5 * (lo.p_m + hi.p_m));
    if (std::abs(gap(mid)) < opts.target_tol) return mid;
    (gap(mid) > 0.0 ? lo : hi) = mid;
  }
  throw NumericalError("fair_pm", "|b_ccu - b_ceu| stayed above " + std::to_string(opts.target_tol) +
                                      " (blocking jumps at p_m in [" + std::to_string(lo.p_m) +
                                      ", " + std::to_string(hi.p_m) + "])");
}

}  // namespace hetnet
