#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "hetnet/load.hpp"
#include "hetnet/scenario.hpp"

namespace hetnet {

/// M/M/n/n queue: `servers` circuits offered `offered_load` erlangs.
struct LossSystem {
  int servers;
  double offered_load;

  LossSystem(int n, double load);
};

/// Erlang-B by the recursion B_k = rho B_{k-1} / (k + rho B_{k-1}), B_0 = 1.
double erlang_b(const LossSystem& system);

/// Two-class loss system with real-valued per-call demands (channels).
/// Class 0 is the cell-center class, class 1 the cell-edge class.
struct MultiClassLossSystem {
  double capacity;
  std::array<double, 2> demands;
  std::array<double, 2> loads;

  void validate() const;
};

struct State2D {
  int s_c;
  int s_e;
  double probability;
};

inline constexpr std::size_t kDefaultMaxStates = 1'000'000;

/// Product-form stationary law over {s : s . n <= N}.
std::vector<State2D> mc2d_state_probs(const MultiClassLossSystem& system,
                                      std::size_t max_states = kDefaultMaxStates);

struct ClassBlocking {
  double center;
  double edge;
};

/// Class blocking: mass of states where one more call of the class would
/// exceed capacity. Summed directly over the blocking states.
ClassBlocking blocking_2d(const MultiClassLossSystem& system,
                          std::size_t max_states = kDefaultMaxStates);

/// Kaufman-Roberts recursion on a grid of 1/resolution channel. Demands and
/// capacity are rounded to the grid; resolution 1 is exact for integer demands.
ClassBlocking kaufman_roberts(const MultiClassLossSystem& system, int resolution = 100);

struct BlockingReport {
  SpectrumPolicy policy;
  double b_ccu = 0.0;
  double b_ceu = 0.0;
  double b_network = 0.0;
  /// Floored per-band server counts under shared allocation (-1 otherwise).
  int servers_center = -1;
  int servers_edge = -1;
};

struct NetworkBlockingOptions {
  double rel_tol = 1e-7;
  double area_tail = 1e-6;
  double area_shape = kCellAreaShape;
};

/// Blocking averaged over the cell-area law (truncated at its upper
/// `area_tail` quantile). Shared allocation: independent Erlang-B bands with
/// floor(N p_m / nbar_c) and floor(N (1-p_m) / nbar_e) servers. Otherwise the
/// two-class system with capacity N (or N(1 - p_o)).
BlockingReport network_blocking(const ScenarioConfig& config, const LoadSolution& solution,
                                 const NetworkBlockingOptions& opts);

inline BlockingReport network_blocking(const ScenarioConfig& config, const LoadSolution& solution) {
  return network_blocking(config, solution,
                          {config.solver.blocking_rel_tol, config.solver.area_tail, kCellAreaShape});
}

struct FairPmOptions {
  double target_tol = 1e-3;
  double lo = 0.05;
  double hi = 0.95;
  int max_iter = 60;
};

struct FairPmResult {
  double p_m;
  double b_ccu;
  double b_ceu;
  int iterations;
};

/// Bisection over p_m on b_ccu(p_m) - b_ceu(p_m). Throws NumericalError when
/// the bracket shows no sign change or the tolerance is unreachable.
FairPmResult fair_pm_search(const ScenarioConfig& config, const FairPmOptions& opts = {});

}  // namespace hetnet
