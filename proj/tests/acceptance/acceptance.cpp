// Acceptance checks, one PASS/FAIL line per criterion.
//
//   acceptance        run all criteria
//   acceptance <id>   run one criterion (1-9)
//
// Tolerances are fixed below; nothing is read from the environment.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "hetnet/blocking.hpp"
#include "hetnet/coverage.hpp"
#include "hetnet/energy.hpp"
#include "hetnet/errors.hpp"
#include "hetnet/interference.hpp"
#include "hetnet/load.hpp"
#include "hetnet/montecarlo.hpp"
#include "hetnet/numerics/quadrature.hpp"
#include "hetnet/numerics/special_functions.hpp"
#include "hetnet/report.hpp"
#include "oracles.hpp"

using namespace hetnet;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " FAILED[" << what << "]";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

const std::vector<double> kLambdaMGrid = {0.5e-4, 1e-4, 1.5e-4, 2e-4, 2.5e-4, 3e-4, 3.5e-4, 4e-4};

// 1. Fraction of cell-center users among 1e5 dropped users.
void classification_law(Outcome& o) {
  constexpr double kTol = 0.01;
  constexpr double kMaxSeconds = 10.0;
  const auto t0 = Clock::now();
  OutageScenario s;
  s.lambda_f = 0.0;
  s.zeta_center = s.zeta_edge = 0.0;
  OutageOptions opts;
  opts.trials = 100'000;
  opts.seed = 101;
  const auto r = simulate_outage(s, opts);
  const double dt = seconds_since(t0);
  const double frac = r.ccu_fraction.mean;
  o.detail << "ccu_fraction=" << fmt(frac) << " (target 0.50 +/- " << kTol << "), runtime " << fmt(dt)
           << " s";
  o.check(std::abs(frac - 0.5) <= kTol, "fraction");
  o.check(dt < kMaxSeconds, "runtime");
}

// 2. Analytic outage vs simulated outage at fixed activity factors.
void coverage_validation(Outcome& o) {
  constexpr double kTol = 0.02;
  constexpr double kMaxSeconds = 300.0;
  const auto t0 = Clock::now();
  double worst = 0.0;
  std::string worst_at;
  for (double zeta : {0.1, 1.0}) {
    for (double ratio : {10.0, 50.0, 100.0}) {
      ScenarioConfig c;
      c.lambda_f = ratio * c.lambda_b;
      c.policy = SharedSpectrum{0.4};
      OutageOptions opts;
      opts.trials = 100'000;
      opts.seed = 200 + static_cast<std::uint64_t>(ratio + 1000 * zeta);
      opts.thresholds = {1.0};
      const auto sim = simulate_outage(OutageScenario::from_config(c, zeta, zeta), opts);
      const auto m = c.coverage_model();
      const double a_c = 1.0 - ccu_coverage(m, 1.0, zeta);
      const double a_e = 1.0 - ceu_coverage(m, 1.0, zeta);
      const double d_c = std::abs(a_c - sim.ccu_outage[0].mean);
      const double d_e = std::abs(a_e - sim.ceu_outage[0].mean);
      o.detail << "\n    zeta=" << zeta << " lf/lb=" << ratio << ": ccu " << fmt(a_c) << " vs "
               << fmt(sim.ccu_outage[0].mean) << ", ceu " << fmt(a_e) << " vs "
               << fmt(sim.ceu_outage[0].mean);
      for (double d : {d_c, d_e}) {
        if (d > worst) {
          worst = d;
          worst_at = "zeta=" + fmt(zeta) + " lf/lb=" + fmt(ratio);
        }
      }
    }
  }
  const double dt = seconds_since(t0);
  o.detail << "\n    max |analytic - simulated| = " << fmt(worst) << " at " << worst_at
           << " (tol " << kTol << "), runtime " << fmt(dt) << " s";
  o.check(worst <= kTol, "agreement");
  o.check(dt < kMaxSeconds, "runtime");
}

// 3. Edge-coverage series against the integral form.
void series_vs_integral(Outcome& o) {
  constexpr double kTol = 1e-6;
  constexpr int kMaxTerms = 10;
  double worst = 0.0;
  int terms = 0;
  for (double beta : {0.1, 1.0, 10.0}) {
    for (double zeta : {0.1, 0.5, 1.0}) {
      CoverageInputs in;
      in.beta = beta;
      in.zeta = zeta;
      const auto s = cov_ceu_ssa_series(in, SeriesOptions{1e-8, 1000, true});
      worst = std::max(worst, std::abs(s.value - cov_ceu_ssa_integral(in)));
      terms = std::max(terms, s.terms);
    }
  }
  o.detail << "max |series - integral| = " << fmt(worst) << " (tol " << kTol
           << "), max terms = " << terms << " (limit " << kMaxTerms << ")";
  o.check(worst < kTol, "agreement");
  o.check(terms <= kMaxTerms, "terms");
}

// 4. Policy reductions at equal activity factors.
void reduction_identities(Outcome& o) {
  constexpr double kTol = 1e-12;
  double worst_ssa = 0.0, worst_osa = 0.0;
  for (double beta : {0.1, 1.0, 10.0}) {
    for (double zeta : {0.0, 0.1, 0.5, 1.0}) {
      CoverageModel ssa, csa, csa0, osa;
      ssa.policy = SharedSpectrum{1.0};
      csa.policy = CoChannelSpectrum{};
      csa0.policy = CoChannelSpectrum{};
      csa0.lambda_f = 0.0;
      osa.policy = OrthogonalSpectrum{0.0};
      ssa.lambda_f = csa.lambda_f;
      worst_ssa = std::max(worst_ssa, std::abs(ccu_coverage(ssa, beta, zeta) - ccu_coverage(csa, beta, zeta)));
      // The shared edge band carries no femtos: compare against the
      // femto-free co-channel case.
      worst_ssa = std::max(worst_ssa, std::abs(ceu_coverage(ssa, beta, zeta) - ceu_coverage(csa0, beta, zeta)));
      // Femto-free shared edge equals the co-channel series with the femto
      // term at zero density.
      CoverageInputs in;
      in.beta = beta;
      in.zeta = zeta;
      worst_ssa = std::max(worst_ssa, std::abs(cov_ceu_ssa_series(in).value - cov_ceu_csa(in).value));
      worst_osa = std::max(worst_osa, std::abs(ccu_coverage(csa0, beta, zeta) - ccu_coverage(osa, beta, zeta)));
      worst_osa = std::max(worst_osa, std::abs(ceu_coverage(csa0, beta, zeta) - ceu_coverage(osa, beta, zeta)));
    }
  }
  // Whole pipeline: co-channel without femtos vs orthogonal with p_o = 0.
  ScenarioConfig a, b;
  a.policy = CoChannelSpectrum{};
  a.lambda_f = 0.0;
  b.policy = OrthogonalSpectrum{0.0};
  const auto ra = run_scenario(a);
  const auto rb = run_scenario(b);
  const double pipe = std::max({std::abs(ra.load.zeta_center - rb.load.zeta_center),
                                std::abs(ra.coverage_ccu - rb.coverage_ccu),
                                std::abs(ra.coverage_ceu - rb.coverage_ceu),
                                std::abs(ra.blocking.b_network - rb.blocking.b_network),
                                std::abs(*ra.energy.eta - *rb.energy.eta) / *ra.energy.eta});
  o.detail << "SSA(p_m=1) vs CSA max diff " << fmt(worst_ssa) << "; CSA(lf=0) vs OSA(p_o=0) max diff "
           << fmt(worst_osa) << "; pipeline max diff " << fmt(pipe) << " (tol " << kTol << ")";
  o.check(worst_ssa <= kTol, "ssa-csa");
  o.check(worst_osa <= kTol, "csa-osa");
  o.check(pipe <= kTol, "pipeline");
}

// 5. Fixed point along the arrival-density sweep.
void fixed_point(Outcome& o) {
  constexpr double kTol = 1e-6;
  constexpr int kMaxIter = 60;
  double worst_res = 0.0;
  int worst_it = 0;
  bool mono = true;
  for (SpectrumPolicy p : {SpectrumPolicy{SharedSpectrum{0.4}}, SpectrumPolicy{CoChannelSpectrum{}}}) {
    double pc = -1.0, pe = -1.0;
    o.detail << "\n    " << policy_name(p) << ":";
    for (double lm : kLambdaMGrid) {
      ScenarioConfig c;
      c.policy = p;
      c.lambda_m = lm;
      const auto s = solve_fixed_point(c, c.mcs(), {kTol, kMaxIter});
      worst_res = std::max(worst_res, s.residual);
      worst_it = std::max(worst_it, s.iterations);
      mono = mono && s.zeta_center >= pc && s.zeta_edge >= pe;
      pc = s.zeta_center;
      pe = s.zeta_edge;
      o.detail << " (" << fmt(lm) << ": " << fmt(s.zeta_center) << ", " << fmt(s.zeta_edge) << ")";
    }
  }
  o.detail << "\n    max residual " << fmt(worst_res) << ", max iterations " << worst_it
           << ", monotone " << (mono ? "yes" : "no");
  o.check(worst_res < kTol, "residual");
  o.check(worst_it <= kMaxIter, "iterations");
  o.check(mono, "monotone");
}

// 6. Blocking evaluators against each other and against simulation.
void blocking_machinery(Outcome& o) {
  constexpr double kTol = 1e-12;
  constexpr double kSigmas = 3.0;
  double eb = 0.0;
  for (int n = 1; n <= 200; ++n) {
    for (double ratio : {0.1, 0.5, 0.9, 1.0, 1.3, 3.0}) {
      const double rho = ratio * n;
      eb = std::max(eb, std::abs(erlang_b(LossSystem(n, rho)) - oracle::erlang_b_direct(n, rho)));
    }
  }
  double kr = 0.0;
  for (std::array<double, 2> d : {std::array<double, 2>{1, 1}, {1, 2}, {2, 3}, {1, 4}, {3, 5}}) {
    for (std::array<double, 2> l : {std::array<double, 2>{5, 3}, {15, 8}, {30, 12}}) {
      const MultiClassLossSystem sys{50, d, l};
      const auto a = blocking_2d(sys);
      const auto b = kaufman_roberts(sys, 1);
      kr = std::max({kr, std::abs(a.center - b.center), std::abs(a.edge - b.edge)});
    }
  }
  double worst_z = 0.0;
  int point = 0;
  for (MultiClassLossSystem sys : {MultiClassLossSystem{50, {1.4, 2.3}, {12.0, 6.0}},
                                   MultiClassLossSystem{50, {1.4, 2.3}, {18.0, 9.0}},
                                   MultiClassLossSystem{50, {1.4, 2.3}, {24.0, 12.0}}}) {
    const auto exact = blocking_2d(sys);
    LossSimOptions opts;
    opts.minutes = 50'000;
    opts.seed = 600 + point++;
    const auto sim = simulate_loss_system(sys, opts);
    const double zc = std::abs(sim.blocking_center.mean - exact.center) / sim.blocking_center.std_error;
    const double ze = std::abs(sim.blocking_edge.mean - exact.edge) / sim.blocking_edge.std_error;
    worst_z = std::max({worst_z, zc, ze});
    o.detail << "\n    load " << sys.loads[0] << "/" << sys.loads[1] << ": b_c " << fmt(exact.center)
             << " vs " << fmt(sim.blocking_center.mean) << ", b_e " << fmt(exact.edge) << " vs "
             << fmt(sim.blocking_edge.mean);
  }
  o.detail << "\n    Erlang-B recursion vs direct " << fmt(eb) << "; Kaufman-Roberts vs enumeration "
           << fmt(kr) << " (tol " << kTol << "); worst simulation z " << fmt(worst_z) << " (limit "
           << kSigmas << ")";
  o.check(eb <= kTol, "erlang-b");
  o.check(kr <= kTol, "kaufman-roberts");
  o.check(worst_z <= kSigmas, "simulation");
}

// 7. Qualitative trends at the default scenario.
void figure_trends(Outcome& o) {
  {
    ScenarioConfig c;
    c.policy = CoChannelSpectrum{};
    const auto r = run_scenario(c);
    o.detail << "(a) csa b_ccu " << fmt(r.blocking.b_ccu) << " b_ceu " << fmt(r.blocking.b_ceu);
    o.check(r.blocking.b_ceu > r.blocking.b_ccu, "a");
  }
  {
    ScenarioConfig c;
    SweepSpec s;
    s.variable = SweepVariable::kLambdaF;
    s.values = {1e-5, 5e-5, 1e-4, 2.5e-4, 5e-4};
    const auto rows = run_sweep(c, s);
    bool constant = true;
    for (const auto& r : rows) {
      constant = constant && r.ok && r.coverage_ceu == rows[0].coverage_ceu &&
                 r.blocking_ceu == rows[0].blocking_ceu;
    }
    o.detail << "; (b) ssa edge columns constant in lambda_f: " << (constant ? "yes" : "no");
    o.check(constant, "b");
  }
  {
    ScenarioConfig c;
    std::vector<BlockingReport> reps;
    for (double pm : {0.3, 0.4, 0.5}) {
      c.policy = SharedSpectrum{pm};
      reps.push_back(network_blocking(c, solve_fixed_point(c)));
    }
    const bool ok = reps[0].b_ccu > reps[1].b_ccu && reps[1].b_ccu > reps[2].b_ccu &&
                    reps[0].b_ceu < reps[1].b_ceu && reps[1].b_ceu < reps[2].b_ceu;
    o.detail << "; (c) p_m 0.3/0.4/0.5 b_ccu " << fmt(reps[0].b_ccu) << "/" << fmt(reps[1].b_ccu) << "/"
             << fmt(reps[2].b_ccu) << " b_ceu " << fmt(reps[0].b_ceu) << "/" << fmt(reps[1].b_ceu) << "/"
             << fmt(reps[2].b_ceu);
    o.check(ok, "c");
  }
  {
    ScenarioConfig c;
    const auto f = fair_pm_search(c);
    const double gap = std::abs(f.b_ccu - f.b_ceu);
    o.detail << "; (d) fair p_m " << fmt(f.p_m) << " gap " << fmt(gap);
    o.check(gap < 1e-3, "d");
  }
}

// 8. Energy efficiency: shared above co-channel, both falling with load.
void energy_trends(Outcome& o) {
  bool above = true, falling = true;
  for (double rate : {180e3, 360e3}) {
    std::vector<double> es, ec;
    for (double lm : kLambdaMGrid) {
      ScenarioConfig s;
      s.policy = SharedSpectrum{0.3};
      s.rate_bps = rate;
      s.lambda_m = lm;
      ScenarioConfig c = s;
      c.policy = CoChannelSpectrum{};
      es.push_back(run_scenario(s).energy.eta.value_or(NAN));
      ec.push_back(run_scenario(c).energy.eta.value_or(NAN));
    }
    o.detail << "\n    R_th=" << fmt(rate) << " eta_S/eta_C:";
    for (std::size_t i = 0; i < es.size(); ++i) {
      o.detail << " " << fmt(es[i]) << "/" << fmt(ec[i]);
      above = above && es[i] > ec[i];
      if (i > 0) falling = falling && es[i] < es[i - 1] && ec[i] < ec[i - 1];
    }
  }
  o.detail << "\n    eta_S > eta_C everywhere: " << (above ? "yes" : "no")
           << "; both decreasing in lambda_m: " << (falling ? "yes" : "no");
  o.check(above, "ssa-above-csa");
  o.check(falling, "decreasing");
}

// 9. Special functions, densities, kernel.
void numerics_checks(Outcome& o) {
  constexpr double kGammaTol = 1e-12;
  constexpr double kPdfTol = 1e-9;
  constexpr double kKernelTol = 1e-9;
  double g = 0.0;
  for (double s : {3.5, 4.5}) {
    for (double x = 1e-3; x <= 50.0; x *= 1.1) {
      const double sum = numerics::lower_incomplete_gamma(s, x) + numerics::upper_incomplete_gamma(s, x);
      g = std::max(g, std::abs(sum / std::tgamma(s) - 1.0));
    }
  }
  double pdf = 0.0;
  const numerics::QuadratureOptions q{1e-13, 0.0, 4000};
  for (double lb : {1e-6, 5e-6, 5e-5}) {
    const double len = 1.0 / std::sqrt(std::numbers::pi * lb);
    auto area = numerics::integrate_to_infinity([&](double a) { return cell_area_pdf(a, lb); }, 0.0, 1.0 / lb, q);
    pdf = std::max(pdf, std::abs(area.value - 1.0));
    for (double R : {0.3, 0.707, 0.95}) {
      const RegionThreshold r(R);
      auto c = numerics::integrate_to_infinity([&](double x) { return pdf_serving_distance_ccu(x, lb, r); }, 0.0, len, q);
      auto e = numerics::integrate_to_infinity([&](double x) { return pdf_serving_distance_ceu(x, lb, r); }, 0.0, len, q);
      pdf = std::max({pdf, std::abs(c.value - 1.0), std::abs(e.value - 1.0)});
    }
  }
  double k = 0.0;
  for (double R : {0.3, 0.707, 1.0}) {
    for (double lb = -3.0; lb <= 3.0 + 1e-9; lb += 0.1) {
      const double beta = std::pow(10.0, lb);
      const double a = kernel_H(beta, 0.5, RegionThreshold(R), KernelMethod::kClosedForm);
      const double b = kernel_H(beta, 0.5, RegionThreshold(R), KernelMethod::kQuadrature);
      k = std::max(k, std::abs(b / a - 1.0));
    }
  }
  o.detail << "incomplete gamma identity " << fmt(g) << " (tol " << kGammaTol << "); pdf mass error "
           << fmt(pdf) << " (tol " << kPdfTol << "); kernel closed form vs quadrature " << fmt(k)
           << " (tol " << kKernelTol << ")";
  o.check(g <= kGammaTol, "gamma");
  o.check(pdf <= kPdfTol, "pdf");
  o.check(k <= kKernelTol, "kernel");
}

struct Criterion {
  int id;
  const char* name;
  std::function<void(Outcome&)> run;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "classification-law", classification_law},
      {2, "coverage-vs-simulation", coverage_validation},
      {3, "series-vs-integral", series_vs_integral},
      {4, "reduction-identities", reduction_identities},
      {5, "fixed-point", fixed_point},
      {6, "blocking-machinery", blocking_machinery},
      {7, "figure-trends", figure_trends},
      {8, "energy-efficiency", energy_trends},
      {9, "numerics", numerics_checks},
  };
  return all;
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  if (argc > 1) {
    only = std::atoi(argv[1]);
    if (only < 1 || only > 9) {
      std::fprintf(stderr, "usage: %s [criterion 1-9]\n", argv[0]);
      return 2;
    }
  }
  int failures = 0;
  for (const auto& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    const auto t0 = Clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    std::printf("[%s] %d %s (%.1f s): %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, seconds_since(t0),
                o.detail.str().c_str());
    std::fflush(stdout);
    failures += o.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
