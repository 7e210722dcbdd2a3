#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>

#include "hetnet/errors.hpp"
#include "hetnet/montecarlo.hpp"
#include "hetnet/parallel.hpp"

namespace hetnet {
namespace {

struct Admission {
  bool by_servers = false;
  std::array<int, 2> servers{0, 0};
  double capacity = 0.0;
};

struct BatchTally {
  std::array<double, 2> occupancy{0.0, 0.0};  // time integral of occupied channels
  std::array<std::uint64_t, 2> arrivals{0, 0};
  std::array<std::uint64_t, 2> blocked{0, 0};
};

struct Call {
  int cls;
  double demand;
};

// Gillespie simulation of one loss system with two Poisson classes and
// exponential holding. Statistics are kept for [warm, end] split into batches.
template <class Demand>
std::vector<BatchTally> run_cell(std::array<double, 2> rates, double mu, const Admission& adm,
                                 Demand&& demand, double warm, double end, int batches, Rng& rng) {
  std::vector<BatchTally> out(static_cast<std::size_t>(batches));
  const double width = (end - warm) / batches;
  auto batch_of = [&](double t) {
    return std::min(batches - 1, static_cast<int>((t - warm) / width));
  };
  std::vector<Call> active;
  std::array<double, 2> occ{0.0, 0.0};
  std::array<int, 2> count{0, 0};
  std::exponential_distribution<double> unit_exp(1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  auto accumulate = [&](double a, double b) {
    a = std::max(a, warm);
    b = std::min(b, end);
    while (a < b) {
      const int k = batch_of(a);
      const double stop = std::min(b, warm + (k + 1) * width);
      for (int c = 0; c < 2; ++c) out[k].occupancy[c] += occ[c] * (stop - a);
      if (stop <= a) break;
      a = stop;
    }
  };

  double t = 0.0;
  const double arrival_rate = rates[0] + rates[1];
  for (;;) {
    const double total = arrival_rate + mu * static_cast<double>(active.size());
    const double dt = total > 0.0 ? unit_exp(rng) / total : std::numeric_limits<double>::infinity();
    accumulate(t, t + dt);
    t += dt;
    if (t >= end) break;
    const double u = unit(rng) * total;
    if (u < arrival_rate) {
      const int k = u < rates[0] ? 0 : 1;
      const double d = demand(k, rng);
      bool admit;
      if (adm.by_servers) {
        admit = count[k] < adm.servers[k];
      } else {
        const double used = occ[0] + occ[1] + d;
        admit = used <= adm.capacity * (1.0 + 1e-12) + 1e-12;
      }
      if (t >= warm) {
        auto& b = out[batch_of(t)];
        ++b.arrivals[k];
        if (!admit) ++b.blocked[k];
      }
      if (admit) {
        active.push_back({k, d});
        occ[k] += d;
        ++count[k];
      }
    } else {
      const auto i = std::min(active.size() - 1,
                              static_cast<std::size_t>(unit(rng) * static_cast<double>(active.size())));
      const Call gone = active[i];
      active[i] = active.back();
      active.pop_back();
      --count[gone.cls];
      occ[gone.cls] = count[gone.cls] == 0 ? 0.0 : occ[gone.cls] - gone.demand;
    }
  }
  return out;
}

struct CellStats {
  std::array<double, 2> activity;
  std::array<double, 2> blocking;
  double drift;
  std::uint64_t arrivals;
};

// Uniform bucket grid for nearest-point queries.
class BucketGrid {
 public:
  BucketGrid(const std::vector<Point2>& pts, double half_width, double cell)
      : pts_(pts), origin_(-half_width), cell_(cell),
        n_(std::max(1, static_cast<int>(std::ceil(2.0 * half_width / cell)))),
        buckets_(static_cast<std::size_t>(n_) * n_) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
      buckets_[index(ix(pts[i].x), ix(pts[i].y))].push_back(i);
    }
  }

  std::size_t nearest(Point2 p) const {
    const int cx = ix(p.x), cy = ix(p.y);
    double best = std::numeric_limits<double>::infinity();
    std::size_t arg = 0;
    for (int ring = 0; ring <= n_; ++ring) {
      for (int gx = cx - ring; gx <= cx + ring; ++gx) {
        for (int gy = cy - ring; gy <= cy + ring; ++gy) {
          if (std::max(std::abs(gx - cx), std::abs(gy - cy)) != ring) continue;
          if (gx < 0 || gy < 0 || gx >= n_ || gy >= n_) continue;
          for (std::size_t i : buckets_[index(gx, gy)]) {
            const double d = squared_distance(pts_[i], p);
            if (d < best) {
              best = d;
              arg = i;
            }
          }
        }
      }
      // Points outside ring r are at least r * cell away.
      const double reach = ring * cell_;
      if (best <= reach * reach) break;
    }
    return arg;
  }

 private:
  int ix(double v) const { return std::clamp(static_cast<int>((v - origin_) / cell_), 0, n_ - 1); }
  std::size_t index(int x, int y) const { return static_cast<std::size_t>(x) * n_ + y; }

  const std::vector<Point2>& pts_;
  double origin_;
  double cell_;
  int n_;
  std::vector<std::vector<std::size_t>> buckets_;
};

}  // namespace

std::vector<double> sample_voronoi_areas(double lambda_b, int cells, std::uint64_t seed,
                                         int probes_per_cell) {
  detail::require(lambda_b > 0.0, "lambda_b", "must be positive");
  detail::require(cells >= 1, "cells", "must be positive");
  detail::require(probes_per_cell >= 1, "probes_per_cell", "must be positive");
  // Cells whose site lies within outer/3 are measured; probes cover outer/2,
  // which contains those cells with overwhelming probability.
  const double outer = 3.0 * std::sqrt(1.1 * cells / (std::numbers::pi * lambda_b));
  const Disk probe_disk{{0.0, 0.0}, 0.5 * outer};
  const double keep2 = outer * outer / 9.0;
  std::vector<double> areas;
  for (std::uint64_t round = 0; static_cast<int>(areas.size()) < cells; ++round) {
    auto rng = make_rng(seed, round);
    std::vector<Point2> sites;
    sample_ppp_into(lambda_b, Disk{{0.0, 0.0}, outer}, rng, sites);
    if (sites.empty()) continue;
    BucketGrid grid(sites, outer, 1.0 / std::sqrt(lambda_b));
    const auto probes = static_cast<std::uint64_t>(probes_per_cell * lambda_b * probe_disk.area());
    std::vector<std::uint64_t> hits(sites.size(), 0);
    for (std::uint64_t i = 0; i < probes; ++i) ++hits[grid.nearest(sample_uniform(probe_disk, rng))];
    const double per_probe = probe_disk.area() / static_cast<double>(probes);
    for (std::size_t i = 0; i < sites.size(); ++i) {
      if (squared_distance(sites[i], {0.0, 0.0}) <= keep2) areas.push_back(hits[i] * per_probe);
    }
  }
  return areas;
}

TemporalResult simulate_temporal(const ScenarioConfig& config, const LoadSolution& solution,
                                 const TemporalOptions& opts) {
  config.validate();
  detail::require(opts.sim_minutes > 0.0, "sim_minutes", "must be positive");
  detail::require(opts.cells >= 2, "cells", "need at least two cells for a standard error");
  detail::require(opts.warmup_fraction >= 0.0 && opts.warmup_fraction < 1.0, "warmup_fraction",
                  "must lie in [0, 1)");
  detail::require(opts.fixed_area >= 0.0, "fixed_area", "must be nonnegative");

  const auto mcs = config.mcs();
  const double n = config.channels;
  Admission adm;
  std::array<double, 2> band{};
  const bool shared = is_shared(config.policy);
  if (const auto* s = std::get_if<SharedSpectrum>(&config.policy)) {
    adm.by_servers = true;
    adm.servers = {static_cast<int>(std::floor(n * s->p_m / solution.nbar_c)),
                   static_cast<int>(std::floor(n * (1.0 - s->p_m) / solution.nbar_e))};
    band = {n * s->p_m, n * (1.0 - s->p_m)};
  } else {
    adm.capacity = macro_channels(config.policy, n);
    band = {adm.capacity, adm.capacity};
  }

  std::array<std::vector<double>, 2> demand_values;
  std::array<std::vector<double>, 2> demand_weights;
  const std::array<const std::vector<double>*, 2> curves = {&solution.mcs_coverage.ccu,
                                                            &solution.mcs_coverage.ceu};
  for (int k = 0; k < 2; ++k) {
    demand_weights[k] = mcs_probabilities(*curves[k]);
    for (std::size_t i = 0; i < mcs.size(); ++i) demand_values[k].push_back(mcs.channels_at(i));
  }
  const std::array<double, 2> means = {solution.nbar_c, solution.nbar_e};

  std::vector<double> voronoi;
  if (opts.fixed_area == 0.0 && opts.area_source == AreaSource::kEmpiricalVoronoi) {
    voronoi = sample_voronoi_areas(config.lambda_b, opts.cells, derive_seed(opts.seed, ~0ull));
  }

  const double warm = opts.warmup_fraction * opts.sim_minutes;
  const double span = opts.sim_minutes - warm;
  std::vector<CellStats> stats(static_cast<std::size_t>(opts.cells));
  parallel_for(stats.size(), opts.threads, [&](std::size_t c) {
    auto rng = make_rng(opts.seed, c);
    double area = opts.fixed_area;
    if (area == 0.0) {
      if (!voronoi.empty()) {
        area = voronoi[c % voronoi.size()];
      } else {
        std::gamma_distribution<double> law(kCellAreaShape, 1.0 / (kCellAreaShape * config.lambda_b));
        area = law(rng);
      }
    }
    std::array<std::discrete_distribution<std::size_t>, 2> pick = {
        std::discrete_distribution<std::size_t>(demand_weights[0].begin(), demand_weights[0].end()),
        std::discrete_distribution<std::size_t>(demand_weights[1].begin(), demand_weights[1].end())};
    auto demand = [&](int k, Rng& r) {
      return opts.demand == DemandModel::kClassMean ? means[k] : demand_values[k][pick[k](r)];
    };
    const std::array<double, 2> rates = {config.lambda_center() * area,
                                         config.lambda_edge() * area};
    const auto halves = run_cell(rates, config.mu, adm, demand, warm, opts.sim_minutes, 2, rng);

    CellStats& cs = stats[c];
    std::array<double, 2> half_activity{};
    for (int h = 0; h < 2; ++h) {
      const auto& o = halves[h].occupancy;
      half_activity[h] = (o[0] + o[1]) / (0.5 * span);
    }
    cs.drift = half_activity[1] - half_activity[0];
    cs.arrivals = 0;
    for (int k = 0; k < 2; ++k) {
      double occ = 0.0;
      std::uint64_t arr = 0, blk = 0;
      for (const auto& h : halves) {
        occ += shared ? h.occupancy[k] : h.occupancy[0] + h.occupancy[1];
        arr += h.arrivals[k];
        blk += h.blocked[k];
      }
      cs.activity[k] = occ / (span * band[k]);
      cs.blocking[k] = arr > 0 ? static_cast<double>(blk) / static_cast<double>(arr) : 0.0;
      cs.arrivals += arr;
    }
  });

  std::array<RunningStats, 2> act, blk;
  RunningStats drift;
  TemporalResult out;
  for (const auto& cs : stats) {
    for (int k = 0; k < 2; ++k) {
      act[k].add(cs.activity[k]);
      blk[k].add(cs.blocking[k]);
    }
    drift.add(cs.drift);
    out.arrivals += cs.arrivals;
  }
  out.activity_center = SimEstimate::from(act[0], opts.seed);
  out.activity_edge = SimEstimate::from(act[1], opts.seed);
  out.blocking_center = SimEstimate::from(blk[0], opts.seed);
  out.blocking_edge = SimEstimate::from(blk[1], opts.seed);
  out.drift_z = drift.std_error() > 0.0 ? drift.mean() / drift.std_error() : 0.0;
  out.stationary = std::abs(out.drift_z) <= 4.0;
  return out;
}

LossSimResult simulate_loss_system(const MultiClassLossSystem& system, const LossSimOptions& opts) {
  system.validate();
  detail::require(opts.minutes > 0.0, "minutes", "must be positive");
  detail::require(opts.warmup_minutes >= 0.0, "warmup_minutes", "must be nonnegative");
  detail::require(opts.batches >= 2, "batches", "need at least two batches");
  detail::require(opts.mu > 0.0, "mu", "must be positive");
  Admission adm;
  adm.capacity = system.capacity;
  auto rng = make_rng(opts.seed);
  auto demand = [&](int k, Rng&) { return system.demands[k]; };
  const std::array<double, 2> rates = {system.loads[0] * opts.mu, system.loads[1] * opts.mu};
  const auto batches = run_cell(rates, opts.mu, adm, demand, opts.warmup_minutes,
                                opts.warmup_minutes + opts.minutes, opts.batches, rng);
  std::array<RunningStats, 2> b;
  for (const auto& t : batches) {
    for (int k = 0; k < 2; ++k) {
      b[k].add(t.arrivals[k] ? static_cast<double>(t.blocked[k]) / static_cast<double>(t.arrivals[k])
                             : 0.0);
    }
  }
  return {SimEstimate::from(b[0], opts.seed), SimEstimate::from(b[1], opts.seed)};
}

}  // namespace hetnet
