#include "hetnet/montecarlo.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <ostream>
#include <sstream>
#include <string>

#include "hetnet/errors.hpp"
#include "hetnet/parallel.hpp"

namespace hetnet {
namespace {

// d^{-alpha} from a squared distance.
struct PathGain {
  double half_alpha;
  bool fourth;

  explicit PathGain(double alpha) : half_alpha(0.5 * alpha), fourth(alpha == 4.0) {}

  double operator()(double d2) const {
    return fourth ? 1.0 / (d2 * d2) : std::pow(d2, -half_alpha);
  }
};

struct ChunkTally {
  std::vector<RunningStats> ccu, ceu;
  RunningStats center_share;
  std::string records;
};

}  // namespace

OutageScenario OutageScenario::from_config(const ScenarioConfig& c, double zeta_center,
                                           double zeta_edge) {
  c.validate();
  return {c.lambda_b, c.lambda_f,   static_cast<double>(c.channels), c.policy, c.alpha,
          c.p_f / c.p_b, c.region, zeta_center, zeta_edge};
}

double default_window_radius(double lambda_b, double min_expected_mbs) {
  detail::require(lambda_b > 0.0, "lambda_b", "must be positive");
  detail::require(min_expected_mbs > 0.0, "min_expected_mbs", "must be positive");
  return std::sqrt(min_expected_mbs / (std::numbers::pi * lambda_b));
}

SirSample sample_sir(const OutageScenario& s, double window_radius, UserPlacement placement,
                     double guard_fraction, Rng& rng, std::vector<Point2>& scratch) {
  const Disk window{{0.0, 0.0}, window_radius};
  const RegionThreshold region(s.region);
  const PathGain gain(s.alpha);
  std::exponential_distribution<double> fading(1.0);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  Point2 user{0.0, 0.0};
  if (placement == UserPlacement::kGuardDisk) {
    user = sample_uniform(Disk{{0.0, 0.0}, guard_fraction * window_radius}, rng);
  }
  std::optional<NearestTwo> near;
  do {
    sample_ppp_into(s.lambda_b, window, rng, scratch);
    near = nearest_two(scratch, user);
  } while (!near);
  const UserClass cls = classify_user(near->distances, region);
  const double zeta = cls == UserClass::kCenter ? s.zeta_center : s.zeta_edge;
  const double r0 = near->distances.r_m;
  const double signal = fading(rng) * gain(r0 * r0);

  double interference = 0.0;
  for (std::size_t i = 0; i < scratch.size(); ++i) {
    if (i == near->nearest) continue;
    if (zeta < 1.0 && !(unit(rng) < zeta)) continue;
    interference += fading(rng) * gain(squared_distance(scratch[i], user));
  }
  const double lf = cls == UserClass::kCenter
                        ? femto_density_ccu(s.policy, s.lambda_f, s.channels)
                        : femto_density_ceu(s.policy, s.lambda_f, s.channels);
  if (lf > 0.0) {
    sample_ppp_into(lf, window, rng, scratch);
    double femto = 0.0;
    for (const auto& p : scratch) femto += fading(rng) * gain(squared_distance(p, user));
    interference += s.p_f_rel * femto;
  }
  const double sir =
      interference > 0.0 ? signal / interference : std::numeric_limits<double>::infinity();
  return {cls, sir, r0};
}

OutageResult simulate_outage(const OutageScenario& s, const OutageOptions& opts) {
  detail::require(opts.trials > 0, "trials", "must be positive");
  detail::require(!opts.thresholds.empty(), "thresholds", "need at least one threshold");
  detail::require(opts.chunk_size > 0, "chunk_size", "must be positive");
  detail::require(opts.guard_fraction > 0.0 && opts.guard_fraction <= 1.0, "guard_fraction",
                  "must lie in (0, 1]");
  detail::require(s.zeta_center >= 0.0 && s.zeta_center <= 1.0, "zeta_center",
                  "must lie in [0, 1]");
  detail::require(s.zeta_edge >= 0.0 && s.zeta_edge <= 1.0, "zeta_edge", "must lie in [0, 1]");
  detail::require(s.alpha > 2.0, "alpha", "must exceed 2");
  validate_policy(s.policy);
  (void)RegionThreshold(s.region);

  const double radius = opts.window_radius > 0.0
                            ? opts.window_radius
                            : default_window_radius(s.lambda_b, opts.min_expected_mbs);
  const std::size_t nt = opts.thresholds.size();
  const std::uint64_t chunks = (opts.trials + opts.chunk_size - 1) / opts.chunk_size;
  std::vector<ChunkTally> tallies(chunks);

  parallel_for(chunks, opts.threads, [&](std::size_t c) {
    auto rng = make_rng(opts.seed, c);
    auto& t = tallies[c];
    t.ccu.assign(nt, {});
    t.ceu.assign(nt, {});
    std::vector<Point2> scratch;
    std::ostringstream rec;
    if (opts.records) rec.precision(12);
    const std::uint64_t first = c * opts.chunk_size;
    const std::uint64_t last = std::min(opts.trials, first + opts.chunk_size);
    for (std::uint64_t trial = first; trial < last; ++trial) {
      const auto smp = sample_sir(s, radius, opts.placement, opts.guard_fraction, rng, scratch);
      const bool center = smp.user_class == UserClass::kCenter;
      t.center_share.add(center ? 1.0 : 0.0);
      auto& bucket = center ? t.ccu : t.ceu;
      for (std::size_t j = 0; j < nt; ++j) bucket[j].add(smp.sir <= opts.thresholds[j] ? 1.0 : 0.0);
      if (opts.records) {
        rec << trial << ',' << to_string(smp.user_class) << ',' << smp.sir << ','
            << smp.serving_distance << '\n';
      }
    }
    if (opts.records) t.records = rec.str();
  });

  ChunkTally total;
  total.ccu.assign(nt, {});
  total.ceu.assign(nt, {});
  for (auto& t : tallies) {
    for (std::size_t j = 0; j < nt; ++j) {
      total.ccu[j].merge(t.ccu[j]);
      total.ceu[j].merge(t.ceu[j]);
    }
    total.center_share.merge(t.center_share);
    if (opts.records) *opts.records << t.records;
  }

  const std::uint64_t n_ccu = total.ccu[0].count();
  const std::uint64_t n_ceu = total.ceu[0].count();
  if (opts.min_class_trials > 0 && (n_ccu < opts.min_class_trials || n_ceu < opts.min_class_trials)) {
    throw NumericalError("simulate_outage", "insufficient samples per class (ccu " +
                                                std::to_string(n_ccu) + ", ceu " +
                                                std::to_string(n_ceu) + ")");
  }
  OutageResult out;
  out.thresholds = opts.thresholds;
  out.window_radius = radius;
  out.ccu_fraction = SimEstimate::from(total.center_share, opts.seed);
  for (std::size_t j = 0; j < nt; ++j) {
    out.ccu_outage.push_back(SimEstimate::from(total.ccu[j], opts.seed));
    out.ceu_outage.push_back(SimEstimate::from(total.ceu[j], opts.seed));
  }
  return out;
}

}  // namespace hetnet
