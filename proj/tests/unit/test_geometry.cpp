#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "hetnet/errors.hpp"
#include "hetnet/geometry.hpp"
#include "hetnet/montecarlo.hpp"
#include "hetnet/numerics/quadrature.hpp"

using namespace hetnet;

TEST(SamplePpp, ZeroDensityIsEmpty) {
  auto p = sample_ppp(0.0, Disk{{0, 0}, 1000.0}, 7);
  EXPECT_TRUE(p.empty());
}

TEST(SamplePpp, DeterministicForSeed) {
  const Disk w{{0, 0}, 5000.0};
  auto a = sample_ppp(5e-6, w, 42);
  auto b = sample_ppp(5e-6, w, 42);
  auto c = sample_ppp(5e-6, w, 43);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a.points()[i].x, b.points()[i].x);
    EXPECT_EQ(a.points()[i].y, b.points()[i].y);
  }
  EXPECT_FALSE(a.size() == c.size() && a.points()[0].x == c.points()[0].x);
}

TEST(SamplePpp, PointsInsideWindow) {
  const Disk w{{100.0, -50.0}, 2000.0};
  auto p = sample_ppp(1e-4, w, 3);
  EXPECT_GT(p.size(), 0u);
  for (auto q : p.points()) EXPECT_TRUE(w.contains(q));
}

TEST(SamplePpp, MeanCountMatchesIntensity) {
  const Disk w{{0, 0}, 10000.0};
  const double expected = 5e-6 * std::numbers::pi * 1e8;  // 1570.8
  RunningStats s;
  for (std::uint64_t r = 0; r < 10000; ++r) s.add(static_cast<double>(sample_ppp(5e-6, w, r).size()));
  EXPECT_NEAR(s.mean(), expected, 3.0 * s.std_error());
  // Poisson: variance equals the mean.
  EXPECT_NEAR(s.variance() / expected, 1.0, 0.05);
}

TEST(SamplePpp, UniformRadialLaw) {
  // P(|x| <= r) = (r / radius)^2 for uniform points in a disk.
  const Disk w{{0, 0}, 1.0};
  auto p = sample_ppp(2e5 / std::numbers::pi, w, 11);
  std::size_t inner = 0;
  for (auto q : p.points()) inner += (q.x * q.x + q.y * q.y <= 0.25) ? 1 : 0;
  const double frac = static_cast<double>(inner) / p.size();
  EXPECT_NEAR(frac, 0.25, 4.0 * std::sqrt(0.25 * 0.75 / p.size()));
}

TEST(PointPattern, RejectsPointsOutsideWindow) {
  EXPECT_THROW(PointPattern({{2.0, 0.0}}, Disk{{0, 0}, 1.0}, 1.0), ValidationError);
}

TEST(ClassifyUser, Examples) {
  const RegionThreshold r(0.707);
  EXPECT_EQ(classify_user(DistancePair(100, 300), r), UserClass::kCenter);
  EXPECT_EQ(classify_user(DistancePair(290, 300), r), UserClass::kEdge);
  EXPECT_EQ(classify_user(DistancePair(300, 300), r), UserClass::kEdge);
  EXPECT_EQ(classify_user(DistancePair(300, 300), RegionThreshold(1.0)), UserClass::kCenter);
}

TEST(ClassifyUser, ScaleInvariant) {
  auto rng = make_rng(5);
  std::uniform_real_distribution<double> u(1.0, 1000.0);
  const RegionThreshold r(0.6);
  for (int i = 0; i < 10000; ++i) {
    const double a = u(rng), b = u(rng);
    const DistancePair p(std::min(a, b), std::max(a, b));
    for (double c : {1e-3, 0.5, 7.0, 1e4}) {
      EXPECT_EQ(classify_user(p, r), classify_user(DistancePair(p.r_m * c, p.r_d * c), r));
    }
  }
}

TEST(DistancePair, Invariants) {
  EXPECT_THROW(DistancePair(0.0, 1.0), ValidationError);
  EXPECT_THROW(DistancePair(2.0, 1.0), ValidationError);
}

TEST(RegionThreshold, Range) {
  EXPECT_THROW(RegionThreshold(0.0), ValidationError);
  EXPECT_THROW(RegionThreshold(1.01), ValidationError);
  EXPECT_NO_THROW(RegionThreshold(1.0));
}

TEST(ProbCcu, Values) {
  EXPECT_EQ(prob_ccu(RegionThreshold(1.0)), 1.0);
  EXPECT_NEAR(prob_ccu(RegionThreshold(0.707)), 0.499849, 1e-12);
  EXPECT_EQ(prob_ccu(RegionThreshold(0.5)), 0.25);
  for (double r = 0.05; r <= 1.0; r += 0.05) {
    const RegionThreshold t(r);
    EXPECT_EQ(prob_ccu(t) + prob_ceu(t), 1.0);
  }
}

namespace {

// Fraction of cell-center users among users dropped in a sampled MBS field.
double mc_center_fraction(double r, int users, std::uint64_t seed) {
  const double lambda = 5e-6;
  const Disk w{{0, 0}, default_window_radius(lambda, 500.0)};
  auto rng = make_rng(seed);
  std::vector<Point2> pts;
  const RegionThreshold t(r);
  int center = 0;
  for (int i = 0; i < users; ++i) {
    sample_ppp_into(lambda, w, rng, pts);
    const auto user = sample_uniform(Disk{{0, 0}, 0.5 * w.radius}, rng);
    auto nt = nearest_two(pts, user);
    if (!nt) continue;
    center += classify_user(nt->distances, t) == UserClass::kCenter ? 1 : 0;
  }
  return static_cast<double>(center) / users;
}

}  // namespace

TEST(ProbCcu, MonteCarloAtHalf) {
  const double f = mc_center_fraction(0.5, 20000, 17);
  EXPECT_NEAR(f, 0.25, 0.01);
}

TEST(NearestTwo, FindsTwoClosest) {
  std::vector<Point2> pts = {{10, 0}, {0, 3}, {-1, 0}, {5, 5}};
  auto nt = nearest_two(pts, {0, 0});
  ASSERT_TRUE(nt);
  EXPECT_EQ(nt->nearest, 2u);
  EXPECT_EQ(nt->second, 1u);
  EXPECT_DOUBLE_EQ(nt->distances.r_m, 1.0);
  EXPECT_DOUBLE_EQ(nt->distances.r_d, 3.0);
  EXPECT_FALSE(nearest_two(std::vector<Point2>{{1, 1}}, {0, 0}));
}

TEST(ServingDistancePdf, ZeroAtOrigin) {
  const RegionThreshold r(0.707);
  EXPECT_EQ(pdf_serving_distance_ccu(0.0, 5e-6, r), 0.0);
  EXPECT_EQ(pdf_serving_distance_ceu(0.0, 5e-6, r), 0.0);
}

TEST(ServingDistancePdf, IntegrateToOne) {
  for (double lambda : {1e-6, 5e-6, 1e-4}) {
    for (double R : {0.3, 0.707, 0.95, 1.0}) {
      const RegionThreshold r(R);
      const double len = 1.0 / std::sqrt(std::numbers::pi * lambda);
      auto c = numerics::integrate_to_infinity(
          [&](double x) { return pdf_serving_distance_ccu(x, lambda, r); }, 0.0, len,
          {1e-13, 0.0, 2000});
      EXPECT_NEAR(c.value, 1.0, 1e-9) << lambda << ' ' << R;
      if (R < 1.0) {
        auto e = numerics::integrate_to_infinity(
            [&](double x) { return pdf_serving_distance_ceu(x, lambda, r); }, 0.0, len,
            {1e-13, 0.0, 2000});
        EXPECT_NEAR(e.value, 1.0, 1e-9) << lambda << ' ' << R;
      }
    }
  }
}

TEST(ServingDistancePdf, UnitRegionIsNearestNeighbourLaw) {
  const double lambda = 5e-6;
  for (double x : {10.0, 100.0, 300.0, 1000.0}) {
    const double nn = 2 * std::numbers::pi * lambda * x * std::exp(-std::numbers::pi * lambda * x * x);
    EXPECT_NEAR(pdf_serving_distance_ccu(x, lambda, RegionThreshold(1.0)), nn, 1e-18);
  }
  EXPECT_THROW(pdf_serving_distance_ceu(10.0, lambda, RegionThreshold(1.0)), ValidationError);
}

namespace {

double ks_statistic(std::vector<double> samples, const std::function<double(double)>& pdf) {
  std::sort(samples.begin(), samples.end());
  double cdf = 0.0, prev = 0.0, d = 0.0;
  const double n = static_cast<double>(samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    cdf += numerics::integrate(pdf, prev, samples[i], {1e-10, 1e-14, 200}).value;
    prev = samples[i];
    d = std::max({d, std::abs(cdf - i / n), std::abs(cdf - (i + 1) / n)});
  }
  return d;
}

}  // namespace

TEST(ServingDistancePdf, MonteCarloKolmogorovSmirnov) {
  OutageScenario s;
  s.zeta_center = s.zeta_edge = 0.0;
  s.lambda_f = 0.0;
  const double radius = default_window_radius(s.lambda_b, 500.0);
  auto rng = make_rng(99);
  std::vector<Point2> scratch;
  std::vector<double> center, edge;
  while (center.size() + edge.size() < 100000) {
    const auto smp = sample_sir(s, radius, UserPlacement::kGuardDisk, 0.5, rng, scratch);
    (smp.user_class == UserClass::kCenter ? center : edge).push_back(smp.serving_distance);
  }
  const RegionThreshold r(s.region);
  const double dc = ks_statistic(center, [&](double x) { return pdf_serving_distance_ccu(x, s.lambda_b, r); });
  const double de = ks_statistic(edge, [&](double x) { return pdf_serving_distance_ceu(x, s.lambda_b, r); });
  EXPECT_LT(dc, 0.01);
  EXPECT_LT(de, 0.01);
}
