#include "hetnet/geometry.hpp"

#include <cmath>
#include <numbers>

#include "hetnet/errors.hpp"

namespace hetnet {

double Disk::area() const { return std::numbers::pi * radius * radius; }

bool Disk::contains(Point2 p) const { return squared_distance(p, center) <= radius * radius; }

PointPattern::PointPattern(std::vector<Point2> points, Disk window, double density)
    : points_(std::move(points)), window_(window), density_(density) {
  detail::require(window_.radius > 0.0, "window.radius", "must be positive");
  detail::require(density_ >= 0.0, "density", "must be nonnegative");
  for (const auto& p : points_) {
    detail::require(window_.contains(p), "points", "every point must lie inside the window");
  }
}

DistancePair::DistancePair(double nearest, double second) : r_m(nearest), r_d(second) {
  detail::require(nearest > 0.0, "r_m", "must be positive");
  detail::require(second >= nearest, "r_d", "must be at least r_m");
}

RegionThreshold::RegionThreshold(double r) : r_(r) {
  detail::require(r > 0.0 && r <= 1.0, "R", "region threshold must lie in (0, 1]");
}

const char* to_string(UserClass c) { return c == UserClass::kCenter ? "ccu" : "ceu"; }

Point2 sample_uniform(const Disk& window, Rng& rng) {
  // Rejection from the bounding square: no trig, ~2.5 uniforms per point.
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (;;) {
    const double x = u(rng);
    const double y = u(rng);
    if (x * x + y * y <= 1.0) {
      return {window.center.x + window.radius * x, window.center.y + window.radius * y};
    }
  }
}

void sample_ppp_into(double density, const Disk& window, Rng& rng, std::vector<Point2>& out) {
  detail::require(density >= 0.0, "density", "must be nonnegative");
  detail::require(window.radius > 0.0, "window.radius", "must be positive");
  out.clear();
  const double mean = density * window.area();
  if (mean <= 0.0) return;
  std::poisson_distribution<long long> count(mean);
  const long long n = count(rng);
  out.reserve(static_cast<std::size_t>(n));
  for (long long i = 0; i < n; ++i) out.push_back(sample_uniform(window, rng));
}

PointPattern sample_ppp(double density, const Disk& window, std::uint64_t seed) {
  auto rng = make_rng(seed);
  std::vector<Point2> pts;
  sample_ppp_into(density, window, rng, pts);
  return PointPattern(std::move(pts), window, density);
}

UserClass classify_user(const DistancePair& pair, const RegionThreshold& r) {
  // r_m / r_d <= R, written without the division.
  return pair.r_m <= r.value() * pair.r_d ? UserClass::kCenter : UserClass::kEdge;
}

double prob_ccu(const RegionThreshold& r) { return r.squared(); }

double prob_ceu(const RegionThreshold& r) { return 1.0 - r.squared(); }

double pdf_serving_distance_ccu(double r_c, double lambda_b, const RegionThreshold& r) {
  detail::require(r_c >= 0.0, "r_c", "must be nonnegative");
  detail::require(lambda_b > 0.0, "lambda_b", "must be positive");
  const double r2 = r.squared();
  return 2.0 * std::numbers::pi * lambda_b * (r_c / r2) *
         std::exp(-std::numbers::pi * lambda_b * r_c * r_c / r2);
}

double pdf_serving_distance_ceu(double r_e, double lambda_b, const RegionThreshold& r) {
  detail::require(r_e >= 0.0, "r_e", "must be nonnegative");
  detail::require(lambda_b > 0.0, "lambda_b", "must be positive");
  detail::require(!r.is_one(), "R", "cell-edge density undefined for R = 1");
  const double r2 = r.squared();
  const double x = std::numbers::pi * lambda_b * r_e * r_e;
  // e^{-x} - e^{-x/R^2} = e^{-x} * (1 - e^{-x(1/R^2 - 1)})
  const double diff = -std::exp(-x) * std::expm1(-x * (1.0 / r2 - 1.0));
  return 2.0 * std::numbers::pi * lambda_b * r_e / (1.0 - r2) * diff;
}

std::optional<NearestTwo> nearest_two(std::span<const Point2> points, Point2 origin) {
  if (points.size() < 2) return std::nullopt;
  std::size_t i1 = 0, i2 = 1;
  double d1 = squared_distance(points[0], origin);
  double d2 = squared_distance(points[1], origin);
  if (d2 < d1) {
    std::swap(d1, d2);
    std::swap(i1, i2);
  }
  for (std::size_t i = 2; i < points.size(); ++i) {
    const double d = squared_distance(points[i], origin);
    if (d < d2) {
      if (d < d1) {
        d2 = d1;
        i2 = i1;
        d1 = d;
        i1 = i;
      } else {
        d2 = d;
        i2 = i;
      }
    }
  }
  if (d1 == 0.0) return std::nullopt;
  return NearestTwo{i1, i2, DistancePair(std::sqrt(d1), std::sqrt(d2))};
}

}  // namespace hetnet
