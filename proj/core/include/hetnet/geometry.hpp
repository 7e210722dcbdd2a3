#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "hetnet/random.hpp"

namespace hetnet {

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

inline double squared_distance(Point2 a, Point2 b) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy;
}

/// Circular observation window, radius in meters.
struct Disk {
  Point2 center;
  double radius = 1.0;

  double area() const;
  bool contains(Point2 p) const;
};

/// Immutable realization of a homogeneous PPP restricted to a disk.
class PointPattern {
 public:
  PointPattern(std::vector<Point2> points, Disk window, double density);

  std::span<const Point2> points() const { return points_; }
  const Disk& window() const { return window_; }
  double density() const { return density_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }

 private:
  std::vector<Point2> points_;
  Disk window_;
  double density_;
};

/// Nearest (r_m) and second-nearest (r_d) MBS distances, meters.
struct DistancePair {
  double r_m;
  double r_d;

  DistancePair(double nearest, double second);
};

/// Center/edge split parameter R in (0, 1].
class RegionThreshold {
 public:
  explicit RegionThreshold(double r);

  double value() const { return r_; }
  double squared() const { return r_ * r_; }
  bool is_one() const { return r_ == 1.0; }

 private:
  double r_;
};

enum class UserClass { kCenter, kEdge };

const char* to_string(UserClass c);

/// Poisson point count with uniform positions in `window`.
PointPattern sample_ppp(double density, const Disk& window, std::uint64_t seed);

/// Same, drawing from a caller-owned generator (used by the simulators).
void sample_ppp_into(double density, const Disk& window, Rng& rng, std::vector<Point2>& out);

/// Uniform point in the disk.
Point2 sample_uniform(const Disk& window, Rng& rng);

UserClass classify_user(const DistancePair& pair, const RegionThreshold& r);

double prob_ccu(const RegionThreshold& r);
double prob_ceu(const RegionThreshold& r);

/// Density of the serving distance of a cell-center user.
double pdf_serving_distance_ccu(double r_c, double lambda_b, const RegionThreshold& r);

/// Density of the serving distance of a cell-edge user. Rejects R = 1.
double pdf_serving_distance_ceu(double r_e, double lambda_b, const RegionThreshold& r);

/// Indices of the nearest and second-nearest points to `origin`.
struct NearestTwo {
  std::size_t nearest;
  std::size_t second;
  DistancePair distances;
};

std::optional<NearestTwo> nearest_two(std::span<const Point2> points, Point2 origin);

}  // namespace hetnet
