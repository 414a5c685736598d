#pragma once

#include <cmath>
#include <vector>

namespace pgcover {

inline constexpr double kTau = 6.283185307179586476925286766559;
// Absolute tolerance for distance comparisons at unit scale.
inline constexpr double kDistEps = 1e-12;
// Slack used when testing whether an angle lies inside an arc.
inline constexpr double kAngleEps = 1e-12;

/// Normalize an angle to [0, 2*pi).
double wrap_angle(double a);

/// Signed difference a - b normalized to (-pi, pi].
double signed_angle_diff(double a, double b);

/// A point inside the closed unit disk, kept in both Cartesian and polar form.
struct Sensor {
  double x = 0.0;
  double y = 0.0;
  double beta = 0.0;  // polar angle in [0, 2*pi); 0 by convention when r == 0
  double r = 0.0;     // distance from the center, in [0, 1]

  static Sensor from_xy(double x, double y);
};

struct Instance {
  std::vector<Sensor> sensors;

  int n() const { return static_cast<int>(sensors.size()); }
};

/// Rotation offset of the regular n-gon, canonical range [0, 2*pi/n).
/// Vertex j sits at angle (offset - 2*pi*j/n) mod 2*pi, so vertex indices
/// increase clockwise.
struct Placement {
  double offset = 0.0;
};

struct BoundaryExtremes {
  double nearest_angle;   // angle of the closest boundary point
  double nearest_dist;    // 1 - r
  double farthest_angle;  // angle of the farthest boundary point
  double farthest_dist;   // 1 + r
};

BoundaryExtremes boundary_extremes(const Sensor& s);

/// Chord distance between a point at radius r and a boundary point separated
/// by angle delta: sqrt(1 + r^2 - 2 r cos(delta)).
double chord_distance(double r, double delta);

double vertex_angle(const Placement& p, int j, int n);

double sensor_vertex_distance(const Sensor& s, const Placement& p, int j, int n);

/// Closed arc of boundary angles within distance lambda of a sensor.
struct CoverageArc {
  enum class Kind { empty, proper, full };
  Kind kind = Kind::empty;
  double lo = 0.0;  // = beta - half
  double hi = 0.0;  // = beta + half, hi - lo = 2*half (not wrapped)
  double half = 0.0;

  bool contains(double angle) const;
};

CoverageArc coverage_arc(const Sensor& s, double lambda);

}  // namespace pgcover
