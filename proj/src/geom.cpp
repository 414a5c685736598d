#include "pgcover/geom.hpp"

#include <algorithm>
#include <cassert>

namespace pgcover {

double wrap_angle(double a) {
  double w = std::fmod(a, kTau);
  if (w < 0.0) w += kTau;
  if (w >= kTau) w = 0.0;  // fmod can land exactly on 2*pi after the add
  return w;
}

double signed_angle_diff(double a, double b) {
  double d = wrap_angle(a - b);
  if (d > kTau / 2.0) d -= kTau;
  return d;
}

Sensor Sensor::from_xy(double x, double y) {
  Sensor s;
  s.x = x;
  s.y = y;
  s.r = std::hypot(x, y);
  s.beta = s.r > 0.0 ? wrap_angle(std::atan2(y, x)) : 0.0;
  return s;
}

BoundaryExtremes boundary_extremes(const Sensor& s) {
  BoundaryExtremes e;
  e.nearest_angle = s.beta;  // 0 by convention for a centered sensor
  e.nearest_dist = 1.0 - s.r;
  e.farthest_angle = wrap_angle(s.beta + kTau / 2.0);
  e.farthest_dist = 1.0 + s.r;
  return e;
}

double chord_distance(double r, double delta) {
  double v = 1.0 + r * r - 2.0 * r * std::cos(delta);
  return std::sqrt(std::max(v, 0.0));
}

double vertex_angle(const Placement& p, int j, int n) {
  return wrap_angle(p.offset - kTau * j / n);
}

double sensor_vertex_distance(const Sensor& s, const Placement& p, int j, int n) {
  assert(0 <= j && j < n);
  return chord_distance(s.r, vertex_angle(p, j, n) - s.beta);
}

bool CoverageArc::contains(double angle) const {
  switch (kind) {
    case Kind::empty:
      return false;
    case Kind::full:
      return true;
    case Kind::proper: {
      double off = wrap_angle(angle - lo);
      return off <= (hi - lo) + kAngleEps;
    }
  }
  return false;
}

CoverageArc coverage_arc(const Sensor& s, double lambda) {
  CoverageArc arc;
  if (s.r <= kDistEps) {
    arc.kind = lambda >= 1.0 - kDistEps ? CoverageArc::Kind::full : CoverageArc::Kind::empty;
    return arc;
  }
  if (lambda < 1.0 - s.r - kDistEps) {
    arc.kind = CoverageArc::Kind::empty;
    return arc;
  }
  if (lambda >= 1.0 + s.r - kDistEps) {
    arc.kind = CoverageArc::Kind::full;
    return arc;
  }
  double c = (1.0 + s.r * s.r - lambda * lambda) / (2.0 * s.r);
  arc.kind = CoverageArc::Kind::proper;
  arc.half = std::acos(std::clamp(c, -1.0, 1.0));
  arc.lo = s.beta - arc.half;
  arc.hi = s.beta + arc.half;
  return arc;
}

}  // namespace pgcover
