#pragma once

// Unit sphere in Euclidean R^3 with the angular metric. Great circles are
// encoded by their unit normal; points x with x . normal > 0 lie on the left.

#include <optional>

#include "ccg/vec3.hpp"

namespace ccg {

class SpherePoint {
 public:
  SpherePoint() : n_{1.0, 0.0, 0.0} {}
  /// Throws InvalidPoint unless |n| = 1 within kTolPoint.
  explicit SpherePoint(const Vec3& n);
  static SpherePoint normalize(const Vec3& v);
  /// Base point (1,0,0); tangent directions at it span x1, x2 as in the
  /// hyperboloid model.
  static SpherePoint origin() { return SpherePoint(Vec3{1.0, 0.0, 0.0}); }

  const Vec3& vec() const { return n_; }

 private:
  Vec3 n_;
};

class GreatCircle {
 public:
  GreatCircle() : normal_{0.0, 0.0, 1.0} {}
  explicit GreatCircle(const Vec3& normal);

  const Vec3& normal() const { return normal_; }
  /// sin of the signed distance from p to the circle.
  double side(const SpherePoint& p) const { return dot(p.vec(), normal_); }

 private:
  Vec3 normal_;
};

double sphere_dist(const SpherePoint& p, const SpherePoint& q);
Vec3 sphere_unit_tangent(const SpherePoint& from, const SpherePoint& toward);
SpherePoint sphere_point_along(const SpherePoint& p, const Vec3& n, double t);
/// Throws Degenerate for coincident or antipodal points.
GreatCircle sphere_geodesic(const SpherePoint& p, const SpherePoint& q);
/// Of the two antipodal common points, the one on the same hemisphere as `hint`.
SpherePoint sphere_intersect(const GreatCircle& g1, const GreatCircle& g2, const SpherePoint& hint);
double sphere_angle(const SpherePoint& v, const SpherePoint& p, const SpherePoint& q);
SpherePoint sphere_foot(const SpherePoint& p, const GreatCircle& g);
SpherePoint sphere_midpoint(const SpherePoint& p, const SpherePoint& q);
SpherePoint sphere_polar_point(const SpherePoint& center, double theta, double r);

}  // namespace ccg
