#include "ccg/spherical.hpp"

#include <cmath>

#include "ccg/errors.hpp"
#include "ccg/hyperbolic.hpp"
#include "ccg/tolerances.hpp"

namespace ccg {

SpherePoint::SpherePoint(const Vec3& n) : n_(n) {
  if (!(std::abs(dot(n, n) - 1.0) <= kTolPoint)) {
    fail(ErrorKind::InvalidPoint, "not a unit vector: " + to_string(n));
  }
}

SpherePoint SpherePoint::normalize(const Vec3& v) {
  const double len = norm(v);
  if (!(len > 1e-150)) fail(ErrorKind::InvalidPoint, "cannot normalize the zero vector");
  return SpherePoint(v / len);
}

GreatCircle::GreatCircle(const Vec3& normal) {
  const double len = norm(normal);
  if (!(len > 1e-150)) fail(ErrorKind::Degenerate, "great-circle normal is zero");
  normal_ = normal / len;
}

double sphere_dist(const SpherePoint& p, const SpherePoint& q) {
  return std::atan2(norm(cross(p.vec(), q.vec())), dot(p.vec(), q.vec()));
}

Vec3 sphere_unit_tangent(const SpherePoint& from, const SpherePoint& toward) {
  const Vec3 v = toward.vec() - dot(from.vec(), toward.vec()) * from.vec();
  const double len = norm(v);
  if (!(len > kTolPoint)) {
    fail(ErrorKind::Degenerate, "tangent direction between coincident or antipodal points");
  }
  return v / len;
}

SpherePoint sphere_point_along(const SpherePoint& p, const Vec3& n, double t) {
  if (std::abs(dot(n, n) - 1.0) > kTolId || std::abs(dot(p.vec(), n)) > kTolId) {
    fail(ErrorKind::ContractViolation, "direction is not a unit tangent at the base point");
  }
  if (!(t >= 0.0)) fail(ErrorKind::ContractViolation, "displacement must be non-negative");
  return SpherePoint::normalize(std::cos(t) * p.vec() + std::sin(t) * n);
}

GreatCircle sphere_geodesic(const SpherePoint& p, const SpherePoint& q) {
  const Vec3 n = cross(p.vec(), q.vec());
  if (!(norm(n) > kTolPoint)) {
    fail(ErrorKind::Degenerate, "great circle through coincident or antipodal points");
  }
  return GreatCircle(n);
}

SpherePoint sphere_intersect(const GreatCircle& g1, const GreatCircle& g2, const SpherePoint& hint) {
  const Vec3 c = cross(g1.normal(), g2.normal());
  if (!(norm(c) > 1e-12)) fail(ErrorKind::Degenerate, "intersection of identical great circles");
  return SpherePoint::normalize(dot(c, hint.vec()) >= 0.0 ? c : -c);
}

double sphere_angle(const SpherePoint& v, const SpherePoint& p, const SpherePoint& q) {
  const Vec3 t1 = sphere_unit_tangent(v, p);
  const Vec3 t2 = sphere_unit_tangent(v, q);
  return std::atan2(norm(cross(t1, t2)), dot(t1, t2));
}

SpherePoint sphere_foot(const SpherePoint& p, const GreatCircle& g) {
  const Vec3 f = p.vec() - g.side(p) * g.normal();
  if (!(norm(f) > kTolPoint)) fail(ErrorKind::Degenerate, "foot from a pole is undefined");
  return SpherePoint::normalize(f);
}

SpherePoint sphere_midpoint(const SpherePoint& p, const SpherePoint& q) {
  const Vec3 s = p.vec() + q.vec();
  if (!(norm(s) > kTolPoint) || sphere_dist(p, q) <= kTolPoint) {
    fail(ErrorKind::Degenerate, "midpoint of coincident or antipodal points");
  }
  return SpherePoint::normalize(s);
}

SpherePoint sphere_polar_point(const SpherePoint& center, double theta, double r) {
  // Rotation in the plane of (1,0,0) and center carrying (1,0,0) to center.
  const Vec3& b = center.vec();
  if (!(b.x0 > -1.0 + kTolPoint)) {
    fail(ErrorKind::Degenerate, "polar frame undefined at the antipode of the base point");
  }
  const double k = 1.0 / (1.0 + b.x0);
  const Vec3 e1{-b.x1, 1.0 - b.x1 * b.x1 * k, -b.x1 * b.x2 * k};
  const Vec3 e2{-b.x2, -b.x1 * b.x2 * k, 1.0 - b.x2 * b.x2 * k};
  return sphere_point_along(center, std::cos(theta) * e1 + std::sin(theta) * e2, r);
}

}  // namespace ccg
