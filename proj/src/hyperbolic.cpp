#include "ccg/hyperbolic.hpp"

#include <cmath>
#include <cstdio>
#include <limits>

#include "ccg/errors.hpp"
#include "ccg/tolerances.hpp"

namespace ccg {

namespace {

// Relative slack for quantities whose rounding error grows with |v|^2.
double magnitude_scale(const Vec3& v) { return std::max(1.0, dot(v, v)); }

}  // namespace

HPoint::HPoint(const Vec3& v) : v_(v) {
  const double drift = mink_inner(v, v) + 1.0;
  if (!(v.x0 > 0.0) || !(std::abs(drift) <= kTolPoint * magnitude_scale(v))) {
    fail(ErrorKind::InvalidPoint, "not on the upper hyperboloid sheet: " + to_string(v));
  }
}

HPoint HPoint::normalize(const Vec3& v) {
  const double q = -mink_inner(v, v);
  if (!(q > 0.0) || !(v.x0 > 0.0)) {
    fail(ErrorKind::InvalidPoint, "vector is not future timelike: " + to_string(v));
  }
  // Far from the origin -<v,v> carries rounding of order eps |v|^2. When q is
  // within that noise of 1 the vector is already unit, and rescaling would
  // only move it radially. x0 is then lifted from the spatial part.
  const double noise = 8.0 * std::numeric_limits<double>::epsilon() * dot(v, v);
  const double s = std::abs(q - 1.0) <= noise ? 1.0 : 1.0 / std::sqrt(q);
  const double x1 = v.x1 * s, x2 = v.x2 * s;
  return HPoint(Vec3{std::sqrt(1.0 + x1 * x1 + x2 * x2), x1, x2}, Unchecked{});
}

Geodesic::Geodesic(const Vec3& normal) {
  const double q = mink_inner(normal, normal);
  if (!(q > 1e-300) || !(q > 1e-24 * dot(normal, normal))) {
    fail(ErrorKind::Degenerate, "geodesic normal is not spacelike: " + to_string(normal));
  }
  normal_ = normal / std::sqrt(q);
}

DiskPoint DiskPoint::make(double u, double w) {
  if (!(u * u + w * w < 1.0)) {
    fail(ErrorKind::OutOfModel, "disk point outside the open unit disk");
  }
  return DiskPoint{u, w};
}

double DiskPoint::radius() const { return std::hypot(u, w); }

double TangentPoint::norm() const { return std::hypot(s, t); }

Vec3 TangentFrame::direction(double theta) const {
  return std::cos(theta) * e1 + std::sin(theta) * e2;
}

Isometry::Isometry() : m_{{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}} {}

Isometry Isometry::boost_to(const HPoint& target) {
  const Vec3& b = target.vec();
  const double k = 1.0 / (1.0 + b.x0);
  return Isometry(Matrix{{{b.x0, b.x1, b.x2},
                          {b.x1, 1.0 + b.x1 * b.x1 * k, b.x1 * b.x2 * k},
                          {b.x2, b.x1 * b.x2 * k, 1.0 + b.x2 * b.x2 * k}}});
}

Isometry Isometry::rotation(double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  return Isometry(Matrix{{{1.0, 0.0, 0.0}, {0.0, c, -s}, {0.0, s, c}}});
}

Vec3 Isometry::apply(const Vec3& v) const {
  return {m_[0][0] * v.x0 + m_[0][1] * v.x1 + m_[0][2] * v.x2,
          m_[1][0] * v.x0 + m_[1][1] * v.x1 + m_[1][2] * v.x2,
          m_[2][0] * v.x0 + m_[2][1] * v.x1 + m_[2][2] * v.x2};
}

HPoint Isometry::apply(const HPoint& p) const { return HPoint::normalize(apply(p.vec())); }

Geodesic Isometry::apply(const Geodesic& g) const { return Geodesic(apply(g.normal())); }

Isometry Isometry::then(const Isometry& next) const {
  Matrix out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      double sum = 0.0;
      for (int k = 0; k < 3; ++k) sum += next.m_[i][k] * m_[k][j];
      out[i][j] = sum;
    }
  }
  return Isometry(out);
}

Isometry Isometry::inverse() const {
  // Lorentz matrices satisfy M^{-1} = J M^T J.
  static constexpr std::array<double, 3> kJ{-1.0, 1.0, 1.0};
  Matrix out{};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) out[i][j] = kJ[i] * m_[j][i] * kJ[j];
  }
  return Isometry(out);
}

double hdist(const HPoint& p, const HPoint& q) {
  const double c = -mink_inner(p.vec(), q.vec());
  const double scale = std::max(1.0, p.x0() * q.x0());
  if (c < 1.0 - kTolClamp * scale) {
    fail(ErrorKind::InvalidPoint, "-<p,q> < 1: inputs are not hyperboloid points");
  }
  if (c < 2.0) {
    // <q-p, q-p> = 4 sinh^2(d/2) keeps precision for nearby points.
    const Vec3 diff = q.vec() - p.vec();
    const double chord2 = std::max(0.0, mink_inner(diff, diff));
    return 2.0 * std::asinh(0.5 * std::sqrt(chord2));
  }
  return std::acosh(c);
}

Vec3 unit_tangent(const HPoint& from, const HPoint& toward) {
  const Vec3 diff = toward.vec() - from.vec();
  const double chord2 = mink_inner(diff, diff);
  // Tangent component of `toward` at `from`: toward + <from,toward> from.
  const Vec3 v = diff - (0.5 * chord2) * from.vec();
  const double n2 = mink_inner(v, v);
  if (!(n2 > kTolPoint * kTolPoint * magnitude_scale(v))) {
    fail(ErrorKind::Degenerate, "tangent direction between coincident points");
  }
  return v / std::sqrt(n2);
}

HPoint point_along(const HPoint& p, const Vec3& n, double t) {
  const double scale = norm(p.vec()) * norm(n);
  if (std::abs(mink_inner(n, n) - 1.0) > kTolId * magnitude_scale(n)) {
    fail(ErrorKind::ContractViolation, "direction is not a unit vector");
  }
  if (std::abs(mink_inner(p.vec(), n)) > kTolId * std::max(1.0, scale)) {
    fail(ErrorKind::ContractViolation, "direction is not tangent at the base point");
  }
  if (!(t >= 0.0)) {
    fail(ErrorKind::ContractViolation, "displacement must be non-negative");
  }
  return HPoint::normalize(std::cosh(t) * p.vec() + std::sinh(t) * n);
}

Geodesic geodesic_through(const HPoint& p, const HPoint& q) {
  if (hdist(p, q) <= kTolPoint) {
    fail(ErrorKind::Degenerate, "geodesic through coincident points");
  }
  // J(p x q) is spacelike and makes (p, p->q, normal) right-handed.
  return Geodesic(mink_cross(p.vec(), q.vec() - p.vec()));
}

std::optional<HPoint> intersect_geodesics(const Geodesic& g1, const Geodesic& g2) {
  const Vec3& n1 = g1.normal();
  const Vec3& n2 = g2.normal();
  const Vec3 c = mink_cross(n1, n2);
  const double cc = dot(c, c);
  if (cc <= 1e-24 * dot(n1, n1) * dot(n2, n2)) {
    fail(ErrorKind::Degenerate, "intersection of identical geodesics");
  }
  const double q = mink_inner(c, c);
  if (q >= -kTolClamp * cc) return std::nullopt;
  return HPoint::normalize(c.x0 > 0.0 ? c : -c);
}

double angle_at(const HPoint& v, const HPoint& p, const HPoint& q) {
  const Vec3 t1 = unit_tangent(v, p);
  const Vec3 t2 = unit_tangent(v, q);
  // J(t1 x t2) = sin(theta) v for unit tangents at v.
  const double s = mink_inner(mink_cross(t1, t2), v.vec());
  return std::abs(std::atan2(s, mink_inner(t1, t2)));
}

HPoint foot_of_perpendicular(const HPoint& p, const Geodesic& g) {
  const double s = g.side(p);
  return HPoint::normalize(p.vec() - s * g.normal());
}

double signed_distance(const HPoint& p, const Geodesic& g) { return std::asinh(g.side(p)); }

HPoint midpoint(const HPoint& p, const HPoint& q) {
  if (hdist(p, q) <= kTolPoint) {
    fail(ErrorKind::Degenerate, "midpoint of coincident points");
  }
  return HPoint::normalize(p.vec() + q.vec());
}

HPoint disk_to_hpoint(const DiskPoint& d) {
  const double r2 = d.u * d.u + d.w * d.w;
  if (!(r2 < 1.0)) fail(ErrorKind::OutOfModel, "disk point outside the open unit disk");
  const double k = 1.0 / (1.0 - r2);
  return HPoint::normalize(Vec3{(1.0 + r2) * k, 2.0 * d.u * k, 2.0 * d.w * k});
}

DiskPoint hpoint_to_disk(const HPoint& p) {
  const double k = 1.0 / (1.0 + p.x0());
  return DiskPoint{p.x1() * k, p.x2() * k};
}

TangentFrame tangent_frame(const HPoint& base) {
  const Isometry boost = Isometry::boost_to(base);
  return TangentFrame{base, boost.apply(Vec3{0.0, 1.0, 0.0}), boost.apply(Vec3{0.0, 0.0, 1.0})};
}

TangentPoint radial_project(const HPoint& base, const HPoint& p) {
  // The tangent plane at `base` is {y : <y, base> = -1}; the ray through p
  // meets it at p / cosh d(base, p).
  const double c = -mink_inner(p.vec(), base.vec());
  const Vec3 offset = p.vec() / c - base.vec();
  const TangentFrame frame = tangent_frame(base);
  return TangentPoint{mink_inner(offset, frame.e1), mink_inner(offset, frame.e2)};
}

HPoint reflect_across(const Geodesic& g, const HPoint& p) {
  return HPoint::normalize(p.vec() - 2.0 * g.side(p) * g.normal());
}

HPoint polar_point(const HPoint& center, double theta, double r) {
  return point_along(center, tangent_frame(center).direction(theta), r);
}

std::string to_string(const Vec3& v) {
  char buf[96];
  std::snprintf(buf, sizeof buf, "(%.17g, %.17g, %.17g)", v.x0, v.x1, v.x2);
  return buf;
}

std::string to_string(const HPoint& p) { return to_string(p.vec()); }

}  // namespace ccg
