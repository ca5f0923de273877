#pragma once

// Hyperboloid model of the hyperbolic plane: the upper sheet of <x,x> = -1 in
// Minkowski space R^{2,1}. Geodesics are planes through the origin, encoded by
// a unit spacelike normal. The Poincare disk is used only as an I/O chart.

#include <array>
#include <optional>
#include <string>

#include "ccg/vec3.hpp"

namespace ccg {

class HPoint {
 public:
  /// The origin (1, 0, 0).
  HPoint() : v_{1.0, 0.0, 0.0} {}
  /// Throws InvalidPoint unless <v,v> = -1 (relative to |v|^2) and v.x0 > 0.
  explicit HPoint(const Vec3& v);

  /// Rescales a future-timelike vector onto the sheet.
  static HPoint normalize(const Vec3& v);
  static HPoint origin() { return HPoint(Vec3{1.0, 0.0, 0.0}, Unchecked{}); }

  const Vec3& vec() const { return v_; }
  double x0() const { return v_.x0; }
  double x1() const { return v_.x1; }
  double x2() const { return v_.x2; }

 private:
  struct Unchecked {};
  HPoint(const Vec3& v, Unchecked) : v_(v) {}

  Vec3 v_;
};

/// Oriented geodesic. Points x with <x, normal> > 0 lie on its left.
class Geodesic {
 public:
  /// The geodesic x2 = 0, oriented with normal (0, 0, 1).
  Geodesic() : normal_{0.0, 0.0, 1.0} {}
  /// Rescales any spacelike vector to unit length.
  explicit Geodesic(const Vec3& normal);

  const Vec3& normal() const { return normal_; }
  Geodesic reversed() const { return Geodesic(-normal_); }
  /// <p, normal> = sinh of the signed distance from p to the geodesic.
  double side(const HPoint& p) const { return mink_inner(p.vec(), normal_); }

 private:
  Vec3 normal_;
};

struct DiskPoint {
  double u = 0.0;
  double w = 0.0;

  /// Throws OutOfModel when u^2 + w^2 >= 1.
  static DiskPoint make(double u, double w);
  double radius() const;
};

struct TangentPoint {
  double s = 0.0;
  double t = 0.0;
  double norm() const;
};

/// Orthonormal frame of the tangent plane at a point. At the origin this is
/// e1 = (0,1,0), e2 = (0,0,1); elsewhere it is carried there by the pure boost.
struct TangentFrame {
  HPoint base;
  Vec3 e1;
  Vec3 e2;

  Vec3 direction(double theta) const;
};

/// Linear map preserving the Lorentz form and the upper sheet.
class Isometry {
 public:
  using Matrix = std::array<std::array<double, 3>, 3>;

  Isometry();
  explicit Isometry(const Matrix& m) : m_(m) {}

  /// The pure boost carrying the origin to `target`.
  static Isometry boost_to(const HPoint& target);
  /// Rotation by `theta` about the origin (counterclockwise in the disk chart).
  static Isometry rotation(double theta);

  Vec3 apply(const Vec3& v) const;
  HPoint apply(const HPoint& p) const;
  Geodesic apply(const Geodesic& g) const;
  Isometry then(const Isometry& next) const;
  Isometry inverse() const;
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

double hdist(const HPoint& p, const HPoint& q);

/// Unit tangent at `from` pointing toward `toward`.
Vec3 unit_tangent(const HPoint& from, const HPoint& toward);

/// cosh(t) p + sinh(t) n for a unit tangent n at p and t >= 0.
HPoint point_along(const HPoint& p, const Vec3& n, double t);

Geodesic geodesic_through(const HPoint& p, const HPoint& q);

/// Common point of two geodesics; empty when they are ultraparallel or
/// asymptotically parallel.
std::optional<HPoint> intersect_geodesics(const Geodesic& g1, const Geodesic& g2);

/// Angle in [0, pi] at v between the geodesics toward p and q.
double angle_at(const HPoint& v, const HPoint& p, const HPoint& q);

HPoint foot_of_perpendicular(const HPoint& p, const Geodesic& g);
double signed_distance(const HPoint& p, const Geodesic& g);

HPoint midpoint(const HPoint& p, const HPoint& q);

HPoint disk_to_hpoint(const DiskPoint& d);
DiskPoint hpoint_to_disk(const HPoint& p);

TangentFrame tangent_frame(const HPoint& base);

/// Central projection from the Minkowski origin onto the tangent plane at
/// `base`, in the coordinates of tangent_frame(base).
TangentPoint radial_project(const HPoint& base, const HPoint& p);

HPoint reflect_across(const Geodesic& g, const HPoint& p);

/// Point at hyperbolic polar coordinates (r, theta) around `center`.
HPoint polar_point(const HPoint& center, double theta, double r);

std::string to_string(const HPoint& p);
std::string to_string(const Vec3& v);

}  // namespace ccg
