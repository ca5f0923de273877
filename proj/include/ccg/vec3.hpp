#pragma once

#include <algorithm>
#include <cmath>

namespace ccg {

// Carrier for both Minkowski space R^{2,1} and Euclidean R^3.
struct Vec3 {
  double x0 = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;

  constexpr Vec3 operator+(const Vec3& o) const { return {x0 + o.x0, x1 + o.x1, x2 + o.x2}; }
  constexpr Vec3 operator-(const Vec3& o) const { return {x0 - o.x0, x1 - o.x1, x2 - o.x2}; }
  constexpr Vec3 operator-() const { return {-x0, -x1, -x2}; }
  constexpr Vec3 operator*(double s) const { return {x0 * s, x1 * s, x2 * s}; }
  constexpr Vec3 operator/(double s) const { return {x0 / s, x1 / s, x2 / s}; }
  constexpr bool operator==(const Vec3&) const = default;
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

using MinkowskiVec = Vec3;

/// Lorentzian form -x0*y0 + x1*y1 + x2*y2.
constexpr double mink_inner(const Vec3& x, const Vec3& y) {
  return -x.x0 * y.x0 + x.x1 * y.x1 + x.x2 * y.x2;
}

constexpr double dot(const Vec3& x, const Vec3& y) { return x.x0 * y.x0 + x.x1 * y.x1 + x.x2 * y.x2; }

constexpr Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.x1 * b.x2 - a.x2 * b.x1, a.x2 * b.x0 - a.x0 * b.x2, a.x0 * b.x1 - a.x1 * b.x0};
}

/// Lorentz-orthogonal to both arguments: J(a x b) with J = diag(-1, 1, 1).
constexpr Vec3 mink_cross(const Vec3& a, const Vec3& b) {
  const Vec3 c = cross(a, b);
  return {-c.x0, c.x1, c.x2};
}

inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }

inline double max_abs(const Vec3& v) {
  return std::max({std::abs(v.x0), std::abs(v.x1), std::abs(v.x2)});
}

constexpr double det(const Vec3& a, const Vec3& b, const Vec3& c) { return dot(a, cross(b, c)); }

}  // namespace ccg
