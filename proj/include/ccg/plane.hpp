#pragma once

// The three constant-curvature planes behind one interface, so that the
// cevian theorems can be written once. Each policy supplies its point and line
// types, the metric primitives, and the two length functions the theorems are
// stated in: the ratio function (id / tan / tanh) used by the ratio-sum
// relation, and the sine function (id / sin / sinh) used by Ceva and Menelaus.

#include <array>
#include <cmath>
#include <concepts>
#include <optional>
#include <string_view>

#include "ccg/errors.hpp"
#include "ccg/hyperbolic.hpp"
#include "ccg/spherical.hpp"
#include "ccg/tolerances.hpp"

namespace ccg {

enum class Geometry { Hyperbolic, Spherical, Euclidean };

std::string_view to_string(Geometry g);
/// Throws Domain for an unknown name.
Geometry parse_geometry(std::string_view name);

struct EPoint {
  double x = 0.0;
  double y = 0.0;
};

/// Oriented line: unit normal (nx, ny) and offset c; side(p) = n.p - c.
struct ELine {
  double nx = 0.0;
  double ny = 0.0;
  double c = 0.0;
};

struct HyperbolicPlane {
  using Point = HPoint;
  using Line = Geodesic;
  static constexpr Geometry kind = Geometry::Hyperbolic;

  static Point origin() { return HPoint::origin(); }
  static Point polar(double theta, double r) { return polar_point(HPoint::origin(), theta, r); }
  static double dist(const Point& p, const Point& q) { return hdist(p, q); }
  static Line line(const Point& p, const Point& q) { return geodesic_through(p, q); }
  static double side(const Line& l, const Point& p) { return l.side(p); }
  static std::optional<Point> meet(const Line& a, const Line& b, const Point&) {
    return intersect_geodesics(a, b);
  }
  static double angle(const Point& v, const Point& p, const Point& q) { return angle_at(v, p, q); }
  static Point midpoint(const Point& p, const Point& q) { return ccg::midpoint(p, q); }
  /// Positive combinations stay inside the triangle (Klein-model convexity).
  static Point combine(const std::array<Point, 3>& pts, const std::array<double, 3>& w) {
    return HPoint::normalize(w[0] * pts[0].vec() + w[1] * pts[1].vec() + w[2] * pts[2].vec());
  }
  static double ratio_fn(double len) { return std::tanh(len); }
  static double sine_fn(double len) { return std::sinh(len); }
  static constexpr double max_length() { return kMaxHyperbolicLength; }
};

struct SphericalPlane {
  using Point = SpherePoint;
  using Line = GreatCircle;
  static constexpr Geometry kind = Geometry::Spherical;

  static Point origin() { return SpherePoint::origin(); }
  static Point polar(double theta, double r) {
    return sphere_polar_point(SpherePoint::origin(), theta, r);
  }
  static double dist(const Point& p, const Point& q) { return sphere_dist(p, q); }
  static Line line(const Point& p, const Point& q) { return sphere_geodesic(p, q); }
  static double side(const Line& l, const Point& p) { return l.side(p); }
  static std::optional<Point> meet(const Line& a, const Line& b, const Point& hint) {
    return sphere_intersect(a, b, hint);
  }
  static double angle(const Point& v, const Point& p, const Point& q) { return sphere_angle(v, p, q); }
  static Point midpoint(const Point& p, const Point& q) { return sphere_midpoint(p, q); }
  static Point combine(const std::array<Point, 3>& pts, const std::array<double, 3>& w) {
    return SpherePoint::normalize(w[0] * pts[0].vec() + w[1] * pts[1].vec() + w[2] * pts[2].vec());
  }
  static double ratio_fn(double len) { return std::tan(len); }
  static double sine_fn(double len) { return std::sin(len); }
  static constexpr double max_length() { return kMaxSphericalLength; }
};

struct EuclideanPlane {
  using Point = EPoint;
  using Line = ELine;
  static constexpr Geometry kind = Geometry::Euclidean;

  static Point origin() { return {}; }
  static Point polar(double theta, double r) { return {r * std::cos(theta), r * std::sin(theta)}; }
  static double dist(const Point& p, const Point& q) { return std::hypot(q.x - p.x, q.y - p.y); }
  static Line line(const Point& p, const Point& q) {
    const double len = dist(p, q);
    if (!(len > kTolPoint)) fail(ErrorKind::Degenerate, "line through coincident points");
    // Left normal of the direction p -> q.
    const double nx = -(q.y - p.y) / len;
    const double ny = (q.x - p.x) / len;
    return {nx, ny, nx * p.x + ny * p.y};
  }
  static double side(const Line& l, const Point& p) { return l.nx * p.x + l.ny * p.y - l.c; }
  static std::optional<Point> meet(const Line& a, const Line& b, const Point&) {
    const double d = a.nx * b.ny - a.ny * b.nx;
    if (std::abs(d) <= 1e-15) {
      if (std::abs(a.c * b.nx - b.c * a.nx) + std::abs(a.c * b.ny - b.c * a.ny) <= 1e-15) {
        fail(ErrorKind::Degenerate, "intersection of identical lines");
      }
      return std::nullopt;
    }
    return Point{(a.c * b.ny - b.c * a.ny) / d, (a.nx * b.c - b.nx * a.c) / d};
  }
  static double angle(const Point& v, const Point& p, const Point& q) {
    const double ax = p.x - v.x, ay = p.y - v.y, bx = q.x - v.x, by = q.y - v.y;
    if (std::hypot(ax, ay) <= kTolPoint || std::hypot(bx, by) <= kTolPoint) {
      fail(ErrorKind::Degenerate, "angle with a coincident arm");
    }
    return std::abs(std::atan2(ax * by - ay * bx, ax * bx + ay * by));
  }
  static Point midpoint(const Point& p, const Point& q) {
    if (dist(p, q) <= kTolPoint) fail(ErrorKind::Degenerate, "midpoint of coincident points");
    return {0.5 * (p.x + q.x), 0.5 * (p.y + q.y)};
  }
  static Point combine(const std::array<Point, 3>& pts, const std::array<double, 3>& w) {
    const double total = w[0] + w[1] + w[2];
    return {(w[0] * pts[0].x + w[1] * pts[1].x + w[2] * pts[2].x) / total,
            (w[0] * pts[0].y + w[1] * pts[1].y + w[2] * pts[2].y) / total};
  }
  static double ratio_fn(double len) { return len; }
  static double sine_fn(double len) { return len; }
  static constexpr double max_length() { return 1e6; }
};

template <typename P>
concept PlaneGeometry = requires(const typename P::Point& p, const typename P::Line& l, double x) {
  { P::kind } -> std::convertible_to<Geometry>;
  { P::origin() } -> std::same_as<typename P::Point>;
  { P::polar(x, x) } -> std::same_as<typename P::Point>;
  { P::dist(p, p) } -> std::same_as<double>;
  { P::line(p, p) } -> std::same_as<typename P::Line>;
  { P::side(l, p) } -> std::same_as<double>;
  { P::meet(l, l, p) } -> std::same_as<std::optional<typename P::Point>>;
  { P::angle(p, p, p) } -> std::same_as<double>;
  { P::midpoint(p, p) } -> std::same_as<typename P::Point>;
  { P::combine(std::array<typename P::Point, 3>{p, p, p}, std::array<double, 3>{}) }
      -> std::same_as<typename P::Point>;
  { P::ratio_fn(x) } -> std::same_as<double>;
  { P::sine_fn(x) } -> std::same_as<double>;
};

template <PlaneGeometry Plane>
struct Triangle {
  using Point = typename Plane::Point;
  Point A;
  Point B;
  Point C;
};

/// Throws Degenerate for coincident or collinear vertices and Range for a side
/// outside the working range.
template <PlaneGeometry Plane>
void check_triangle(const Triangle<Plane>& tri) {
  const std::array<double, 3> sides{Plane::dist(tri.B, tri.C), Plane::dist(tri.C, tri.A),
                                    Plane::dist(tri.A, tri.B)};
  for (double s : sides) {
    if (!(s > kTolPoint)) fail(ErrorKind::Degenerate, "triangle has coincident vertices");
    if (s > Plane::max_length()) fail(ErrorKind::Range, "triangle side outside the working range");
  }
  if (std::abs(Plane::side(Plane::line(tri.A, tri.B), tri.C)) <= kTolId) {
    fail(ErrorKind::Degenerate, "triangle vertices are collinear");
  }
}

}  // namespace ccg
