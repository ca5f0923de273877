#include "ccg/trig.hpp"

#include <cmath>

namespace ccg {

namespace {

void check_apex_angle(double alpha) {
  if (!(alpha > 0.0 && alpha < kPi / 2)) {
    fail(ErrorKind::Domain, "apex angle must be acute and positive");
  }
}

void check_length(Geometry g, double len) {
  if (!(len > 0.0)) fail(ErrorKind::Range, "length must be positive");
  if (g == Geometry::Hyperbolic && len > kMaxHyperbolicLength) {
    fail(ErrorKind::Range, "hyperbolic length outside (0, 10]");
  }
  if (g == Geometry::Spherical && len > kMaxSphericalLength) {
    fail(ErrorKind::Range, "spherical length outside (0, pi/2]");
  }
}

// Half-angle semiperimeter terms; Degenerate when the triangle inequality
// fails by more than kTolId.
struct Semiperimeter {
  double s, sa, sb, sc;
};

Semiperimeter semiperimeter(double a, double b, double c) {
  const double s = 0.5 * (a + b + c);
  Semiperimeter out{s, s - a, s - b, s - c};
  if (out.sa < -kTolId || out.sb < -kTolId || out.sc < -kTolId) {
    fail(ErrorKind::Degenerate, "sides violate the triangle inequality");
  }
  out.sa = std::max(out.sa, 0.0);
  out.sb = std::max(out.sb, 0.0);
  out.sc = std::max(out.sc, 0.0);
  return out;
}

template <typename Fn>
double half_angle(double a, double b, double c, Fn fn) {
  if (!(b > 0.0 && c > 0.0)) fail(ErrorKind::Degenerate, "adjacent side has zero length");
  const Semiperimeter sp = semiperimeter(a, b, c);
  return 2.0 * std::atan2(std::sqrt(fn(sp.sb) * fn(sp.sc)), std::sqrt(fn(sp.s) * fn(sp.sa)));
}

}  // namespace

double cathetus_from_hypotenuse(double hypotenuse, double alpha, Geometry g) {
  check_apex_angle(alpha);
  check_length(g, hypotenuse);
  switch (g) {
    case Geometry::Hyperbolic:
      return std::atanh(std::cos(alpha) * std::tanh(hypotenuse));
    case Geometry::Spherical:
      if (!(hypotenuse < kPi / 2)) fail(ErrorKind::Range, "spherical hypotenuse must be below pi/2");
      return std::atan(std::cos(alpha) * std::tan(hypotenuse));
    case Geometry::Euclidean:
      return hypotenuse * std::cos(alpha);
  }
  return 0.0;
}

RightTriangleConfig construct_right_triangle(double hypotenuse, double alpha, Geometry g) {
  check_apex_angle(alpha);
  check_length(g, hypotenuse);
  RightTriangleConfig out{g, alpha, hypotenuse, 0.0, 0.0};
  switch (g) {
    case Geometry::Hyperbolic: {
      const HPoint a = HPoint::origin();
      const Geodesic ray = geodesic_through(a, polar_point(a, 0.0, 1.0));
      const HPoint c = polar_point(a, alpha, hypotenuse);
      const HPoint b = foot_of_perpendicular(c, ray);
      out.cathetus = hdist(a, b);
      out.opposite = hdist(b, c);
      break;
    }
    case Geometry::Spherical: {
      if (!(hypotenuse < kPi / 2)) fail(ErrorKind::Range, "spherical hypotenuse must be below pi/2");
      const SpherePoint a = SpherePoint::origin();
      const GreatCircle ray = sphere_geodesic(a, sphere_polar_point(a, 0.0, 0.5));
      const SpherePoint c = sphere_polar_point(a, alpha, hypotenuse);
      const SpherePoint b = sphere_foot(c, ray);
      out.cathetus = sphere_dist(a, b);
      out.opposite = sphere_dist(b, c);
      break;
    }
    case Geometry::Euclidean: {
      const EPoint c = EuclideanPlane::polar(alpha, hypotenuse);
      out.cathetus = c.x;
      out.opposite = c.y;
      break;
    }
  }
  return out;
}

double menelaus_ratio(double sum, double diff, Geometry g) {
  if (!(diff > 0.0)) fail(ErrorKind::Degenerate, "AC - AB must be positive");
  if (!(sum > diff)) fail(ErrorKind::Domain, "AC + AB must exceed AC - AB");
  switch (g) {
    case Geometry::Hyperbolic: return std::sinh(sum) / std::sinh(diff);
    case Geometry::Spherical:
      if (!(sum < kPi)) fail(ErrorKind::Domain, "spherical AC + AB must be below pi");
      return std::sin(sum) / std::sin(diff);
    case Geometry::Euclidean: return sum / diff;
  }
  return 0.0;
}

double menelaus_rhs(double alpha) {
  const double c = std::cos(alpha);
  return (1.0 + c) / (1.0 - c);
}

double hyp_angle_from_sides(double a, double b, double c) {
  return half_angle(a, b, c, [](double x) { return std::sinh(x); });
}

double sph_angle_from_sides(double a, double b, double c) {
  return half_angle(a, b, c, [](double x) { return std::sin(x); });
}

double hyp_side_from_sas(double b, double c, double angle) {
  // 2 sinh^2(a/2) = 2 sinh^2((b-c)/2) + 2 sinh b sinh c sin^2(A/2)
  const double d = std::sinh(0.5 * (b - c));
  const double h = std::sin(0.5 * angle);
  return 2.0 * std::asinh(std::sqrt(d * d + std::sinh(b) * std::sinh(c) * h * h));
}

double sph_side_from_sas(double b, double c, double angle) {
  // Haversine form of the spherical cosine law.
  const double d = std::sin(0.5 * (b - c));
  const double h = std::sin(0.5 * angle);
  const double hav = std::clamp(d * d + std::sin(b) * std::sin(c) * h * h, 0.0, 1.0);
  return 2.0 * std::asin(std::sqrt(hav));
}

double angle_from_sides(Geometry g, double a, double b, double c) {
  switch (g) {
    case Geometry::Hyperbolic: return hyp_angle_from_sides(a, b, c);
    case Geometry::Spherical: return sph_angle_from_sides(a, b, c);
    case Geometry::Euclidean: return half_angle(a, b, c, [](double x) { return x; });
  }
  return 0.0;
}

double side_from_sas(Geometry g, double b, double c, double angle) {
  switch (g) {
    case Geometry::Hyperbolic: return hyp_side_from_sas(b, c, angle);
    case Geometry::Spherical: return sph_side_from_sas(b, c, angle);
    case Geometry::Euclidean: {
      const double d = b - c;
      const double h = std::sin(0.5 * angle);
      return std::sqrt(d * d + 4.0 * b * c * h * h);
    }
  }
  return 0.0;
}

}  // namespace ccg
