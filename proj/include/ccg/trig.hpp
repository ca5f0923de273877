#pragma once

// Closed-form triangle laws, the right-triangle cathetus law and the
// Menelaus ratio. Every law here has a synthetic twin built from kernel
// constructions; the tests compare the two.

#include <algorithm>
#include <cmath>

#include "ccg/plane.hpp"

namespace ccg {

/// Right triangle ABC with the right angle at B and apex angle alpha at A.
struct RightTriangleConfig {
  Geometry geometry = Geometry::Hyperbolic;
  double alpha = 0.0;
  double hypotenuse = 0.0;  // b = AC
  double cathetus = 0.0;    // c = AB
  double opposite = 0.0;    // a = BC
};

/// c from b and alpha: tanh c = cos(alpha) tanh b, tan c = cos(alpha) tan b,
/// or c = b cos(alpha).
double cathetus_from_hypotenuse(double hypotenuse, double alpha, Geometry g);

/// Builds the triangle with the kernel: A at the base point, the second ray
/// along angle 0, C at distance `hypotenuse` on the ray at angle `alpha`, and
/// B the foot of the perpendicular from C. All three sides are measured.
RightTriangleConfig construct_right_triangle(double hypotenuse, double alpha, Geometry g);

/// sinh(sum)/sinh(diff), sin(sum)/sin(diff), or sum/diff; callers pass
/// sum = AC + AB and diff = AC - AB.
double menelaus_ratio(double sum, double diff, Geometry g);

/// (1 + cos alpha) / (1 - cos alpha).
double menelaus_rhs(double alpha);

/// Angle opposite side `a`. Uses the half-angle form of the cosine law.
double hyp_angle_from_sides(double a, double b, double c);
/// Side opposite the angle `angle` enclosed by sides b and c.
double hyp_side_from_sas(double b, double c, double angle);
double sph_angle_from_sides(double a, double b, double c);
double sph_side_from_sas(double b, double c, double angle);

double angle_from_sides(Geometry g, double a, double b, double c);
double side_from_sas(Geometry g, double b, double c, double angle);

/// Relative spread of sine_fn(side) / sin(opposite angle) over the three
/// vertices, measured from coordinates.
template <PlaneGeometry Plane>
double sine_law_residual(const Triangle<Plane>& tri) {
  check_triangle(tri);
  const double ratios[3] = {
      Plane::sine_fn(Plane::dist(tri.B, tri.C)) / std::sin(Plane::angle(tri.A, tri.B, tri.C)),
      Plane::sine_fn(Plane::dist(tri.C, tri.A)) / std::sin(Plane::angle(tri.B, tri.C, tri.A)),
      Plane::sine_fn(Plane::dist(tri.A, tri.B)) / std::sin(Plane::angle(tri.C, tri.A, tri.B))};
  const auto [lo, hi] = std::minmax({ratios[0], ratios[1], ratios[2]});
  return (hi - lo) / hi;
}

}  // namespace ccg
