#include "ccg/lexell.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <utility>

#include <boost/math/tools/roots.hpp>

#include "ccg/errors.hpp"
#include "ccg/random.hpp"
#include "ccg/tolerances.hpp"

namespace ccg {

namespace {

// Unit tangent of the axis at `anchor`, oriented so that (anchor, tangent,
// normal) is positively oriented.
Vec3 axis_direction(const Geodesic& axis, const HPoint& anchor) {
  Vec3 t = mink_cross(axis.normal(), anchor.vec());
  t = (1.0 / std::sqrt(mink_inner(t, t))) * t;
  if (det(anchor.vec(), t, axis.normal()) < 0.0) t = -t;
  return t;
}

Hypercycle hypercycle_at(const Geodesic& axis, double offset, const HPoint& anchor) {
  return Hypercycle{axis, offset, anchor, axis_direction(axis, anchor)};
}

Hypercycle transform(const Hypercycle& h, const Isometry& iso) {
  return Hypercycle{iso.apply(h.axis), h.offset, iso.apply(h.anchor), iso.apply(h.direction)};
}

// 2 arccos f(cosh h) for leg l, via tan^2(theta/2) = (1 - f)/(1 + f)
// = tanh^2(l/2) tanh^2(h/2); avoids arccos near 1.
double half_angle_area(double leg, double height) {
  return 4.0 * std::atan(std::tanh(0.5 * leg) * std::tanh(0.5 * height));
}

constexpr double kMaxApexHeight = 40.0;

}  // namespace

HPoint Hypercycle::point_at(double s) const {
  const Vec3 on_axis = std::cosh(s) * anchor.vec() + std::sinh(s) * direction;
  return HPoint::normalize(std::cosh(offset) * on_axis + std::sinh(offset) * axis.normal());
}

double Hypercycle::residual(const HPoint& x) const { return axis.side(x) - std::sinh(offset); }

Hypercycle make_hypercycle(const Geodesic& axis, double offset) {
  return hypercycle_at(axis, offset, foot_of_perpendicular(HPoint::origin(), axis));
}

Hypercycle hypercycle_through(const Geodesic& axis, const HPoint& p) {
  return hypercycle_at(axis, std::asinh(axis.side(p)), foot_of_perpendicular(p, axis));
}

BaseConfig BaseConfig::standard(double x) {
  if (!(x > 0.0)) fail(ErrorKind::Domain, "half base length must be positive");
  if (x > 0.5 * kMaxHyperbolicLength) fail(ErrorKind::Range, "base outside the working range");
  return BaseConfig{x, HPoint::normalize(Vec3{std::cosh(x), std::sinh(x), 0.0}),
                    HPoint::normalize(Vec3{std::cosh(x), -std::sinh(x), 0.0})};
}

HPoint apex_on_axis(const BaseConfig&, double y) {
  if (!(y > 0.0)) fail(ErrorKind::Domain, "apex height must be positive");
  return HPoint::normalize(Vec3{std::cosh(y), 0.0, std::sinh(y)});
}

AreaLocus AreaLocus::transformed(const Isometry& iso) const {
  AreaLocus out = *this;
  out.A = iso.apply(A);
  out.B = iso.apply(B);
  out.apex = iso.apply(apex);
  out.apex_mirror = iso.apply(apex_mirror);
  out.mid_apex_a = iso.apply(mid_apex_a);
  out.mid_mirror_b = iso.apply(mid_mirror_b);
  out.axis = iso.apply(axis);
  out.carrier = transform(carrier, iso);
  out.mirror = transform(mirror, iso);
  return out;
}

AreaLocus lexell_locus(const BaseConfig& base, const HPoint& P) {
  const Geodesic ab = geodesic_through(base.A, base.B);
  if (std::abs(ab.side(P)) <= kTolId) fail(ErrorKind::Degenerate, "apex lies on the base line");

  const Geodesic bisector(base.A.vec() - base.B.vec());
  AreaLocus out;
  out.A = base.A;
  out.B = base.B;
  out.half_distance = base.x;
  out.apex = P;
  out.apex_mirror = reflect_across(bisector, P);
  out.mid_apex_a = midpoint(P, base.A);
  out.mid_mirror_b = midpoint(out.apex_mirror, base.B);
  if (hdist(out.mid_apex_a, out.mid_mirror_b) <= kTolPoint) {
    fail(ErrorKind::Degenerate, "midpoints coincide");
  }
  out.axis = geodesic_through(out.mid_apex_a, out.mid_mirror_b);
  if (out.axis.side(P) < 0.0) out.axis = out.axis.reversed();
  out.carrier = hypercycle_through(out.axis, P);
  out.mirror = hypercycle_at(out.axis, -out.carrier.offset, foot_of_perpendicular(base.A, out.axis));
  out.area = angle_deficit(P, base.A, base.B);
  return out;
}

Isometry standardizing_isometry(const HPoint& A, const HPoint& B) {
  const Isometry to_center = Isometry::boost_to(midpoint(A, B)).inverse();
  const Vec3 a = to_center.apply(A.vec());
  return to_center.then(Isometry::rotation(-std::atan2(a.x2, a.x1)));
}

AreaLocus lexell_locus(const HPoint& A, const HPoint& B, const HPoint& P) {
  const Isometry iso = standardizing_isometry(A, B);
  const BaseConfig base = BaseConfig::standard(0.5 * hdist(A, B));
  AreaLocus out = lexell_locus(base, iso.apply(P)).transformed(iso.inverse());
  out.A = A;
  out.B = B;
  out.apex = P;
  return out;
}

LocusReport check_locus(const AreaLocus& locus, int samples, double span) {
  if (samples < 2) fail(ErrorKind::ContractViolation, "at least two samples required");
  LocusReport rep;
  rep.samples = samples;
  double lo = locus.area;
  double hi = locus.area;
  for (int k = 0; k < samples; ++k) {
    const double s = -span + 2.0 * span * k / (samples - 1);
    const HPoint z = locus.carrier.point_at(s);
    const double area = angle_deficit(z, locus.A, locus.B);
    lo = std::min(lo, area);
    hi = std::max(hi, area);
    rep.midpoint_residual = std::max({rep.midpoint_residual, std::abs(locus.axis.side(midpoint(z, locus.A))),
                                      std::abs(locus.axis.side(midpoint(z, locus.B)))});
  }
  rep.area_spread = hi - lo;
  rep.mirror_residual =
      std::max(std::abs(locus.mirror.residual(locus.A)), std::abs(locus.mirror.residual(locus.B)));
  rep.carrier_residual = std::abs(locus.carrier.residual(locus.apex));
  return rep;
}

double subarc_difference(const AreaLocus& locus, const HPoint& z1, const HPoint& z2) {
  const double s1 = locus.axis.side(z1);
  const double s2 = locus.axis.side(z2);
  if (!(s1 * s2 < 0.0)) fail(ErrorKind::Domain, "chord endpoints on the same side of the axis");
  // The combination with zero side value is the crossing point.
  const HPoint x = HPoint::normalize(std::abs(s2) * z1.vec() + std::abs(s1) * z2.vec());
  return std::abs(hdist(z1, x) - hdist(x, z2));
}

double equal_subarc_check(const AreaLocus& locus, int n, std::uint64_t seed) {
  Rng rng(seed);
  double worst = 0.0;
  for (int k = 0; k < n; ++k) {
    const HPoint z1 = locus.mirror.point_at(rng.uniform(-3.0, 3.0));
    const HPoint z2 = locus.carrier.point_at(rng.uniform(-3.0, 3.0));
    worst = std::max(worst, subarc_difference(locus, z1, z2));
  }
  return worst;
}

double angle_deficit(const HPoint& a, const HPoint& b, const HPoint& c) {
  return kPi - (angle_at(a, b, c) + angle_at(b, c, a) + angle_at(c, a, b));
}

double triangle_area(const Triangle<HyperbolicPlane>& tri) {
  check_triangle(tri);
  return angle_deficit(tri.A, tri.B, tri.C);
}

double area_function(double x, double u) {
  // (ch u - 1) cancels between numerator and denominator.
  const double ch = std::cosh(x);
  return (ch + u) / (ch * u + 1.0);
}

double area_function_derivative(double x, double u) {
  const double sh = std::sinh(x);
  const double d = std::cosh(x) * u + 1.0;
  return -sh * sh / (d * d);
}

DerivativeCheck area_derivative_check(double x, double u) {
  if (!(u > 1.0)) fail(ErrorKind::Domain, "area function argument must exceed 1");
  constexpr double h = 1e-5;
  DerivativeCheck out;
  out.closed_form = area_function_derivative(x, u);
  out.finite_difference = (area_function(x, u + h) - area_function(x, u - h)) / (2.0 * h);
  out.relative_error = std::abs(out.finite_difference - out.closed_form) / std::abs(out.closed_form);
  return out;
}

double apex_area_formula(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) fail(ErrorKind::Domain, "apex area needs positive lengths");
  return half_angle_area(x, y);
}

double right_triangle_area(double leg, double height) {
  if (!(leg >= 0.0) || !(height >= 0.0)) fail(ErrorKind::Domain, "negative right-triangle leg");
  return 0.5 * half_angle_area(leg, height);
}

SplitAreas split_areas(double x, double a, double t) {
  if (!(std::abs(a) < x)) fail(ErrorKind::Domain, "foot must lie strictly between A and B");
  if (!(t >= 0.0)) fail(ErrorKind::Domain, "apex height must be nonnegative");
  return {right_triangle_area(x - a, t), right_triangle_area(x + a, t)};
}

double split_ideal_limit(double x, double a) {
  if (!(std::abs(a) < x)) fail(ErrorKind::Domain, "foot must lie strictly between A and B");
  return 2.0 * (std::atan(std::tanh(0.5 * (x - a))) + std::atan(std::tanh(0.5 * (x + a))));
}

HPoint split_apex(double a, double t) {
  return HPoint::normalize(Vec3{std::cosh(a) * std::cosh(t), std::sinh(a) * std::cosh(t), std::sinh(t)});
}

double foliation_area_limit(double x) {
  if (!(x > 0.0)) fail(ErrorKind::Domain, "half base length must be positive");
  return 4.0 * std::atan(std::tanh(0.5 * x));
}

double solve_apex_height(double x, double area) {
  const double limit = foliation_area_limit(x);
  if (!(area > 0.0) || !(area < limit)) fail(ErrorKind::Infeasible, "target area outside (0, limit)");
  auto residual = [&](double y) { return half_angle_area(x, y) - area; };
  if (residual(kMaxApexHeight) < 0.0) {
    fail(ErrorKind::Infeasible, "target area needs an apex beyond the search bracket");
  }
  std::uintmax_t iterations = 200;
  const auto [lo, hi] = boost::math::tools::bisect(
      residual, 0.0, kMaxApexHeight, [](double a, double b) { return b - a <= 1e-12; }, iterations);
  return 0.5 * (lo + hi);
}

std::vector<AreaLocus> foliation(const BaseConfig& base, std::span<const double> areas) {
  std::vector<AreaLocus> leaves;
  leaves.reserve(areas.size());
  for (double area : areas) {
    leaves.push_back(lexell_locus(base, apex_on_axis(base, solve_apex_height(base.x, area))));
  }
  return leaves;
}

double leaf_separation(const AreaLocus& a, const AreaLocus& b, int samples, double span) {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int k = 0; k < samples; ++k) {
    const double s = samples == 1 ? 0.0 : -span + 2.0 * span * k / (samples - 1);
    const double r = b.carrier.residual(a.carrier.point_at(s));
    lo = std::min(lo, r);
    hi = std::max(hi, r);
  }
  return std::max(lo, -hi);
}

double ideal_limit_area(double c) {
  if (!(c > 0.0)) fail(ErrorKind::Domain, "apex distance must be positive");
  return kPi - 2.0 * std::atan(1.0 / std::sinh(c));
}

namespace {

void check_apex_angles(double alpha, double beta) {
  // alpha + beta = pi is the degenerate apex on the line, kept as a boundary value.
  if (!(alpha > 0.0) || !(beta > 0.0) || !(alpha + beta <= kPi + kTolClamp)) {
    fail(ErrorKind::Domain, "angles must be positive with sum at most pi");
  }
}

}  // namespace

double sinh_c_from_angles(double alpha, double beta) {
  check_apex_angles(alpha, beta);
  return (std::cos(alpha) + std::cos(beta)) / (std::sin(alpha) * std::sin(beta));
}

double cosh_c_from_angles(double alpha, double beta) {
  check_apex_angles(alpha, beta);
  return (1.0 + std::cos(alpha) * std::cos(beta)) / (std::sin(alpha) * std::sin(beta));
}

double truncated_ideal_area(double c, double truncation, double s) {
  if (!(c > 0.0) || !(truncation > std::abs(s))) {
    fail(ErrorKind::Domain, "truncation must exceed the apex parameter");
  }
  const HPoint far_a = HPoint::normalize(Vec3{std::cosh(truncation), std::sinh(truncation), 0.0});
  const HPoint far_b = HPoint::normalize(Vec3{std::cosh(truncation), -std::sinh(truncation), 0.0});
  const HPoint apex = HPoint::normalize(
      Vec3{std::cosh(c) * std::cosh(s), std::cosh(c) * std::sinh(s), std::sinh(c)});
  return angle_deficit(apex, far_a, far_b);
}

double truncated_half_area(double c, double truncation) {
  if (!(c > 0.0) || !(truncation > 0.0)) fail(ErrorKind::Domain, "lengths must be positive");
  const HPoint far_a = HPoint::normalize(Vec3{std::cosh(truncation), std::sinh(truncation), 0.0});
  const HPoint apex = HPoint::normalize(Vec3{std::cosh(c), 0.0, std::sinh(c)});
  return angle_deficit(apex, HPoint::origin(), far_a);
}

}  // namespace ccg
