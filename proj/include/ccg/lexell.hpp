#pragma once

// Triangles of equal area over a fixed base in the hyperbolic plane.
//
// Standard position: the base AB lies on the real axis of the disk chart,
// symmetric about the center O, with d(A,B) = 2x. An apex P on the
// perpendicular through O at distance y gives a triangle of area
// 2 arccos f(cosh y), where
//   f(u) = (cosh x u - 1)(cosh x + u) / ((cosh x u)^2 - 1)
// is strictly decreasing in u. The apexes of all triangles with the same area
// as APB on P's side of AB form a hypercycle C' whose axis G passes through
// the midpoints of PA and P'B, P' being the mirror image of P in the
// perpendicular bisector of AB. The mirror hypercycle C (same axis, opposite
// offset) passes through A and B.

#include <cstdint>
#include <span>
#include <vector>

#include "ccg/hyperbolic.hpp"
#include "ccg/plane.hpp"

namespace ccg {

/// Points at signed distance `offset` from `axis`:
///   x(s) = cosh(offset) gamma(s) + sinh(offset) n
/// where gamma is the unit-speed axis through `anchor` and n the axis normal.
struct Hypercycle {
  Geodesic axis;
  double offset = 0.0;
  HPoint anchor;   // foot of the base point on the axis; s = 0
  Vec3 direction;  // unit tangent of the axis at the anchor

  HPoint point_at(double s) const;
  /// <x, n> - sinh(offset); zero on the curve.
  double residual(const HPoint& x) const;
};

Hypercycle make_hypercycle(const Geodesic& axis, double offset);
Hypercycle hypercycle_through(const Geodesic& axis, const HPoint& p);

struct BaseConfig {
  double x = 0.0;  // half of d(A, B)
  HPoint A = HPoint::origin();
  HPoint B = HPoint::origin();

  /// A = (cosh x, sinh x, 0), B = (cosh x, -sinh x, 0). Throws Domain for x <= 0.
  static BaseConfig standard(double x);
};

/// The apex on the perpendicular through O at distance y, above AB.
HPoint apex_on_axis(const BaseConfig& base, double y);

struct AreaLocus {
  HPoint A;
  HPoint B;
  double half_distance = 0.0;
  HPoint apex;          // P
  HPoint apex_mirror;   // P'
  HPoint mid_apex_a;    // midpoint of PA
  HPoint mid_mirror_b;  // midpoint of P'B
  Geodesic axis;        // G, oriented with P on its left
  Hypercycle carrier;   // C', through P
  Hypercycle mirror;    // C, through A and B
  double area = 0.0;

  AreaLocus transformed(const Isometry& iso) const;
};

/// Throws Degenerate when P is on the line AB or the two midpoints coincide.
AreaLocus lexell_locus(const BaseConfig& base, const HPoint& P);

/// Arbitrary base: moves AB to standard position, builds the locus there, and
/// maps it back.
AreaLocus lexell_locus(const HPoint& A, const HPoint& B, const HPoint& P);

/// Isometry taking A and B to the standard position of a BaseConfig.
Isometry standardizing_isometry(const HPoint& A, const HPoint& B);

struct LocusReport {
  int samples = 0;
  double area_spread = 0.0;        // max - min area over sampled apexes and P
  double mirror_residual = 0.0;    // A and B against C
  double carrier_residual = 0.0;   // P against C'
  double midpoint_residual = 0.0;  // midpoints of ZA, ZB against G
};

/// Samples `samples` apexes Z on C' with s evenly spaced in [-span, span].
LocusReport check_locus(const AreaLocus& locus, int samples = 20, double span = 3.0);

/// |d(Z1, X) - d(X, Z2)| where X is where the chord Z1Z2 crosses G. Throws
/// Domain when Z1 and Z2 are on the same side of G.
double subarc_difference(const AreaLocus& locus, const HPoint& z1, const HPoint& z2);

/// Largest subarc difference over n random chords from C to C'.
double equal_subarc_check(const AreaLocus& locus, int n, std::uint64_t seed);

/// pi minus the angle sum, without working-range checks.
double angle_deficit(const HPoint& a, const HPoint& b, const HPoint& c);
double triangle_area(const Triangle<HyperbolicPlane>& tri);

/// f(u) for half-base x.
double area_function(double x, double u);
/// Closed-form f'(u) = -sinh^2 x / (cosh x u + 1)^2.
double area_function_derivative(double x, double u);

struct DerivativeCheck {
  double closed_form = 0.0;
  double finite_difference = 0.0;
  double relative_error = 0.0;
};

/// Closed form against a central difference with step 1e-5.
DerivativeCheck area_derivative_check(double x, double u);

/// Area of APB with P at distance y from O on the perpendicular axis.
double apex_area_formula(double x, double y);

/// Area of the right triangle with legs `leg` and `height`: arccos f(cosh height)
/// with cosh(leg) in place of cosh x.
double right_triangle_area(double leg, double height);

struct SplitAreas {
  double first = 0.0;   // triangle A F Gamma(t), leg x - a
  double second = 0.0;  // triangle B F Gamma(t), leg x + a
  double total() const { return first + second; }
};

/// Throws Domain unless |a| < x and t >= 0.
SplitAreas split_areas(double x, double a, double t);
/// arccos(1/cosh(x-a)) + arccos(1/cosh(x+a)), the t -> infinity limit.
double split_ideal_limit(double x, double a);
/// Gamma(t): distance t along the perpendicular to AB raised at signed distance a from O.
HPoint split_apex(double a, double t);

/// Supremum of apex_area_formula(x, .), approached as y -> infinity.
double foliation_area_limit(double x);
/// Inverts apex_area_formula(x, .) by bisection on (0, 40].
double solve_apex_height(double x, double area);
/// One locus per target area, apex on the perpendicular axis. Throws
/// Infeasible for a target outside (0, foliation_area_limit(x)).
std::vector<AreaLocus> foliation(const BaseConfig& base, std::span<const double> areas);

/// Smallest residual of leaf `b` over samples of leaf `a`, signed so that it is
/// positive exactly when every sample lies strictly on one side of `b`.
double leaf_separation(const AreaLocus& a, const AreaLocus& b, int samples = 50, double span = 3.0);

/// Area of the triangle with two ideal vertices and apex at distance c from
/// their geodesic: 2 (pi/2 - arctan(1/sinh c)).
double ideal_limit_area(double c);
/// (cos a + cos b) / (sin a sin b).
double sinh_c_from_angles(double alpha, double beta);
/// (1 + cos a cos b) / (sin a sin b).
double cosh_c_from_angles(double alpha, double beta);

/// Angle deficit of the triangle whose ideal vertices are replaced by points at
/// distance `truncation` along AB, apex at offset c and parameter s.
double truncated_ideal_area(double c, double truncation, double s = 0.0);
/// Same for the right half cut off by the perpendicular from the apex.
double truncated_half_area(double c, double truncation);

}  // namespace ccg
