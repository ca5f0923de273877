#pragma once

// Concurrent cevians AD, BE, CF of a triangle ABC meeting at an interior
// point O, in all three constant-curvature planes.
//
// With f the ratio function of the plane (id, tan, tanh) the ratios
//   alpha = f(AO)/f(OD), beta = f(BO)/f(OE), gamma = f(CO)/f(OF)
// satisfy alpha*beta*gamma = alpha + beta + gamma + 2. The converse
// construction rebuilds the triangle from the six lengths around O.

#include <array>

#include "ccg/hyperbolic.hpp"
#include "ccg/plane.hpp"

namespace ccg {

/// The six lengths around O: AO, BO, CO along the cevians toward the
/// vertices and OD, OE, OF toward the feet.
struct RatioSumInput {
  double A_len = 0.0;
  double B_len = 0.0;
  double C_len = 0.0;
  double a_len = 0.0;
  double b_len = 0.0;
  double c_len = 0.0;
};

template <PlaneGeometry Plane>
struct CevianFrame {
  using Point = typename Plane::Point;

  Triangle<Plane> tri;
  Point O;
  Point D;  // on BC
  Point E;  // on CA
  Point F;  // on AB
  RatioSumInput lengths;
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  // Angles at O: p = BOF, q = AOF, r = BOD.
  double p = 0.0;
  double q = 0.0;
  double r = 0.0;
  // P = sin p / f(AO), Q = sin q / f(BO), R = sin r / f(CO).
  double P = 0.0;
  double Q = 0.0;
  double R = 0.0;
};

/// Throws Degenerate when O is on a side or vertex and OutOfScope when O is
/// outside the triangle.
template <PlaneGeometry Plane>
CevianFrame<Plane> cevian_frame(const Triangle<Plane>& tri, const typename Plane::Point& O);

/// Largest distance from a foot to its side line, and from O to each cevian,
/// measured as |side()| values.
template <PlaneGeometry Plane>
double containment_residual(const CevianFrame<Plane>& frame);

struct EulerResidual {
  double relation = 0.0;    // alpha*beta*gamma - (alpha + beta + gamma + 2)
  double reciprocal = 0.0;  // sum f(OD)/(f(AO) + f(OD)) - 1
  double scale = 1.0;       // 1 + |alpha*beta*gamma|
};

template <PlaneGeometry Plane>
EulerResidual euler_relation_residual(const CevianFrame<Plane>& frame);

struct PqrReport {
  double P = 0.0;
  double Q = 0.0;
  double R = 0.0;
  double gamma_eq = 0.0;  // gamma R - (P + Q)
  double alpha_eq = 0.0;  // alpha P - (Q + R)
  double beta_eq = 0.0;   // beta Q - (R + P)
  double lemma = 0.0;     // sin r - f(OF) (P + Q)
  double scale = 1.0;
  double max_relative() const;
};

template <PlaneGeometry Plane>
PqrReport pqr_system(const CevianFrame<Plane>& frame);

/// Ratios and relation residual straight from six lengths.
struct RatioTriple {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
  double relation = 0.0;  // relative: (abg - (a+b+g+2)) / (1 + |abg|)
};

template <PlaneGeometry Plane>
RatioTriple ratios_from_lengths(const RatioSumInput& in);

template <PlaneGeometry Plane>
RatioSumInput extract_lengths(const CevianFrame<Plane>& frame) {
  return frame.lengths;
}

template <PlaneGeometry Plane>
struct Construction {
  double g = 0.0;  // f(A)/(alpha+1)
  double h = 0.0;  // f(B)/(beta+1)
  double i = 0.0;  // f(C)/(gamma+1)
  double delta = 0.0;
  double heron_area = 0.0;  // M = delta * g h i / 2
  // Recovered angles: p = BOF, q = AOF, r = BOD.
  double p = 0.0;
  double q = 0.0;
  double r = 0.0;
  double angle_sum_residual = 0.0;
  RatioTriple ratios;
  Triangle<Plane> tri;
  typename Plane::Point O;
  typename Plane::Point D;
  typename Plane::Point E;
  typename Plane::Point F;
  /// Largest |side()| of a laid-out foot against its opposite side.
  double containment = 0.0;
};

/// Rebuilds the triangle from six lengths. O sits at the base point, A on the
/// ray at angle 0, then F, B, D, C, E counterclockwise at angles q, q+p, pi,
/// pi+q, pi+q+p.
///
/// Throws Infeasible when the ratio-sum relation fails beyond kTolConstruct,
/// and InfeasibleGeometry when g, h, i violate the triangle inequality or a
/// recovered sine exceeds 1.
template <PlaneGeometry Plane>
Construction<Plane> construct_from_ratios(const RatioSumInput& in);

struct ProjectionReport {
  std::array<double, 3> euclid_ratios{};  // OA'/OD', OB'/OE', OC'/OF'
  double max_deviation = 0.0;              // against (alpha, beta, gamma)
  double collinearity = 0.0;               // A', O, D' etc., as |sin| of the turn
  double euclid_relation = 0.0;            // relative residual of the projected ratios
  // A', B', C', D', E', F' in the tangent plane at O.
  std::array<TangentPoint, 6> projected{};
};

ProjectionReport projection_oracle(const CevianFrame<HyperbolicPlane>& frame);

struct CevaReport {
  double product = 0.0;
  /// Distance between AD x BE and BE x CF; infinite when a pair does not meet.
  double concurrency_gap = 0.0;
};

/// Throws Domain when a foot is not on its side segment.
template <PlaneGeometry Plane>
CevaReport ceva_product(const Triangle<Plane>& tri, const typename Plane::Point& D,
                        const typename Plane::Point& E, const typename Plane::Point& F);

struct LambertReport {
  double alpha = 0.0;  // f(AO)/f(OD)
  double max_ratio_spread = 0.0;  // max |alpha - beta|, |alpha - gamma|
  double ad_over_od = 0.0;
  double side = 0.0;
};

/// Equilateral triangle of the given side with its medians.
template <PlaneGeometry Plane>
LambertReport lambert_median_report(double side);

LambertReport lambert_median_report(double side, Geometry g);

/// 2 tanh x - tanh 2x.
double lambert_margin(double x);

}  // namespace ccg
