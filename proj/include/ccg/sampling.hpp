#pragma once

// Random triangles and cevian frames for property campaigns.
//
// Vertices are drawn in a disk around the base point (radius 3 for the
// hyperbolic and Euclidean planes, pi/4 on the sphere so every side stays
// below pi/2) and rejected until every angle is at least 0.15 rad and every
// side at least 0.05. Interior points are positive combinations of the
// vertices with weights in [0.1, 1].

#include <array>
#include <cmath>
#include <type_traits>
#include <utility>

#include "ccg/cevians.hpp"
#include "ccg/errors.hpp"
#include "ccg/plane.hpp"
#include "ccg/random.hpp"
#include "ccg/tolerances.hpp"

namespace ccg {

inline constexpr double kMinSampleAngle = 0.15;
inline constexpr double kMinSampleSide = 0.05;
inline constexpr int kMaxRejections = 10000;

template <PlaneGeometry Plane>
constexpr double sample_radius() {
  if constexpr (std::is_same_v<Plane, SphericalPlane>) {
    return kPi / 4;
  } else {
    return 3.0;
  }
}

template <PlaneGeometry Plane>
typename Plane::Point random_point(Rng& rng) {
  // Uniform in the radius, not in area; keeps both near and far vertices common.
  const double theta = rng.uniform(0.0, 2.0 * kPi);
  return Plane::polar(theta, rng.uniform(0.0, sample_radius<Plane>()));
}

template <PlaneGeometry Plane>
bool well_conditioned(const Triangle<Plane>& t) {
  const double sides[3] = {Plane::dist(t.B, t.C), Plane::dist(t.C, t.A), Plane::dist(t.A, t.B)};
  for (double s : sides) {
    if (!(s >= kMinSampleSide)) return false;
  }
  const double angles[3] = {Plane::angle(t.A, t.B, t.C), Plane::angle(t.B, t.C, t.A),
                            Plane::angle(t.C, t.A, t.B)};
  for (double a : angles) {
    if (!(a >= kMinSampleAngle)) return false;
  }
  return true;
}

/// Counterclockwise triangle (C on the left of AB).
template <PlaneGeometry Plane>
Triangle<Plane> random_triangle(Rng& rng) {
  for (int attempt = 0; attempt < kMaxRejections; ++attempt) {
    Triangle<Plane> t{random_point<Plane>(rng), random_point<Plane>(rng), random_point<Plane>(rng)};
    if (!well_conditioned(t)) continue;
    if (Plane::side(Plane::line(t.A, t.B), t.C) < 0.0) std::swap(t.B, t.C);
    return t;
  }
  fail(ErrorKind::Infeasible, "triangle sampling exceeded the rejection limit");
}

template <PlaneGeometry Plane>
typename Plane::Point random_interior_point(const Triangle<Plane>& t, Rng& rng) {
  const std::array<double, 3> w{rng.uniform(0.1, 1.0), rng.uniform(0.1, 1.0), rng.uniform(0.1, 1.0)};
  return Plane::combine({t.A, t.B, t.C}, w);
}

template <PlaneGeometry Plane>
CevianFrame<Plane> random_frame(Rng& rng) {
  const Triangle<Plane> t = random_triangle<Plane>(rng);
  return cevian_frame(t, random_interior_point(t, rng));
}

}  // namespace ccg
