#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "ccg/errors.hpp"
#include "ccg/hyperbolic.hpp"
#include "ccg/plane.hpp"
#include "ccg/random.hpp"
#include "ccg/spherical.hpp"
#include "ccg/tolerances.hpp"

using namespace ccg;

namespace {

HPoint random_hpoint(Rng& rng, double radius = 3.0) {
  return polar_point(HPoint::origin(), rng.uniform(0.0, 2.0 * kPi), rng.uniform(0.0, radius));
}

void expect_kind(ErrorKind kind, const std::function<void()>& fn) {
  try {
    fn();
    ADD_FAILURE() << "expected " << to_string(kind);
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.kind(), kind) << e.what();
  }
}

}  // namespace

TEST(MinkowskiInner, BasisValues) {
  EXPECT_EQ(mink_inner({1, 0, 0}, {1, 0, 0}), -1.0);
  EXPECT_EQ(mink_inner({0, 1, 0}, {0, 1, 0}), 1.0);
  EXPECT_NEAR(mink_inner({std::cosh(1.0), std::sinh(1.0), 0}, {1, 0, 0}), -1.5430806348152438, 1e-15);
}

TEST(HPointTest, RejectsOffSheetAndLowerSheet) {
  expect_kind(ErrorKind::InvalidPoint, [] { HPoint(Vec3{2.0, 0.0, 0.0}); });
  expect_kind(ErrorKind::InvalidPoint, [] { HPoint(Vec3{-1.0, 0.0, 0.0}); });
  EXPECT_NO_THROW(HPoint(Vec3{std::cosh(2.0), 0.0, std::sinh(2.0)}));
}

TEST(Hdist, KnownValues) {
  const HPoint o = HPoint::origin();
  EXPECT_EQ(hdist(o, o), 0.0);
  EXPECT_NEAR(hdist(o, HPoint(Vec3{std::cosh(1.0), std::sinh(1.0), 0.0})), 1.0, 1e-15);
}

TEST(Hdist, MetricOnRandomTriples) {
  Rng rng(11);
  for (int k = 0; k < 500; ++k) {
    const HPoint p = random_hpoint(rng), q = random_hpoint(rng), r = random_hpoint(rng);
    EXPECT_EQ(hdist(p, q), hdist(q, p));
    EXPECT_LE(hdist(p, r), hdist(p, q) + hdist(q, r) + kTolId);
  }
}

TEST(PointAlong, FormulaAndRoundTrip) {
  const HPoint o = HPoint::origin();
  const HPoint q = point_along(o, {0, 1, 0}, 2.0);
  EXPECT_NEAR(q.x0(), std::cosh(2.0), 1e-14);
  EXPECT_NEAR(q.x1(), std::sinh(2.0), 1e-14);
  EXPECT_NEAR(hdist(o, point_along(o, {0, 1, 0}, 0.0)), 0.0, 1e-15);

  Rng rng(12);
  for (int k = 0; k < 200; ++k) {
    const HPoint p = random_hpoint(rng);
    const Vec3 n = tangent_frame(p).direction(rng.uniform(0.0, 2.0 * kPi));
    const double t = rng.uniform(0.0, 10.0);
    EXPECT_NEAR(hdist(p, point_along(p, n, t)), t, kTolId * std::max(1.0, t));
  }
}

TEST(PointAlong, RejectsNonTangent) {
  expect_kind(ErrorKind::ContractViolation, [] { point_along(HPoint::origin(), {1, 0, 0}, 1.0); });
  expect_kind(ErrorKind::ContractViolation, [] { point_along(HPoint::origin(), {0, 2, 0}, 1.0); });
}

TEST(GeodesicThrough, OrientationAndContainment) {
  const HPoint p = HPoint::origin();
  const HPoint q(Vec3{std::cosh(1.0), std::sinh(1.0), 0.0});
  const Geodesic g = geodesic_through(p, q);
  EXPECT_NEAR(std::abs(g.normal().x2), 1.0, 1e-15);
  EXPECT_NEAR(g.normal().x0, 0.0, 1e-15);
  // Right-handed (p, direction, normal) frame.
  EXPECT_GT(det(p.vec(), unit_tangent(p, q), g.normal()), 0.0);
  const Geodesic back = geodesic_through(q, p);
  EXPECT_NEAR(back.normal().x2, -g.normal().x2, 1e-15);
  for (double s : {0.0, 0.5, 3.0, 7.0}) {
    EXPECT_NEAR(g.side(point_along(p, unit_tangent(p, q), s)), 0.0, 1e-12);
  }
  expect_kind(ErrorKind::Degenerate, [&] { geodesic_through(p, p); });
}

TEST(Intersect, CommonPointAndUltraparallel) {
  const Geodesic ax1(Vec3{0, 0, 1});
  const Geodesic ax2(Vec3{0, 1, 0});
  const auto o = intersect_geodesics(ax1, ax2);
  ASSERT_TRUE(o.has_value());
  EXPECT_NEAR(hdist(*o, HPoint::origin()), 0.0, 1e-12);

  Rng rng(13);
  for (int k = 0; k < 100; ++k) {
    const HPoint x = random_hpoint(rng);
    const Geodesic g1 = geodesic_through(x, random_hpoint(rng));
    const Geodesic g2 = geodesic_through(x, random_hpoint(rng));
    const auto m = intersect_geodesics(g1, g2);
    ASSERT_TRUE(m.has_value());
    EXPECT_LT(hdist(*m, x), 1e-8);
  }

  // Two perpendiculars to the x1-axis at distance 1 and 2 from the origin.
  const Geodesic u1 = geodesic_through(polar_point(HPoint::origin(), 0.0, 1.0),
                                       polar_point(polar_point(HPoint::origin(), 0.0, 1.0), kPi / 2, 1.0));
  const Geodesic u2 = geodesic_through(polar_point(HPoint::origin(), 0.0, 2.0),
                                       polar_point(polar_point(HPoint::origin(), 0.0, 2.0), kPi / 2, 1.0));
  EXPECT_FALSE(intersect_geodesics(u1, u2).has_value());
  expect_kind(ErrorKind::Degenerate, [&] { intersect_geodesics(u1, u1.reversed()); });
}

TEST(AngleAt, RightStraightAndCosineLaw) {
  const HPoint v = HPoint::origin();
  EXPECT_NEAR(angle_at(v, polar_point(v, 0.0, 1.0), polar_point(v, kPi / 2, 2.0)), kPi / 2, 1e-14);
  EXPECT_NEAR(angle_at(v, polar_point(v, 0.0, 1.0), polar_point(v, kPi, 2.0)), kPi, 1e-14);
  Rng rng(14);
  for (int k = 0; k < 200; ++k) {
    const HPoint a = random_hpoint(rng), b = random_hpoint(rng), c = random_hpoint(rng);
    const double ab = hdist(a, b), ac = hdist(a, c), bc = hdist(b, c);
    if (std::min({ab, ac, bc}) < 0.1) continue;
    const double law = (std::cosh(ab) * std::cosh(ac) - std::cosh(bc)) / (std::sinh(ab) * std::sinh(ac));
    EXPECT_NEAR(std::cos(angle_at(a, b, c)), law, kTolId);
  }
  expect_kind(ErrorKind::Degenerate, [&] { angle_at(v, v, polar_point(v, 0.0, 1.0)); });
}

TEST(Foot, RecoversPerpendicularDisplacement) {
  const Geodesic g(Vec3{0, 0, 1});
  const HPoint on = polar_point(HPoint::origin(), 0.0, 0.7);
  EXPECT_LT(hdist(foot_of_perpendicular(on, g), on), 1e-12);

  Rng rng(15);
  for (int k = 0; k < 100; ++k) {
    const double along = rng.uniform(-2.0, 2.0);
    const HPoint f = polar_point(HPoint::origin(), along < 0.0 ? kPi : 0.0, std::abs(along));
    const double d = rng.uniform(0.1, 4.0);
    const HPoint p = polar_point(f, kPi / 2, d);
    const HPoint back = foot_of_perpendicular(p, g);
    EXPECT_LT(hdist(back, f), 1e-9);
    EXPECT_NEAR(std::sinh(hdist(p, back)), std::abs(g.side(p)), 1e-9 * std::cosh(d));
    EXPECT_NEAR(angle_at(back, p, polar_point(HPoint::origin(), 0.0, 5.0)), kPi / 2, kTolId);
  }
}

TEST(Midpoint, HalvesAndSymmetric) {
  const HPoint o = HPoint::origin();
  const HPoint m = midpoint(o, HPoint(Vec3{std::cosh(2.0), std::sinh(2.0), 0.0}));
  EXPECT_NEAR(m.x0(), std::cosh(1.0), 1e-14);
  EXPECT_NEAR(m.x1(), std::sinh(1.0), 1e-14);
  Rng rng(16);
  for (int k = 0; k < 100; ++k) {
    const HPoint p = random_hpoint(rng), q = random_hpoint(rng);
    const HPoint a = midpoint(p, q), b = midpoint(q, p);
    EXPECT_LT(hdist(a, b), 1e-12);
    EXPECT_NEAR(hdist(p, a), hdist(a, q), kTolId);
    EXPECT_NEAR(hdist(p, a), 0.5 * hdist(p, q), kTolId);
  }
  expect_kind(ErrorKind::Degenerate, [&] { midpoint(o, o); });
}

TEST(DiskChart, RoundTripAndRadius) {
  const HPoint c = disk_to_hpoint(DiskPoint{0.0, 0.0});
  EXPECT_NEAR(hdist(c, HPoint::origin()), 0.0, 1e-15);
  EXPECT_NEAR(hdist(HPoint::origin(), disk_to_hpoint(DiskPoint{0.5, 0.0})), 1.0986122886681098, 1e-14);
  Rng rng(17);
  for (int k = 0; k < 200; ++k) {
    const HPoint p = random_hpoint(rng), q = random_hpoint(rng);
    const DiskPoint dp = hpoint_to_disk(p), dq = hpoint_to_disk(q);
    EXPECT_LT(hdist(disk_to_hpoint(dp), p), kTolId);
    EXPECT_NEAR(hdist(disk_to_hpoint(dp), disk_to_hpoint(dq)), hdist(p, q), kTolId);
    EXPECT_NEAR(2.0 * std::atanh(dp.radius()), hdist(HPoint::origin(), p), kTolId);
  }
  expect_kind(ErrorKind::OutOfModel, [] { DiskPoint::make(0.8, 0.6); });
}

TEST(RadialProject, TanhOfDistanceAndCollinearity) {
  const HPoint o = HPoint::origin();
  EXPECT_NEAR(radial_project(o, o).norm(), 0.0, 1e-15);
  EXPECT_NEAR(radial_project(o, polar_point(o, 0.4, 1.0)).norm(), 0.7615941559557649, 1e-15);

  Rng rng(18);
  for (int k = 0; k < 100; ++k) {
    const HPoint base = random_hpoint(rng);
    const Vec3 dir = tangent_frame(base).direction(rng.uniform(0.0, 2.0 * kPi));
    const double d = rng.uniform(0.1, 5.0);
    EXPECT_NEAR(radial_project(base, point_along(base, dir, d)).norm(), std::tanh(d), kTolId);
    const TangentPoint a = radial_project(base, point_along(base, dir, 0.5));
    const TangentPoint b = radial_project(base, point_along(base, dir, 2.5));
    EXPECT_NEAR(a.s * b.t - a.t * b.s, 0.0, kTolId);
  }
}

TEST(Reflect, FixesAxisAndIsIsometricInvolution) {
  const Geodesic g = geodesic_through(HPoint::origin(), polar_point(HPoint::origin(), 1.0, 2.0));
  const HPoint on = polar_point(HPoint::origin(), 1.0, 0.5);
  EXPECT_LT(hdist(reflect_across(g, on), on), 1e-12);
  Rng rng(19);
  for (int k = 0; k < 100; ++k) {
    const HPoint p = random_hpoint(rng), q = random_hpoint(rng);
    EXPECT_LT(hdist(reflect_across(g, reflect_across(g, p)), p), kTolId);
    EXPECT_NEAR(hdist(reflect_across(g, p), reflect_across(g, q)), hdist(p, q), kTolId);
  }
}

TEST(IsometryTest, InverseAndBoost) {
  Rng rng(20);
  for (int k = 0; k < 50; ++k) {
    const HPoint t = random_hpoint(rng);
    const Isometry m = Isometry::boost_to(t).then(Isometry::rotation(rng.uniform(0.0, 6.0)));
    EXPECT_LT(hdist(Isometry::boost_to(t).apply(HPoint::origin()), t), 1e-10);
    const HPoint p = random_hpoint(rng);
    EXPECT_LT(hdist(m.inverse().apply(m.apply(p)), p), 1e-9);
  }
}

TEST(Sphere, Primitives) {
  const SpherePoint a(Vec3{1, 0, 0}), b(Vec3{0, 1, 0});
  EXPECT_NEAR(sphere_dist(a, b), kPi / 2, 1e-15);
  EXPECT_EQ(sphere_dist(a, a), 0.0);
  expect_kind(ErrorKind::Degenerate, [&] { sphere_geodesic(a, SpherePoint(Vec3{-1, 0, 0})); });

  Rng rng(21);
  for (int k = 0; k < 200; ++k) {
    const auto p = SphericalPlane::polar(rng.uniform(0.0, 6.3), rng.uniform(0.0, kPi / 4));
    const auto q = SphericalPlane::polar(rng.uniform(0.0, 6.3), rng.uniform(0.0, kPi / 4));
    const auto r = SphericalPlane::polar(rng.uniform(0.0, 6.3), rng.uniform(0.0, kPi / 4));
    const double pq = sphere_dist(p, q), pr = sphere_dist(p, r), qr = sphere_dist(q, r);
    if (std::min({pq, pr, qr}) < 0.1) continue;
    const double law = (std::cos(qr) - std::cos(pq) * std::cos(pr)) / (std::sin(pq) * std::sin(pr));
    EXPECT_NEAR(std::cos(sphere_angle(p, q, r)), law, kTolId);
  }
}

TEST(Serialization, SeventeenDigits) {
  const HPoint p = polar_point(HPoint::origin(), 0.3, 1.7);
  const std::string s = to_string(p);
  double a, b, c;
  ASSERT_EQ(std::sscanf(s.c_str(), "(%lf, %lf, %lf)", &a, &b, &c), 3);
  EXPECT_EQ(a, p.x0());
  EXPECT_EQ(b, p.x1());
  EXPECT_EQ(c, p.x2());
}

TEST(RngTest, PortableStream) {
  // First outputs of the 64-bit Mersenne Twister from the default seed.
  Rng rng(5489u);
  EXPECT_EQ(rng.next(), 14514284786278117030ULL);
  Rng a = Rng::for_trial(42, 3), b = Rng::for_trial(42, 3), c = Rng::for_trial(42, 4);
  EXPECT_EQ(a.next(), b.next());
  EXPECT_NE(Rng::for_trial(42, 3).next(), c.next());
  for (int k = 0; k < 1000; ++k) {
    const double u = a.uniform();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
  }
}
