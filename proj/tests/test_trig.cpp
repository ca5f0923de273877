#include <gtest/gtest.h>

#include <cmath>

#include "ccg/errors.hpp"
#include "ccg/random.hpp"
#include "ccg/sampling.hpp"
#include "ccg/trig.hpp"

using namespace ccg;

TEST(Cathetus, ClosedFormValues) {
  EXPECT_NEAR(cathetus_from_hypotenuse(1.0, kPi / 3, Geometry::Hyperbolic), 0.40099158142700688, 1e-15);
  EXPECT_NEAR(cathetus_from_hypotenuse(1.0, kPi / 3, Geometry::Spherical), 0.66161993185017656, 1e-15);
  EXPECT_NEAR(cathetus_from_hypotenuse(2.0, kPi / 3, Geometry::Euclidean), 1.0, 1e-15);
  EXPECT_LT(cathetus_from_hypotenuse(1.0, kPi / 2 - 1e-9, Geometry::Hyperbolic), 1e-8);
}

TEST(Cathetus, Errors) {
  EXPECT_THROW(cathetus_from_hypotenuse(1.0, kPi / 2, Geometry::Hyperbolic), GeometryError);
  EXPECT_THROW(cathetus_from_hypotenuse(1.0, 0.0, Geometry::Hyperbolic), GeometryError);
  try {
    cathetus_from_hypotenuse(kPi / 2, 0.5, Geometry::Spherical);
    ADD_FAILURE();
  } catch (const GeometryError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Range);
  }
}

TEST(Cathetus, SyntheticConstructionAgrees) {
  for (Geometry g : {Geometry::Hyperbolic, Geometry::Spherical, Geometry::Euclidean}) {
    Rng rng(31);
    for (int k = 0; k < 200; ++k) {
      const double top = g == Geometry::Spherical ? kPi / 2 - 0.1 : 5.0;
      const double b = rng.uniform(0.1, top);
      const double alpha = rng.uniform(0.1, kPi / 2 - 0.1);
      const RightTriangleConfig cfg = construct_right_triangle(b, alpha, g);
      EXPECT_NEAR(cfg.cathetus, cathetus_from_hypotenuse(b, alpha, g), 1e-9) << to_string(g);
      EXPECT_LT(cfg.cathetus, b);
      if (g == Geometry::Hyperbolic) {
        EXPECT_NEAR(std::tanh(cfg.cathetus), std::cos(alpha) * std::tanh(b), kTolId);
        EXPECT_NEAR(std::cosh(b), std::cosh(cfg.cathetus) * std::cosh(cfg.opposite), kTolId * std::cosh(b));
      } else if (g == Geometry::Spherical) {
        EXPECT_NEAR(std::tan(cfg.cathetus), std::cos(alpha) * std::tan(b), kTolId);
        EXPECT_NEAR(std::cos(b), std::cos(cfg.cathetus) * std::cos(cfg.opposite), kTolId);
      }
    }
  }
}

TEST(Menelaus, RatioMatchesAngleForm) {
  EXPECT_DOUBLE_EQ(menelaus_rhs(kPi / 3), 3.0);
  const double ac = 1.3, alpha = 0.7;
  const double ab = cathetus_from_hypotenuse(ac, alpha, Geometry::Hyperbolic);
  EXPECT_NEAR(menelaus_ratio(ac + ab, ac - ab, Geometry::Hyperbolic), menelaus_rhs(alpha), 1e-9 * menelaus_rhs(alpha));
  EXPECT_THROW(menelaus_ratio(1.0, 0.0, Geometry::Hyperbolic), GeometryError);
}

TEST(Menelaus, IndependentOfPointOnRay) {
  for (Geometry g : {Geometry::Hyperbolic, Geometry::Spherical}) {
    const double alpha = 0.9;
    const auto near = construct_right_triangle(0.4, alpha, g);
    const auto far = construct_right_triangle(1.2, alpha, g);
    const double r1 = menelaus_ratio(0.4 + near.cathetus, 0.4 - near.cathetus, g);
    const double r2 = menelaus_ratio(1.2 + far.cathetus, 1.2 - far.cathetus, g);
    EXPECT_NEAR(r1, r2, kTolId * r1);
  }
}

TEST(Menelaus, EuclideanLimit) {
  for (double alpha : {0.3, 0.8, 1.3}) {
    const double ac = 1e-3;
    const auto cfg = construct_right_triangle(ac, alpha, Geometry::Hyperbolic);
    const double hyp = menelaus_ratio(ac + cfg.cathetus, ac - cfg.cathetus, Geometry::Hyperbolic);
    const double euc = (ac + cfg.cathetus) / (ac - cfg.cathetus);
    EXPECT_NEAR(hyp / euc, 1.0, 1e-5);
  }
}

TEST(CosineLaw, EquilateralAndRoundTrip) {
  const double a = hyp_angle_from_sides(1.0, 1.0, 1.0);
  EXPECT_NEAR(a, hyp_angle_from_sides(1.0, 1.0, 1.0), 0.0);
  // cos A = cosh s / (1 + cosh s) for an equilateral triangle of side s.
  EXPECT_NEAR(std::cos(a), std::cosh(1.0) / (1.0 + std::cosh(1.0)), 1e-15);
  Rng rng(32);
  for (int k = 0; k < 200; ++k) {
    const double b = rng.uniform(0.1, 5.0), c = rng.uniform(0.1, 5.0), angle = rng.uniform(0.1, 3.0);
    const double opp = hyp_side_from_sas(b, c, angle);
    EXPECT_NEAR(hyp_angle_from_sides(opp, b, c), angle, kTolId);
    const double sb = rng.uniform(0.1, 1.5), sc = rng.uniform(0.1, 1.5);
    EXPECT_NEAR(sph_angle_from_sides(sph_side_from_sas(sb, sc, angle), sb, sc), angle, kTolId);
  }
  EXPECT_THROW(hyp_angle_from_sides(3.0, 1.0, 1.0), GeometryError);
}

TEST(CosineLaw, RightTriangleRecoversApex) {
  const auto cfg = construct_right_triangle(2.0, 0.6, Geometry::Hyperbolic);
  EXPECT_NEAR(hyp_angle_from_sides(cfg.opposite, cfg.hypotenuse, cfg.cathetus), 0.6, kTolId);
}

TEST(SineLaw, RandomTriangles) {
  Rng rng(33);
  for (int k = 0; k < 1000; ++k) {
    EXPECT_LE(sine_law_residual(random_triangle<HyperbolicPlane>(rng)), kTolId);
    EXPECT_LE(sine_law_residual(random_triangle<SphericalPlane>(rng)), kTolId);
  }
}
