#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <vector>

#include "ccg/errors.hpp"
#include "ccg/lexell.hpp"
#include "ccg/random.hpp"

using namespace ccg;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const GeometryError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::ContractViolation;
}

}  // namespace

TEST(AreaFunction, ApexAreaValue) {
  // Frozen from a 40-digit evaluation of 2 acos f(cosh 1) with x = 0.8.
  EXPECT_NEAR(apex_area_formula(0.8, 1.0), 0.69523713074309525, 1e-14);
  const BaseConfig base = BaseConfig::standard(0.8);
  EXPECT_NEAR(angle_deficit(apex_on_axis(base, 1.0), base.A, base.B), 0.69523713074309525, 1e-13);
}

TEST(AreaFunction, DecreasingWithNegativeDerivative) {
  for (double x : {0.1, 0.8, 2.0, 4.0}) {
    double prev = area_function(x, 1.0);
    EXPECT_NEAR(prev, 1.0, 1e-14);
    for (double u = 1.05; u < 50.0; u *= 1.1) {
      const double cur = area_function(x, u);
      EXPECT_LT(cur, prev);
      EXPECT_LT(area_function_derivative(x, u), 0.0);
      prev = cur;
    }
  }
}

TEST(AreaFunction, DerivativeMatchesFiniteDifference) {
  EXPECT_NEAR(area_function_derivative(1.0, 2.0), -0.082716746063986974, 1e-15);
  for (double x : {0.3, 1.0, 2.5}) {
    for (double u : {1.2, 2.0, 7.0}) {
      EXPECT_LE(area_derivative_check(x, u).relative_error, 1e-6) << x << " " << u;
    }
  }
}

TEST(AreaFunction, ApexAreaIncreasesTowardLimit) {
  const double x = 0.8;
  double prev = 0.0;
  for (double y = 0.1; y < 30.0; y += 0.5) {
    const double a = apex_area_formula(x, y);
    EXPECT_GT(a, prev);
    EXPECT_LT(a, foliation_area_limit(x));
    prev = a;
  }
  EXPECT_NEAR(foliation_area_limit(0.8), 1.4524096454830577, 1e-14);
  EXPECT_NEAR(apex_area_formula(x, 30.0), foliation_area_limit(x), 1e-9);
}

TEST(SplitAreas, SymmetricAndMatchesCoordinates) {
  const SplitAreas sym = split_areas(1.0, 0.0, 0.7);
  EXPECT_NEAR(sym.first, sym.second, 1e-15);
  EXPECT_NEAR(sym.total(), apex_area_formula(1.0, 0.7), 1e-13);

  const SplitAreas s = split_areas(1.0, 0.3, 1.2);
  EXPECT_NEAR(s.first, 0.35744559482046069, 1e-14);
  EXPECT_NEAR(s.second, 0.59576036518085312, 1e-14);
  const BaseConfig base = BaseConfig::standard(1.0);
  EXPECT_NEAR(angle_deficit(split_apex(0.3, 1.2), base.A, base.B), s.total(), 1e-13);

  EXPECT_NEAR(split_areas(1.0, 0.3, 25.0).total(), split_ideal_limit(1.0, 0.3), 1e-9);
  EXPECT_EQ(kind_of([] { split_areas(1.0, 1.0, 1.0); }), ErrorKind::Domain);
  EXPECT_EQ(kind_of([] { split_areas(1.0, 0.2, -1.0); }), ErrorKind::Domain);
}

TEST(Locus, OnAxisApexInvariants) {
  const BaseConfig base = BaseConfig::standard(0.8);
  const AreaLocus loc = lexell_locus(base, apex_on_axis(base, 1.0));
  EXPECT_NEAR(loc.area, 0.69523713074309525, 1e-13);
  EXPECT_GT(loc.carrier.offset, 0.0);
  EXPECT_NEAR(loc.mirror.offset, -loc.carrier.offset, 1e-15);
  const LocusReport rep = check_locus(loc, 40, 4.0);
  EXPECT_LE(rep.area_spread, 1e-11);
  EXPECT_LE(rep.mirror_residual, 1e-12);
  EXPECT_LE(rep.carrier_residual, 1e-12);
  EXPECT_LE(rep.midpoint_residual, 1e-12);
  EXPECT_NEAR(loc.carrier.residual(loc.apex), 0.0, 1e-13);
  EXPECT_LE(equal_subarc_check(loc, 100, 7), 1e-11);
}

TEST(Locus, MirrorApexGivesSameLocus) {
  const BaseConfig base = BaseConfig::standard(0.6);
  const HPoint p = disk_to_hpoint(DiskPoint::make(0.25, 0.4));
  const HPoint q = disk_to_hpoint(DiskPoint::make(-0.25, 0.4));
  const AreaLocus a = lexell_locus(base, p);
  const AreaLocus b = lexell_locus(base, q);
  EXPECT_NEAR(a.area, b.area, 1e-13);
  EXPECT_NEAR(a.carrier.offset, b.carrier.offset, 1e-13);
  const Vec3 na = a.axis.normal(), nb = b.axis.normal();
  EXPECT_NEAR(na.x0, nb.x0, 1e-12);
  EXPECT_NEAR(na.x1, nb.x1, 1e-12);
  EXPECT_NEAR(na.x2, nb.x2, 1e-12);
  EXPECT_NEAR(a.carrier.residual(q), 0.0, 1e-12);
}

TEST(Locus, GeneralBaseMatchesStandardPosition) {
  Rng rng(51);
  for (int k = 0; k < 50; ++k) {
    const HPoint A = polar_point(HPoint::origin(), rng.uniform(0, 2 * kPi), rng.uniform(0, 2));
    const HPoint B = polar_point(A, rng.uniform(0, 2 * kPi), rng.uniform(0.3, 3));
    const HPoint P = polar_point(midpoint(A, B), rng.uniform(0, 2 * kPi), rng.uniform(0.3, 2.5));
    if (std::abs(geodesic_through(A, B).side(P)) < 0.05) continue;
    const AreaLocus loc = lexell_locus(A, B, P);
    EXPECT_NEAR(loc.area, angle_deficit(P, A, B), 1e-11);
    const LocusReport rep = check_locus(loc);
    EXPECT_LE(rep.mirror_residual, 1e-10);
    EXPECT_LE(rep.midpoint_residual, 1e-10);
    // Angle sums of far apexes lose digits in the raw frame; compare areas
    // after moving the locus back to standard position.
    const LocusReport std_rep = check_locus(loc.transformed(standardizing_isometry(A, B)));
    EXPECT_LE(std_rep.area_spread, 1e-10);
  }
}

TEST(Locus, DegenerateAndDomainErrors) {
  const BaseConfig base = BaseConfig::standard(0.8);
  EXPECT_EQ(kind_of([] { BaseConfig::standard(0.0); }), ErrorKind::Domain);
  EXPECT_EQ(kind_of([&] { lexell_locus(base, HPoint::origin()); }), ErrorKind::Degenerate);
  const AreaLocus loc = lexell_locus(base, apex_on_axis(base, 1.0));
  EXPECT_EQ(kind_of([&] { subarc_difference(loc, loc.carrier.point_at(-1), loc.carrier.point_at(1)); }),
            ErrorKind::Domain);
}

TEST(Foliation, RecoversHeightAndOrdersLeaves) {
  const double x = 0.8;
  EXPECT_NEAR(solve_apex_height(x, apex_area_formula(x, 1.0)), 1.0, 1e-9);
  const BaseConfig base = BaseConfig::standard(x);
  EXPECT_TRUE(foliation(base, std::vector<double>{}).empty());

  const std::vector<double> areas{0.2, 0.5, 0.9, 1.3};
  const auto leaves = foliation(base, areas);
  ASSERT_EQ(leaves.size(), areas.size());
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    EXPECT_NEAR(leaves[i].area, areas[i], 1e-9);
    if (i > 0) {
      EXPECT_GT(leaves[i].carrier.offset, leaves[i - 1].carrier.offset);
      EXPECT_GT(leaf_separation(leaves[i - 1], leaves[i]), 0.0);
    }
  }
  EXPECT_EQ(kind_of([&] { foliation(base, std::vector<double>{1.5}); }), ErrorKind::Infeasible);
  EXPECT_EQ(kind_of([&] { foliation(base, std::vector<double>{0.0}); }), ErrorKind::Infeasible);
}

TEST(IdealLimit, ValuesAndAngleForms) {
  EXPECT_NEAR(sinh_c_from_angles(kPi / 2, kPi / 2), 0.0, 1e-15);
  EXPECT_NEAR(ideal_limit_area(1.0), 1.7315389664793172, 1e-14);
  Rng rng(52);
  for (int k = 0; k < 200; ++k) {
    const double a = rng.uniform(0.1, 1.4), b = rng.uniform(0.1, 1.4);
    const double sh = sinh_c_from_angles(a, b), ch = cosh_c_from_angles(a, b);
    EXPECT_NEAR(ch * ch - sh * sh, 1.0, 1e-10 * ch * ch);
  }
  for (double c : {0.3, 1.0, 3.0}) {
    EXPECT_NEAR(truncated_ideal_area(c, 15.0), ideal_limit_area(c), 1e-5);
    EXPECT_NEAR(truncated_half_area(c, 15.0), 0.5 * ideal_limit_area(c), 1e-5);
  }
}
