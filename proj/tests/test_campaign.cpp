#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "ccg/campaign.hpp"
#include "ccg/errors.hpp"

using namespace ccg;

TEST(Campaign, NamesRoundTrip) {
  for (Theorem t : {Theorem::Menelaus, Theorem::EulerRatio, Theorem::Ceva, Theorem::Lambert, Theorem::Lexell,
                    Theorem::Pqr}) {
    EXPECT_EQ(parse_theorem(to_string(t)), t);
  }
  EXPECT_THROW(parse_theorem("pythagoras"), GeometryError);
}

TEST(Campaign, SupportMatrix) {
  EXPECT_TRUE(supports(Theorem::Lexell, Geometry::Hyperbolic));
  EXPECT_FALSE(supports(Theorem::Lexell, Geometry::Spherical));
  EXPECT_FALSE(supports(Theorem::Lexell, Geometry::Euclidean));
  EXPECT_TRUE(supports(Theorem::EulerRatio, Geometry::Spherical));
  EXPECT_THROW(run_campaign(Theorem::Lexell, Geometry::Spherical, 5, 1), GeometryError);
}

TEST(Campaign, SameSeedSameReport) {
  const VerifyReport a = run_campaign(Theorem::EulerRatio, Geometry::Hyperbolic, 100, 42);
  const VerifyReport b = run_campaign(Theorem::EulerRatio, Geometry::Hyperbolic, 100, 42);
  EXPECT_EQ(to_json(a), to_json(b));
  EXPECT_EQ(a.max_residual, b.max_residual);
  EXPECT_EQ(a.worst_trial, b.worst_trial);
  const VerifyReport c = run_campaign(Theorem::EulerRatio, Geometry::Hyperbolic, 100, 43);
  EXPECT_NE(a.max_residual, c.max_residual);
}

TEST(Campaign, AllSupportedPairsPass) {
  for (Theorem t : {Theorem::Menelaus, Theorem::EulerRatio, Theorem::Ceva, Theorem::Lambert, Theorem::Lexell,
                    Theorem::Pqr}) {
    for (Geometry g : {Geometry::Hyperbolic, Geometry::Spherical, Geometry::Euclidean}) {
      if (!supports(t, g)) continue;
      const VerifyReport r = run_campaign(t, g, 100, 9);
      EXPECT_TRUE(r.pass) << to_string(t) << " " << to_string(g) << " " << r.max_residual;
      EXPECT_LE(r.max_residual, r.tolerance);
    }
  }
}

TEST(Campaign, TinyToleranceFails) {
  const VerifyReport r = run_campaign(Theorem::Ceva, Geometry::Hyperbolic, 20, 1, 1e-300);
  EXPECT_FALSE(r.pass);
  EXPECT_GE(r.worst_trial, 0);
}

TEST(Campaign, JsonKeyOrder) {
  const std::string js = to_json(run_campaign(Theorem::Lambert, Geometry::Hyperbolic, 10, 3));
  const std::vector<std::string> keys{"\"command\"", "\"theorem\"",      "\"geometry\"",  "\"trials\"",
                                      "\"seed\"",    "\"max_residual\"", "\"worst_trial\"", "\"tolerance\"",
                                      "\"pass\""};
  std::size_t at = 0;
  for (const auto& k : keys) {
    const std::size_t pos = js.find(k);
    ASSERT_NE(pos, std::string::npos) << k;
    EXPECT_GE(pos, at) << k;
    at = pos;
  }
  EXPECT_NE(js.find("\"ad_over_od_min\""), std::string::npos);
}
