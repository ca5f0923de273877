#pragma once

// Seeded verification campaigns. Each trial draws its own generator from
// (seed, trial index), so a report depends only on the seed and trial count.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ccg/plane.hpp"

namespace ccg {

enum class Theorem { Menelaus, EulerRatio, Ceva, Lambert, Lexell, Pqr };

std::string_view to_string(Theorem t);
/// Throws Domain for an unknown name.
Theorem parse_theorem(std::string_view name);

bool supports(Theorem t, Geometry g);
double default_tolerance(Theorem t);

struct VerifyReport {
  Theorem theorem = Theorem::EulerRatio;
  Geometry geometry = Geometry::Hyperbolic;
  int trials = 0;
  std::uint64_t seed = 0;
  double max_residual = 0.0;
  int worst_trial = -1;
  double tolerance = 0.0;
  bool pass = false;
  std::string residual_kind;  // what max_residual measures
  // Lambert only: extremes of AD/OD and whether the geometry's ordering held.
  std::optional<double> ad_over_od_min;
  std::optional<double> ad_over_od_max;
  bool ordering_holds = true;
};

/// Throws Domain for an unsupported theorem and geometry pair.
VerifyReport run_campaign(Theorem t, Geometry g, int trials, std::uint64_t seed,
                          std::optional<double> tolerance = std::nullopt);

/// One JSON document, keys in a fixed order.
std::string to_json(const VerifyReport& r);

}  // namespace ccg
