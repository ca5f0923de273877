#pragma once

#include <numbers>

namespace ccg {

inline constexpr double kPi = std::numbers::pi;

// Drift allowed on model invariants such as <p,p> = -1.
inline constexpr double kTolPoint = 1e-10;
// Residual allowed on identities that hold exactly in exact arithmetic.
inline constexpr double kTolId = 1e-9;
// Slack before an arccosh/arccos/atanh argument outside its domain is an error.
inline constexpr double kTolClamp = 1e-12;
// Acceptance threshold for the ratio-sum relation on six given lengths.
inline constexpr double kTolConstruct = 1e-8;
// Areas come out of arccos/atan of composite expressions.
inline constexpr double kTolArea = 1e-8;

// Working range for triangle side lengths.
inline constexpr double kMaxHyperbolicLength = 10.0;
inline constexpr double kMaxSphericalLength = kPi / 2;

}  // namespace ccg
