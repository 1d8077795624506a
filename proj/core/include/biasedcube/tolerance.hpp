#pragma once

#include <cmath>

namespace bcube {

inline constexpr double kDefaultTolerance = 1e-9;

// lhs <= rhs up to slack scaled by both sides. A negative tol demands a strict margin.
inline bool leq_with_slack(double lhs, double rhs, double tol = kDefaultTolerance) {
  return lhs <= rhs + tol * (1.0 + std::abs(lhs) + std::abs(rhs));
}

inline bool approx_equal(double a, double b, double tol = kDefaultTolerance) {
  return std::abs(a - b) <= tol * (1.0 + std::abs(a) + std::abs(b));
}

}  // namespace bcube
