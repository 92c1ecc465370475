#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

#include "fdisc/core.hpp"

namespace fdisc {

// The standard <random> distributions are implementation-defined; the helpers
// below fix the bit-level mapping from engine output to doubles so seeded
// runs reproduce across standard libraries.

/// Uniform draw in the open interval (0, 1) with 53-bit resolution.
inline double uniform01(std::mt19937_64& rng) {
  return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

/// Standard normal draw via the Box-Muller transform.
inline double standard_normal(std::mt19937_64& rng) {
  const double u1 = uniform01(rng);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

/// Full-support signed vector with entries uniform in (-1, 1), recentred so
/// they sum to zero.
inline Vector random_null_sum_values(GridSize n, std::mt19937_64& rng) {
  Vector v(n.value());
  for (Index i = 0; i < v.size(); ++i) v[i] = 2.0 * uniform01(rng) - 1.0;
  v.array() -= v.mean();
  return v;
}

}  // namespace fdisc
