#pragma once

#include <gtest/gtest.h>

#include <cmath>
#include <initializer_list>
#include <vector>

#include "fdisc/fdisc.hpp"

namespace helpers {

inline fdisc::Vector vec(std::initializer_list<double> values) {
  fdisc::Vector v(static_cast<fdisc::Index>(values.size()));
  fdisc::Index i = 0;
  for (double x : values) v[i++] = x;
  return v;
}

inline void expect_near_vec(const fdisc::Vector& actual, const fdisc::Vector& expected,
                            double tol) {
  ASSERT_EQ(actual.size(), expected.size());
  for (fdisc::Index i = 0; i < actual.size(); ++i) {
    EXPECT_NEAR(actual[i], expected[i], tol) << "entry " << i;
  }
}

// Loss on raw vectors, defined for arbitrary perturbations (the measure types
// would reject them): the quadratic the analytic gradient differentiates.
inline double raw_loss(const fdisc::Vector& x, const fdisc::Vector& target) {
  return fdisc::squared_discrepancy_of_spectrum(fdisc::dft(x - target));
}

// Central finite differences of raw_loss in x.
inline fdisc::Vector numerical_gradient(const fdisc::Vector& x, const fdisc::Vector& target,
                                        double h) {
  fdisc::Vector g(x.size());
  for (fdisc::Index l = 0; l < x.size(); ++l) {
    fdisc::Vector up = x;
    fdisc::Vector down = x;
    up[l] += h;
    down[l] -= h;
    g[l] = (raw_loss(up, target) - raw_loss(down, target)) / (2.0 * h);
  }
  return g;
}

// Brute-force 1-D transport oracle: split each measure into atom_count equal
// atoms (all masses must be multiples of 1/atom_count) and match the sorted
// positions pairwise, which is optimal for a convex ground cost.
inline double w1_atom_oracle(const fdisc::Vector& mu, const fdisc::Vector& nu, int atom_count) {
  auto atoms = [&](const fdisc::Vector& w) {
    std::vector<double> a;
    for (fdisc::Index j = 0; j < w.size(); ++j) {
      const double exact = w[j] * atom_count;
      const long count = std::lround(exact);
      EXPECT_NEAR(exact, static_cast<double>(count), 1e-9) << "mass is not a multiple of 1/atoms";
      for (long t = 0; t < count; ++t) {
        a.push_back(static_cast<double>(j) / static_cast<double>(w.size()));
      }
    }
    return a;
  };
  const std::vector<double> a = atoms(mu);
  const std::vector<double> b = atoms(nu);
  EXPECT_EQ(a.size(), b.size());
  double acc = 0.0;
  for (std::size_t t = 0; t < a.size() && t < b.size(); ++t) acc += std::abs(a[t] - b[t]);
  return acc / static_cast<double>(atom_count);
}

// Exhaustive search over the simplex discretized to multiples of 1/steps:
// the closest grid point to v in Euclidean distance.
inline fdisc::Vector nearest_simplex_grid_point(const fdisc::Vector& v, int steps) {
  const fdisc::Index n = v.size();
  fdisc::Vector best = fdisc::Vector::Zero(n);
  best[0] = 1.0;
  double best_dist = (v - best).squaredNorm();
  fdisc::Vector current = fdisc::Vector::Zero(n);
  auto recurse = [&](auto&& self, fdisc::Index pos, int remaining) -> void {
    if (pos == n - 1) {
      current[pos] = static_cast<double>(remaining) / steps;
      const double dist = (v - current).squaredNorm();
      if (dist < best_dist) {
        best_dist = dist;
        best = current;
      }
      return;
    }
    for (int take = 0; take <= remaining; ++take) {
      current[pos] = static_cast<double>(take) / steps;
      self(self, pos + 1, remaining - take);
    }
  };
  recurse(recurse, 0, steps);
  return best;
}

}  // namespace helpers
