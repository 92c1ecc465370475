#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fdisc/core.hpp"
#include "fdisc/discrepancy.hpp"
#include "fdisc/measure.hpp"
#include "fdisc/random.hpp"
#include "fdisc/spectral.hpp"
#include "fdisc/util.hpp"

namespace fdisc {

/// Slack used to resolve mathematically exact ties that float arithmetic
/// renders as noise; genuine gaps between candidates are many orders larger.
inline constexpr double kTieTol = 1e-12;

/// Coordinates of a null-sum measure on the harmonic basis
/// omega_k = (exp(2 pi i j k / N))_j: the spectrum scaled by 1/N.
inline ComplexVector spectral_coefficients(const NullSumMeasure& delta) {
  return dft(delta.values()) / static_cast<double>(delta.size());
}

/// Discrepancy from harmonic coordinates:
/// F^2 = N^2 (sum_{k=1}^{N/2-1} |l_k|^2 / k^2 + |l_{N/2}|^2 / N^2).
inline double fourier_from_coefficients(const Eigen::Ref<const ComplexVector>& lambdas) {
  detail::require_even(lambdas.size());
  if (std::abs(lambdas[0]) > kMassTol) {
    throw Error(Errc::NonNullSum, "zero-frequency coefficient must vanish");
  }
  const Index n = lambdas.size();
  const Index h = n / 2;
  double acc = 0.0;
  for (Index k = 1; k < h; ++k) acc += std::norm(lambdas[k]) / static_cast<double>(k * k);
  acc += std::norm(lambdas[h]) / static_cast<double>(n * n);
  return static_cast<double>(n) * std::sqrt(acc);
}

struct LowerTightBound {
  double c_lower = 0.0;
  ProbabilityMeasure mu;
  ProbabilityMeasure nu;
};

/// inf F over pairs at fixed TV = theta is 2 theta / N; the alternating pair
/// built here attains it (shared leftover mass parked at index 0).
inline LowerTightBound lower_tight_bound(GridSize n, double theta) {
  if (!(theta > 0.0) || theta > 1.0) {
    throw Error(Errc::ThetaOutOfRange, "theta must lie in (0, 1], got " + std::to_string(theta));
  }
  const Index N = n.value();
  const double weight = 2.0 * theta / static_cast<double>(N);
  Vector even = Vector::Zero(N);
  Vector odd = Vector::Zero(N);
  for (Index i = 0; i < N; i += 2) even[i] = weight;
  for (Index i = 1; i < N; i += 2) odd[i] = weight;
  even[0] += 1.0 - theta;
  odd[0] += 1.0 - theta;
  return {weight, ProbabilityMeasure(std::move(even)), ProbabilityMeasure(std::move(odd))};
}

struct DipoleTerm {
  Index i = 0;
  Index j = 0;
  double lambda = 0.0;
};

struct DipoleDecomposition {
  std::vector<DipoleTerm> terms;
  double tv = 0.0;
};

/// Greedy pairing of the positive against the negative support in ascending
/// index order. Coefficients are scaled by 1/TV, so they are a convex
/// combination reconstructing delta / TV(delta); at most N - 1 terms.
inline DipoleDecomposition decompose_null_sum(const NullSumMeasure& delta) {
  const Vector& v = delta.values();
  std::vector<Index> pos_idx;
  std::vector<Index> neg_idx;
  std::vector<double> pos_mass;
  std::vector<double> neg_mass;
  for (Index i = 0; i < v.size(); ++i) {
    if (v[i] > 0.0) {
      pos_idx.push_back(i);
      pos_mass.push_back(v[i]);
    } else if (v[i] < 0.0) {
      neg_idx.push_back(i);
      neg_mass.push_back(-v[i]);
    }
  }
  if (pos_idx.empty() || neg_idx.empty()) {
    throw Error(Errc::ZeroDelta, "cannot decompose the zero measure");
  }
  DipoleDecomposition out;
  out.tv = total_variation(delta);
  std::size_t a = 0;
  std::size_t b = 0;
  while (a < pos_idx.size() && b < neg_idx.size()) {
    const double chunk = std::min(pos_mass[a], neg_mass[b]);
    out.terms.push_back({pos_idx[a], neg_idx[b], chunk / out.tv});
    pos_mass[a] -= chunk;
    neg_mass[b] -= chunk;
    if (pos_mass[a] <= 0.0) ++a;
    if (neg_mass[b] <= 0.0) ++b;
  }
  return out;
}

/// F^2(eta_{0,d}) from the cosine closed form; dipole discrepancies depend on
/// the endpoints only through their separation d.
inline double squared_dipole_discrepancy(Index d, GridSize n) {
  const Index N = n.value();
  if (d < 1 || d > N - 1) {
    throw Error(Errc::IndexOutOfRange, "dipole separation must lie in 1..N-1");
  }
  const double dd = static_cast<double>(d);
  const double NN = static_cast<double>(N);
  double acc = 0.0;
  for (Index k = 1; k < n.half(); ++k) {
    const double angle = 2.0 * std::numbers::pi * dd * static_cast<double>(k) / NN;
    acc += (2.0 - 2.0 * std::cos(angle)) / static_cast<double>(k * k);
  }
  acc += (2.0 - 2.0 * std::cos(std::numbers::pi * dd)) / (NN * NN);
  return acc;
}

inline double dipole_discrepancy(Index d, GridSize n) {
  return std::sqrt(squared_dipole_discrepancy(d, n));
}

/// g(d) = sum_{k=1}^{N/2-1} cos(2 pi d k / N) / k^2 + cos(pi d) / N^2 on the
/// real interval [0, N]. Minimizing g maximizes the dipole discrepancy:
/// F^2(eta_{0,d}) + 2 g(d) is constant in d.
inline double g_function(double d, GridSize n) {
  const double NN = static_cast<double>(n.value());
  if (!(d >= 0.0) || d > NN) {
    throw Error(Errc::OutOfDomain, "g is defined on [0, N]");
  }
  double acc = 0.0;
  for (Index k = 1; k < n.half(); ++k) {
    const double angle = 2.0 * std::numbers::pi * d * static_cast<double>(k) / NN;
    acc += std::cos(angle) / static_cast<double>(k * k);
  }
  acc += std::cos(std::numbers::pi * d) / (NN * NN);
  return acc;
}

struct UpperTightBound {
  double c_upper = 0.0;
  Index d_star = 0;
};

/// sup F over pairs at fixed TV = theta: theta times the best dipole value,
/// by enumerating all separations. The exact ties between d and N - d
/// resolve to the smaller separation.
inline UpperTightBound upper_tight_bound(GridSize n, double theta) {
  if (!(theta > 0.0) || theta > 1.0) {
    throw Error(Errc::ThetaOutOfRange, "theta must lie in (0, 1], got " + std::to_string(theta));
  }
  Index best_d = 1;
  double best = squared_dipole_discrepancy(1, n);
  for (Index d = 2; d < n.value(); ++d) {
    const double value = squared_dipole_discrepancy(d, n);
    if (value > best + kTieTol) {
      best = value;
      best_d = d;
    }
  }
  return {theta * std::sqrt(best), best_d};
}

/// Closed form predicted for the supremum at theta = 1 when the antipodal
/// separation d = N/2 wins: only odd frequencies contribute, 4 / k^2 each.
inline double conjectured_upper_bound(GridSize n) {
  const Index N = n.value();
  double acc = 0.0;
  for (Index k = 1; k < n.half(); ++k) {
    if (k % 2 == 1) acc += 4.0 / static_cast<double>(k * k);
  }
  if (n.half() % 2 == 1) acc += 4.0 / static_cast<double>(N * N);
  return std::sqrt(acc);
}

struct ConjectureRow {
  Index n = 0;
  Index argmin_d = 0;  // integer minimizer of g over 1..N-1, ties to smaller d
  double g_min = 0.0;
  bool holds = false;  // argmin at N/2 and the closed form matches the scan
};

inline ConjectureRow conjecture_check(GridSize n) {
  Index best_d = 1;
  double best = g_function(1.0, n);
  for (Index d = 2; d < n.value(); ++d) {
    const double value = g_function(static_cast<double>(d), n);
    if (value < best - kTieTol) {
      best = value;
      best_d = d;
    }
  }
  const bool at_half = best_d == n.half();
  const bool formula_matches =
      std::abs(conjectured_upper_bound(n) - upper_tight_bound(n, 1.0).c_upper) <= kMassTol;
  return {n.value(), best_d, best, at_half && formula_matches};
}

/// Integer scan of g for every even N from 4 up to n_max.
inline std::vector<ConjectureRow> conjecture_scan(Index n_max) {
  if (n_max < 4 || n_max % 2 != 0) {
    throw Error(Errc::BadRange, "scan bound must be even and >= 4, got " + std::to_string(n_max));
  }
  const Index count = n_max / 2 - 1;
  std::vector<ConjectureRow> rows(static_cast<std::size_t>(count));
  parallel_for(count, [&](Index t) {
    rows[static_cast<std::size_t>(t)] = conjecture_check(GridSize(2 * (t + 2)));
  });
  return rows;
}

/// Minimizer of g over a dense real grid in [0, N] with the given step;
/// evidence that the integer argmin is not a grid artifact.
inline double argmin_g_dense(GridSize n, double step = 1e-3) {
  if (!(step > 0.0)) throw Error(Errc::OutOfDomain, "step must be positive");
  const double NN = static_cast<double>(n.value());
  double best_d = 0.0;
  double best = g_function(0.0, n);
  for (double d = step; d < NN + step / 2; d += step) {
    const double clamped = std::min(d, NN);
    const double value = g_function(clamped, n);
    if (value < best - kTieTol) {
      best = value;
      best_d = clamped;
    }
  }
  return best_d;
}

struct BoundEnvelope {
  double min_f = 0.0;
  double max_f = 0.0;
};

/// Monte-Carlo sweep: random full-support null-sum measures are lifted to a
/// pair at TV = theta and checked against both tight bounds; returns the
/// observed envelope of F.
inline BoundEnvelope random_bound_audit(GridSize n, double theta, int samples,
                                        std::uint64_t seed) {
  if (samples < 1) throw Error(Errc::OutOfDomain, "sample count must be >= 1");
  const double lo = lower_tight_bound(n, theta).c_lower;
  const double hi = upper_tight_bound(n, theta).c_upper;
  std::mt19937_64 rng(seed);
  double min_f = std::numeric_limits<double>::infinity();
  double max_f = -std::numeric_limits<double>::infinity();
  for (int s = 0; s < samples; ++s) {
    const NullSumMeasure delta(random_null_sum_values(n, rng));
    const LiftedPair pair = lift_to_pair(delta, theta);
    const double f = fourier_discrepancy(pair.mu, pair.nu);
    if (f < lo - kMassTol || f > hi + kMassTol) {
      throw std::logic_error("tight bound violated at sample " + std::to_string(s));
    }
    min_f = std::min(min_f, f);
    max_f = std::max(max_f, f);
  }
  return {min_f, max_f};
}

struct TightBoundReport {
  double theta = 0.0;
  double c_lower = 0.0;
  ProbabilityMeasure lower_mu;
  ProbabilityMeasure lower_nu;
  double c_upper = 0.0;
  Index d_star = 0;
  bool conjecture_holds_at_n = false;
};

inline TightBoundReport tight_bound_report(GridSize n, double theta) {
  LowerTightBound lower = lower_tight_bound(n, theta);
  const UpperTightBound upper = upper_tight_bound(n, theta);
  const ConjectureRow row = conjecture_check(n);
  return {theta,         lower.c_lower, std::move(lower.mu), std::move(lower.nu),
          upper.c_upper, upper.d_star,  row.holds};
}

}  // namespace fdisc
