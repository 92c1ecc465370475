#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "fdisc/core.hpp"
#include "fdisc/measure.hpp"
#include "fdisc/spectral.hpp"
#include "fdisc/util.hpp"

namespace fdisc {

/// sum_{k=1}^{N/2-1} |s_k|^2 / k^2 + |s_{N/2}|^2 / N^2 for the spectrum of a
/// difference of equal-mass measures (the zero frequency never contributes).
inline double squared_discrepancy_of_spectrum(const Eigen::Ref<const Spectrum>& s) {
  const Index n = s.size();
  const Index h = n / 2;
  double acc = 0.0;
  for (Index k = 1; k < h; ++k) acc += std::norm(s[k]) / static_cast<double>(k * k);
  acc += std::norm(s[h]) / static_cast<double>(n * n);
  return acc;
}

/// Fourier discrepancy of a signed difference vector.
inline double fourier_discrepancy(const Eigen::Ref<const Vector>& difference) {
  return std::sqrt(squared_discrepancy_of_spectrum(dft(difference)));
}

inline double fourier_discrepancy(const NullSumMeasure& delta) {
  return fourier_discrepancy(delta.values());
}

inline double fourier_discrepancy(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu) {
  detail::require_same_size(mu.size(), nu.size(), "fourier discrepancy");
  return fourier_discrepancy(mu.weights() - nu.weights());
}

/// Half the l1 norm of the difference.
template <typename Derived>
double total_variation(const Eigen::MatrixBase<Derived>& difference) {
  return 0.5 * difference.template lpNorm<1>();
}

inline double total_variation(const NullSumMeasure& delta) {
  return total_variation(delta.values());
}

inline double total_variation(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu) {
  detail::require_same_size(mu.size(), nu.size(), "total variation");
  return total_variation(mu.weights() - nu.weights());
}

/// D(p || q) = sum_i p_i log(p_i / q_i) in nats, with 0 log 0 = 0; +infinity
/// as soon as p puts mass where q has none.
inline double kullback_leibler(const ProbabilityMeasure& p, const ProbabilityMeasure& q) {
  detail::require_same_size(p.size(), q.size(), "kullback-leibler");
  double acc = 0.0;
  for (Index i = 0; i < p.size(); ++i) {
    const double pi = p.weights()[i];
    if (pi == 0.0) continue;
    const double qi = q.weights()[i];
    if (qi == 0.0) return std::numeric_limits<double>::infinity();
    acc += pi * std::log(pi / qi);
  }
  return acc;
}

/// 1-D optimal transport with ground distance |x - y| on the grid {j/N}: the
/// l1 distance between cumulative sums, scaled by the grid spacing.
inline double wasserstein1(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu) {
  detail::require_same_size(mu.size(), nu.size(), "wasserstein");
  const Index n = mu.size();
  double cumulative = 0.0;
  double acc = 0.0;
  for (Index j = 0; j + 1 < n; ++j) {
    cumulative += mu.weights()[j] - nu.weights()[j];
    acc += std::abs(cumulative);
  }
  return acc / static_cast<double>(n);
}

/// F <= tv_bound_constant() * TV for any pair of probability measures.
inline double tv_bound_constant() { return 2.0 * std::numbers::pi / std::sqrt(6.0); }

/// F <= kl_bound_constant() * sqrt(KL), through the Pinsker inequality.
inline double kl_bound_constant() { return std::numbers::pi / std::sqrt(3.0); }

struct DiscrepancyReport {
  double fourier = 0.0;
  double tv = 0.0;
  double kl = 0.0;  // +infinity when the supports disagree
  double w1 = 0.0;
};

/// All four discrepancies at once; the two analytic upper bounds on F are
/// rechecked on every call.
inline DiscrepancyReport compare_all(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu) {
  DiscrepancyReport r;
  r.fourier = fourier_discrepancy(mu, nu);
  r.tv = total_variation(mu, nu);
  r.kl = kullback_leibler(mu, nu);
  r.w1 = wasserstein1(mu, nu);
  if (r.fourier > tv_bound_constant() * r.tv + kMassTol) {
    throw std::logic_error("total variation bound violated");
  }
  if (std::isfinite(r.kl) && r.fourier > kl_bound_constant() * std::sqrt(r.kl) + kMassTol) {
    throw std::logic_error("kullback-leibler bound violated");
  }
  return r;
}

struct DeltaCurveRow {
  Index d = 0;
  double fourier = 0.0;
  double tv = 0.0;
  double w1 = 0.0;
};

/// Distances between delta_0 and delta_d for every shift d. The KL column is
/// omitted: disjoint Diracs make it infinite.
inline std::vector<DeltaCurveRow> delta_curve(GridSize n) {
  const Index N = n.value();
  std::vector<DeltaCurveRow> rows(static_cast<std::size_t>(N));
  const ProbabilityMeasure origin = dirac(n, 0);
  parallel_for(N, [&](Index d) {
    const ProbabilityMeasure shifted = dirac(n, d);
    rows[static_cast<std::size_t>(d)] = {d, fourier_discrepancy(origin, shifted),
                                         total_variation(origin, shifted),
                                         wasserstein1(origin, shifted)};
  });
  return rows;
}

}  // namespace fdisc
