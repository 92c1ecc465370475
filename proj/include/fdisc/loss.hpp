#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>
#include <vector>

#include "fdisc/core.hpp"
#include "fdisc/discrepancy.hpp"
#include "fdisc/measure.hpp"
#include "fdisc/spectral.hpp"

namespace fdisc {

/// Loss at or below this value counts as converged.
inline constexpr double kConvergedLoss = 1e-10;

/// Squared discrepancy as a loss in mu for a fixed target nu.
inline double loss_value(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu) {
  detail::require_same_size(mu.size(), nu.size(), "loss");
  return squared_discrepancy_of_spectrum(dft(mu.weights() - nu.weights()));
}

/// Exact gradient 2 H (mu - nu); its entries sum to zero.
inline Vector loss_gradient(const CirculantKernel& kernel, const ProbabilityMeasure& mu,
                            const ProbabilityMeasure& nu) {
  detail::require_same_size(mu.size(), nu.size(), "loss gradient");
  detail::require_same_size(mu.size(), kernel.grid().value(), "loss gradient");
  return 2.0 * kernel.apply(mu.weights() - nu.weights());
}

inline Vector loss_gradient(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu) {
  detail::require_same_size(mu.size(), nu.size(), "loss gradient");
  return loss_gradient(CirculantKernel(mu.grid()), mu, nu);
}

/// Loss value and gradient at one point, sharing a single kernel application.
struct LossEvaluation {
  double value = 0.0;
  Vector gradient;
};

inline LossEvaluation evaluate_loss(const CirculantKernel& kernel, const ProbabilityMeasure& mu,
                                    const ProbabilityMeasure& nu) {
  detail::require_same_size(mu.size(), nu.size(), "loss evaluation");
  detail::require_same_size(mu.size(), kernel.grid().value(), "loss evaluation");
  const Vector diff = mu.weights() - nu.weights();
  const Vector h_diff = kernel.apply(diff);
  return {diff.dot(h_diff), 2.0 * h_diff};
}

inline LossEvaluation evaluate_loss(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu) {
  detail::require_same_size(mu.size(), nu.size(), "loss evaluation");
  return evaluate_loss(CirculantKernel(mu.grid()), mu, nu);
}

/// The constant Hessian 2 bhat[(h - l) mod N] as a dense matrix, for
/// inspection and tests; larger sizes must go through CirculantKernel.
inline Matrix loss_hessian(GridSize n) {
  if (n.value() > 1024) {
    throw Error(Errc::OutOfDomain,
                "dense Hessian is limited to N <= 1024; use the circulant kernel");
  }
  const CirculantKernel kernel(n);
  const Index N = n.value();
  Matrix hess(N, N);
  for (Index h = 0; h < N; ++h) {
    for (Index l = 0; l < N; ++l) hess(h, l) = 2.0 * kernel.bhat()[(h - l + N) % N];
  }
  return hess;
}

/// Euclidean projection onto the probability simplex by sort and threshold.
/// Already-feasible inputs pass through unchanged.
inline ProbabilityMeasure project_simplex(const Eigen::Ref<const Vector>& v) {
  if (v.minCoeff() >= 0.0 && std::abs(v.sum() - 1.0) <= kMassTol) {
    return ProbabilityMeasure(v);
  }
  const Index n = v.size();
  std::vector<double> sorted(v.data(), v.data() + n);
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  double cumulative = 0.0;
  double threshold = 0.0;
  for (Index j = 0; j < n; ++j) {
    cumulative += sorted[static_cast<std::size_t>(j)];
    const double candidate = (cumulative - 1.0) / static_cast<double>(j + 1);
    if (sorted[static_cast<std::size_t>(j)] > candidate) threshold = candidate;
  }
  Vector w = (v.array() - threshold).cwiseMax(0.0);
  return ProbabilityMeasure(std::move(w));
}

/// Projected gradient descent trace: the loss after every accepted step.
struct FitTrace {
  std::vector<std::pair<int, double>> iterates;  // (step, loss); step 0 is the start
  ProbabilityMeasure final;
  bool converged = false;
  /// True when a step would have raised the loss: the step size exceeded the
  /// curvature budget and iteration stopped right there.
  bool step_increased = false;
};

/// Largest provably safe step: 1 / lambda_max of the Hessian, which is
/// exactly 1 / N.
inline double default_step_size(GridSize n) { return 1.0 / static_cast<double>(n.value()); }

inline FitTrace fit(const ProbabilityMeasure& target, const ProbabilityMeasure& init, int steps,
                    double step_size) {
  detail::require_same_size(target.size(), init.size(), "fit");
  if (steps < 1) throw Error(Errc::OutOfDomain, "step count must be >= 1");
  if (!(step_size > 0.0)) throw Error(Errc::OutOfDomain, "step size must be positive");
  const CirculantKernel kernel(target.grid());
  ProbabilityMeasure current = init;
  double loss = loss_value(current, target);
  std::vector<std::pair<int, double>> iterates{{0, loss}};
  bool step_increased = false;
  for (int s = 1; s <= steps && loss > kConvergedLoss; ++s) {
    const Vector grad = 2.0 * kernel.apply(current.weights() - target.weights());
    ProbabilityMeasure candidate = project_simplex(current.weights() - step_size * grad);
    const double candidate_loss = loss_value(candidate, target);
    if (candidate_loss > loss) {
      step_increased = true;
      break;
    }
    current = std::move(candidate);
    loss = candidate_loss;
    iterates.emplace_back(s, loss);
  }
  return {std::move(iterates), std::move(current), loss <= kConvergedLoss, step_increased};
}

}  // namespace fdisc
