#pragma once

#include <cmath>
#include <cstdint>
#include <string>
#include <utility>

#include "fdisc/core.hpp"
#include "fdisc/random.hpp"

namespace fdisc {

/// Probability weights on the uniform grid {j/N}: nonnegative entries summing
/// to one. The constructor clamps negatives within -1e-12 to zero and
/// renormalizes when the mass is within 1e-9 of one; anything worse is
/// rejected rather than silently repaired.
class ProbabilityMeasure {
 public:
  explicit ProbabilityMeasure(Vector weights) : weights_(std::move(weights)) {
    (void)GridSize(weights_.size());
    for (Index i = 0; i < weights_.size(); ++i) {
      if (weights_[i] < -kNegativeTol) {
        throw Error(Errc::NegativeWeight, "negative weight " + std::to_string(weights_[i]) +
                                              " at index " + std::to_string(i));
      }
      if (weights_[i] < 0.0) weights_[i] = 0.0;
    }
    const double mass = weights_.sum();
    if (std::abs(mass - 1.0) > kMassTol) {
      throw Error(Errc::MassMismatch, "weights sum to " + std::to_string(mass) + ", expected 1");
    }
    weights_ /= mass;
  }

  const Vector& weights() const noexcept { return weights_; }
  Index size() const noexcept { return weights_.size(); }
  GridSize grid() const { return GridSize(weights_.size()); }

 private:
  Vector weights_;
};

/// Signed measure whose entries sum to zero: exactly the differences of
/// equal-mass measures, the domain of the discrepancy machinery.
class NullSumMeasure {
 public:
  explicit NullSumMeasure(Vector values) : values_(std::move(values)) {
    (void)GridSize(values_.size());
    const double sum = values_.sum();
    if (std::abs(sum) > kMassTol) {
      throw Error(Errc::NonNullSum, "entries sum to " + std::to_string(sum) + ", expected 0");
    }
  }

  const Vector& values() const noexcept { return values_; }
  Index size() const noexcept { return values_.size(); }
  GridSize grid() const { return GridSize(values_.size()); }

 private:
  Vector values_;
};

inline NullSumMeasure operator-(const ProbabilityMeasure& mu, const ProbabilityMeasure& nu) {
  detail::require_same_size(mu.size(), nu.size(), "measure difference");
  return NullSumMeasure(mu.weights() - nu.weights());
}

/// Two-point signed measure: +1 at i, -1 at j.
class DipoleMeasure {
 public:
  DipoleMeasure(GridSize n, Index i, Index j) : n_(n), i_(i), j_(j) {
    if (i < 0 || i >= n.value() || j < 0 || j >= n.value()) {
      throw Error(Errc::IndexOutOfRange, "dipole index outside grid of size " +
                                             std::to_string(n.value()));
    }
    if (i == j) throw Error(Errc::IndexOutOfRange, "dipole endpoints must differ");
  }

  Index i() const noexcept { return i_; }
  Index j() const noexcept { return j_; }
  GridSize grid() const noexcept { return n_; }

  NullSumMeasure dense() const {
    Vector v = Vector::Zero(n_.value());
    v[i_] = 1.0;
    v[j_] = -1.0;
    return NullSumMeasure(std::move(v));
  }

 private:
  GridSize n_;
  Index i_;
  Index j_;
};

inline ProbabilityMeasure dirac(GridSize n, Index k) {
  if (k < 0 || k >= n.value()) {
    throw Error(Errc::IndexOutOfRange, "dirac index " + std::to_string(k) +
                                           " outside grid of size " + std::to_string(n.value()));
  }
  Vector w = Vector::Zero(n.value());
  w[k] = 1.0;
  return ProbabilityMeasure(std::move(w));
}

inline ProbabilityMeasure uniform(GridSize n) {
  return ProbabilityMeasure(Vector::Constant(n.value(), 1.0 / static_cast<double>(n.value())));
}

inline ProbabilityMeasure random_probability(GridSize n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Vector w(n.value());
  for (Index i = 0; i < w.size(); ++i) w[i] = uniform01(rng);
  w /= w.sum();
  return ProbabilityMeasure(std::move(w));
}

struct JordanSplit {
  Vector positive;
  Vector negative;
};

/// Entrywise positive and negative parts: positive - negative == delta
/// exactly, and the supports are disjoint.
inline JordanSplit jordan_split(const NullSumMeasure& delta) {
  return {delta.values().cwiseMax(0.0), (-delta.values()).cwiseMax(0.0)};
}

struct LiftedPair {
  ProbabilityMeasure mu;
  ProbabilityMeasure nu;
  double c = 0.0;
};

/// Rescales a nonzero null-sum measure to total variation theta and splits it
/// into a probability pair, parking the shared leftover mass 1 - theta at
/// index 0: mu - nu = c * delta with c = theta / TV(delta).
inline LiftedPair lift_to_pair(const NullSumMeasure& delta, double theta) {
  if (!(theta > 0.0) || theta > 1.0) {
    throw Error(Errc::ThetaOutOfRange, "theta must lie in (0, 1], got " + std::to_string(theta));
  }
  const double tv = 0.5 * delta.values().lpNorm<1>();
  if (tv == 0.0) throw Error(Errc::ZeroDelta, "cannot lift the zero measure");
  const double c = theta / tv;
  Vector pos = (c * delta.values()).cwiseMax(0.0);
  Vector neg = (-c * delta.values()).cwiseMax(0.0);
  pos[0] += 1.0 - theta;
  neg[0] += 1.0 - theta;
  return {ProbabilityMeasure(std::move(pos)), ProbabilityMeasure(std::move(neg)), c};
}

}  // namespace fdisc
