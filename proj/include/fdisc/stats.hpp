#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "fdisc/core.hpp"
#include "fdisc/discrepancy.hpp"
#include "fdisc/measure.hpp"
#include "fdisc/random.hpp"
#include "fdisc/spectral.hpp"

namespace fdisc {

/// Circularly-symmetric frequency noise with covariance diag(2 sigma^2 beta):
/// variance grows as k^2, and the zero frequency carries none, so every draw
/// keeps the total mass fixed.
struct NoiseModel {
  GridSize n;
  double sigma;
  Vector covariance_diag;
};

inline NoiseModel make_noise_model(GridSize n, double sigma) {
  if (!(sigma > 0.0)) throw Error(Errc::OutOfDomain, "sigma must be positive");
  return {n, sigma, 2.0 * sigma * sigma * weight_beta(n)};
}

/// Hermitian spectrum draw: eps_0 = 0, eps_k = sigma k (g1 + i g2) for
/// 0 < k < N/2 with the upper half conjugate-reflected, eps_{N/2} real with
/// variance sigma^2 N^2. The spatial noise idft(eps) is then real.
inline ComplexVector sample_noise_spectrum(const NoiseModel& model, std::mt19937_64& rng) {
  const Index N = model.n.value();
  const Index h = model.n.half();
  ComplexVector eps = ComplexVector::Zero(N);
  for (Index k = 1; k < h; ++k) {
    const double g1 = standard_normal(rng);
    const double g2 = standard_normal(rng);
    eps[k] = model.sigma * static_cast<double>(k) * std::complex<double>(g1, g2);
    eps[N - k] = std::conj(eps[k]);
  }
  eps[h] = model.sigma * static_cast<double>(N) * standard_normal(rng);
  return eps;
}

inline Vector sample_noise(const NoiseModel& model, std::mt19937_64& rng) {
  return idft(sample_noise_spectrum(model, rng));
}

inline Vector sample_noise(const NoiseModel& model, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return sample_noise(model, rng);
}

/// Sum of squared discrepancies over observation/prediction pairs, scaled by
/// 1 / (2 sigma^2): the negative log-likelihood of the noise model up to a
/// data-independent constant. Every pair must carry equal total mass; the
/// zero-variance frequency forbids any mass error.
inline double neg_log_likelihood(const std::vector<Vector>& y, const std::vector<Vector>& f,
                                 double sigma) {
  if (y.size() != f.size() || y.empty()) {
    throw Error(Errc::SizeMismatch, "need equally many observations and predictions, at least one pair");
  }
  if (!(sigma > 0.0)) throw Error(Errc::OutOfDomain, "sigma must be positive");
  double acc = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    detail::require_same_size(y[i].size(), f[i].size(), "likelihood pair");
    if (std::abs(y[i].sum() - f[i].sum()) > kMassTol) {
      throw Error(Errc::MassMismatchPair,
                  "pair " + std::to_string(i) + " differs in total mass");
    }
    acc += squared_discrepancy_of_spectrum(dft(y[i] - f[i]));
  }
  return acc / (2.0 * sigma * sigma);
}

namespace detail {

inline std::size_t argmin(const std::vector<double>& v) {
  return static_cast<std::size_t>(std::min_element(v.begin(), v.end()) - v.begin());
}

}  // namespace detail

struct MleResult {
  std::vector<double> thetas;
  std::vector<double> neg_loglik;
  std::vector<double> fourier_loss;
  std::size_t argmin_likelihood = 0;
  std::size_t argmin_fourier = 0;
};

/// Evaluates both objectives over a parameter grid. Maximizing the likelihood
/// and minimizing the mean squared discrepancy rank parameters identically,
/// so the two argmins must coincide; this is checked on every run.
inline MleResult mle_demo(const std::function<Vector(double)>& family,
                          const std::vector<double>& theta_grid,
                          const std::vector<Vector>& observations, double sigma) {
  if (theta_grid.empty()) throw Error(Errc::EmptyGrid, "parameter grid is empty");
  if (observations.empty()) throw Error(Errc::SizeMismatch, "need at least one observation");
  if (!(sigma > 0.0)) throw Error(Errc::OutOfDomain, "sigma must be positive");
  MleResult out;
  out.thetas = theta_grid;
  out.neg_loglik.resize(theta_grid.size());
  out.fourier_loss.resize(theta_grid.size());
  const double m = static_cast<double>(observations.size());
  for (std::size_t t = 0; t < theta_grid.size(); ++t) {
    const Vector prediction = family(theta_grid[t]);
    double sum_sq = 0.0;
    for (const Vector& y : observations) {
      detail::require_same_size(y.size(), prediction.size(), "demo pair");
      sum_sq += squared_discrepancy_of_spectrum(dft(y - prediction));
    }
    out.neg_loglik[t] = sum_sq / (2.0 * sigma * sigma);
    out.fourier_loss[t] = sum_sq / m;
  }
  out.argmin_likelihood = detail::argmin(out.neg_loglik);
  out.argmin_fourier = detail::argmin(out.fourier_loss);
  if (out.argmin_likelihood != out.argmin_fourier) {
    throw std::logic_error("likelihood and discrepancy selected different parameters");
  }
  return out;
}

/// Family of wrapped Gaussian bumps on the grid, centred at theta in [0, 1).
inline std::function<Vector(double)> translated_bump_family(GridSize n, double width = 0.08) {
  if (!(width > 0.0)) throw Error(Errc::OutOfDomain, "width must be positive");
  const Index N = n.value();
  return [N, width](double theta) {
    Vector f(N);
    for (Index j = 0; j < N; ++j) {
      const double x = static_cast<double>(j) / static_cast<double>(N) - theta;
      double acc = 0.0;
      for (int wrap = -2; wrap <= 2; ++wrap) {
        const double dx = x + static_cast<double>(wrap);
        acc += std::exp(-0.5 * dx * dx / (width * width));
      }
      f[j] = acc;
    }
    f /= f.sum();
    return f;
  };
}

/// y_i = truth + noise, i = 1..count.
inline std::vector<Vector> sample_observations(const Vector& truth, const NoiseModel& model,
                                               int count, std::mt19937_64& rng) {
  if (count < 1) throw Error(Errc::OutOfDomain, "observation count must be >= 1");
  detail::require_same_size(truth.size(), model.n.value(), "observations");
  std::vector<Vector> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) out.push_back(truth + sample_noise(model, rng));
  return out;
}

}  // namespace fdisc
