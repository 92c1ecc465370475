#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

#include "fdisc/core.hpp"
#include "fdisc/measure.hpp"

namespace fdisc {

/// Complex frequency coefficients s_k = sum_j x_j exp(-2 pi i j k / N).
using Spectrum = ComplexVector;

namespace detail {

inline bool is_power_of_two(Index n) { return n > 0 && (n & (n - 1)) == 0; }

inline void require_even(Index n) {
  if (n < 2 || n % 2 != 0) {
    throw Error(Errc::OddSize,
                "transform length must be even and >= 2, got " + std::to_string(n));
  }
}

/// w_m = exp(-2 pi i m / N); the upper half is reflected from the lower so
/// conjugate pairs are bitwise exact.
inline ComplexVector twiddle_table(Index n) {
  ComplexVector w(n);
  w[0] = {1.0, 0.0};
  for (Index m = 1; m <= n / 2; ++m) {
    const double angle = -2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
    w[m] = {std::cos(angle), std::sin(angle)};
  }
  for (Index m = n / 2 + 1; m < n; ++m) w[m] = std::conj(w[n - m]);
  return w;
}

/// Iterative radix-2 butterflies over a power-of-two-length vector.
/// sign -1 transforms forward, +1 backward (unscaled).
inline void fft_radix2(ComplexVector& a, int sign) {
  const Index n = a.size();
  for (Index i = 1, j = 0; i < n; ++i) {
    Index bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j |= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (Index len = 2; len <= n; len <<= 1) {
    const double angle = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    const std::complex<double> step(std::cos(angle), std::sin(angle));
    for (Index base = 0; base < n; base += len) {
      std::complex<double> w(1.0, 0.0);
      for (Index j = 0; j < len / 2; ++j) {
        const std::complex<double> u = a[base + j];
        const std::complex<double> v = a[base + j + len / 2] * w;
        a[base + j] = u + v;
        a[base + j + len / 2] = u - v;
        w *= step;
      }
    }
  }
}

}  // namespace detail

/// Definitional O(N^2) transform; the correctness reference for the fast path.
inline Spectrum dft_naive(const Eigen::Ref<const Vector>& x) {
  detail::require_even(x.size());
  const Index n = x.size();
  const ComplexVector w = detail::twiddle_table(n);
  Spectrum out(n);
  for (Index k = 0; k < n; ++k) {
    std::complex<double> acc(0.0, 0.0);
    for (Index j = 0; j < n; ++j) acc += x[j] * w[(j * k) % n];
    out[k] = acc;
  }
  return out;
}

/// Forward transform: radix-2 when N is a power of two, naive otherwise.
inline Spectrum dft(const Eigen::Ref<const Vector>& x) {
  detail::require_even(x.size());
  if (!detail::is_power_of_two(x.size())) return dft_naive(x);
  Spectrum a = x.cast<std::complex<double>>();
  detail::fft_radix2(a, -1);
  return a;
}

/// Inverse transform of a conjugate-symmetric spectrum. The residual
/// imaginary part is discarded after the symmetry check.
inline Vector idft(const Eigen::Ref<const Spectrum>& s) {
  detail::require_even(s.size());
  const Index n = s.size();
  for (Index k = 0; k < n; ++k) {
    if (std::abs(s[k] - std::conj(s[(n - k) % n])) > 1e-6) {
      throw Error(Errc::NotHermitian,
                  "spectrum is not conjugate-symmetric at frequency " + std::to_string(k));
    }
  }
  ComplexVector a;
  if (detail::is_power_of_two(n)) {
    a = s;
    detail::fft_radix2(a, +1);
  } else {
    const ComplexVector w = detail::twiddle_table(n);
    a.resize(n);
    for (Index j = 0; j < n; ++j) {
      std::complex<double> acc(0.0, 0.0);
      for (Index k = 0; k < n; ++k) acc += s[k] * std::conj(w[(j * k) % n]);
      a[j] = acc;
    }
  }
  return a.real() / static_cast<double>(n);
}

/// Frequency weights (1/2)(1, 1, 1/4, ..., 2/N^2, ..., 1/4, 1): strictly
/// positive and symmetric about the top frequency N/2.
inline Vector weight_b(GridSize n) {
  const Index N = n.value();
  const Index h = n.half();
  Vector b(N);
  b[0] = 0.5;
  for (Index k = 1; k < h; ++k) {
    const double v = 0.5 / static_cast<double>(k * k);
    b[k] = v;
    b[N - k] = v;
  }
  b[h] = 1.0 / static_cast<double>(N * N);
  return b;
}

/// Frequency variances (0, 1, 4, ..., N^2/2, ..., 4, 1): zero at frequency 0,
/// k^2 at 0 < k < N/2 and its mirror, N^2/2 at the top. Off the zero
/// frequency, beta_k = 1 / (2 b_k).
inline Vector weight_beta(GridSize n) {
  const Index N = n.value();
  const Index h = n.half();
  Vector beta(N);
  beta[0] = 0.0;
  for (Index k = 1; k < h; ++k) {
    const double v = static_cast<double>(k * k);
    beta[k] = v;
    beta[N - k] = v;
  }
  beta[h] = static_cast<double>(N * N) / 2.0;
  return beta;
}

/// Real symmetric circulant form behind the squared discrepancy: entry (l, j)
/// is bhat[(j - l) mod N] with bhat the transform of the frequency weights.
/// The harmonics are its eigenvectors, with eigenvalue N * b_k on the k-th.
class CirculantKernel {
 public:
  explicit CirculantKernel(GridSize n) : n_(n) {
    const Vector b = weight_b(n);
    const Spectrum s = dft(b);
    if (s.imag().cwiseAbs().maxCoeff() > 1e-12) {
      throw std::logic_error("transform of the symmetric weight vector must be real");
    }
    bhat_ = s.real();
    eigenvalues_ = static_cast<double>(n.value()) * b;
  }

  GridSize grid() const noexcept { return n_; }
  const Vector& bhat() const noexcept { return bhat_; }
  /// N * b_k for k = 0..N-1; all strictly positive.
  const Vector& eigenvalues() const noexcept { return eigenvalues_; }

  /// (H v)_l = sum_j bhat[(j - l) mod N] v_j by direct summation.
  Vector apply_direct(const Eigen::Ref<const Vector>& v) const {
    detail::require_same_size(v.size(), n_.value(), "circulant apply");
    const Index N = n_.value();
    Vector out(N);
    for (Index l = 0; l < N; ++l) {
      double acc = 0.0;
      for (Index j = 0; j < N; ++j) acc += bhat_[(j - l + N) % N] * v[j];
      out[l] = acc;
    }
    return out;
  }

  /// The same product through the diagonalization H = idft . diag(N b) . dft.
  Vector apply_fft(const Eigen::Ref<const Vector>& v) const {
    detail::require_same_size(v.size(), n_.value(), "circulant apply");
    Spectrum s = dft(v);
    for (Index k = 0; k < s.size(); ++k) s[k] *= eigenvalues_[k];
    return idft(s);
  }

  Vector apply(const Eigen::Ref<const Vector>& v) const {
    if (detail::is_power_of_two(n_.value()) && n_.value() >= 64) return apply_fft(v);
    return apply_direct(v);
  }

 private:
  GridSize n_;
  Vector bhat_;
  Vector eigenvalues_;
};

inline Vector apply_h(const NullSumMeasure& delta) {
  return CirculantKernel(delta.grid()).apply(delta.values());
}

/// Spectrum of the circulant form, never materializing the matrix: N * b.
inline Vector eigenvalues_h(GridSize n) {
  return static_cast<double>(n.value()) * weight_b(n);
}

}  // namespace fdisc
