#pragma once

#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace fdisc {

using Vector = Eigen::VectorXd;
using ComplexVector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXd;
using Index = Eigen::Index;

/// Tolerance on total-mass constraints (sum to 1, sum to 0).
inline constexpr double kMassTol = 1e-9;
/// Entries below -kNegativeTol are rejected; entries in [-kNegativeTol, 0)
/// are clamped to zero.
inline constexpr double kNegativeTol = 1e-12;

enum class Errc {
  OddSize,
  NegativeWeight,
  MassMismatch,
  SizeMismatch,
  IndexOutOfRange,
  ZeroDelta,
  ThetaOutOfRange,
  NotHermitian,
  NonNullSum,
  OutOfDomain,
  BadRange,
  EmptyGrid,
  MassMismatchPair,
  StepSizeTooLarge,
  ParseError,
  IoError,
};

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// Number of points of the uniform grid {0, 1/N, ..., (N-1)/N}. Always even
/// and at least 2: every frequency-domain formula below indexes N/2.
class GridSize {
 public:
  explicit GridSize(Index n) : n_(n) {
    if (n < 2 || n % 2 != 0) {
      throw Error(Errc::OddSize,
                  "grid size must be even and >= 2, got " + std::to_string(n));
    }
  }

  Index value() const noexcept { return n_; }
  Index half() const noexcept { return n_ / 2; }

  friend bool operator==(GridSize a, GridSize b) noexcept { return a.n_ == b.n_; }
  friend bool operator!=(GridSize a, GridSize b) noexcept { return a.n_ != b.n_; }

 private:
  Index n_;
};

namespace detail {

inline void require_same_size(Index a, Index b, const char* what) {
  if (a != b) {
    throw Error(Errc::SizeMismatch, std::string(what) + ": size mismatch (" +
                                        std::to_string(a) + " vs " + std::to_string(b) + ")");
  }
}

}  // namespace detail

}  // namespace fdisc
