#pragma once

// Singular value decomposition of real square matrices up to 4x4 by
// cyclic two-sided (Kogbetliantz) Jacobi rotations, plus numeric rank.

#include <array>
#include <cstddef>
#include <stdexcept>

#include "quatlin/matrix.hpp"

namespace quatlin {

// Relative threshold below which a singular value counts as zero.
inline constexpr double kRankTolerance = 1e-10;

// A rotation is applied to pair (p, q) while either off-diagonal entry
// exceeds this multiple of the largest singular value.
inline constexpr double kJacobiThreshold = 1e-15;
inline constexpr int kMaxJacobiSweeps = 60;

class NoConvergence : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// m = u * diag(sigma) * v^T with u, v orthogonal and sigma descending.
// Each column of v has its largest-magnitude entry nonnegative.
template <std::size_t N>
struct SvdFactors {
  Matrix<N> u{};
  std::array<double, N> sigma{};
  Matrix<N> v{};
  int sweeps = 0;

  // L = u * diag(sigma); columns of L and v pair up into rank-1 outer products.
  Matrix<N> scaled_u() const;
  Matrix<N> reconstruct() const;
};

template <std::size_t N>
SvdFactors<N> svd(const Matrix<N>& m);

// Number of singular values above kRankTolerance * max(sigma_1, 1e-300).
template <std::size_t N>
std::size_t numeric_rank(const std::array<double, N>& sigma);

template <std::size_t N>
std::size_t numeric_rank(const Matrix<N>& m) {
  return numeric_rank<N>(svd(m).sigma);
}

#define QUATLIN_DECLARE_SVD(N)                                             \
  extern template struct SvdFactors<N>;                                    \
  extern template SvdFactors<N> svd<N>(const Matrix<N>&);                  \
  extern template std::size_t numeric_rank<N>(const std::array<double, N>&);
QUATLIN_DECLARE_SVD(1)
QUATLIN_DECLARE_SVD(2)
QUATLIN_DECLARE_SVD(3)
QUATLIN_DECLARE_SVD(4)
#undef QUATLIN_DECLARE_SVD

}  // namespace quatlin
