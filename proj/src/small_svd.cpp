#include "quatlin/small_svd.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace quatlin {

namespace {

// Rotates rows p and q of a: row_p <- c row_p + s row_q, row_q <- -s row_p + c row_q.
template <std::size_t N>
void rotate_rows(Matrix<N>& a, std::size_t p, std::size_t q, double c, double s) {
  for (std::size_t k = 0; k < N; ++k) {
    const double ap = a[p][k];
    const double aq = a[q][k];
    a[p][k] = c * ap + s * aq;
    a[q][k] = -s * ap + c * aq;
  }
}

// Rotates columns p and q of a: col_p <- c col_p + s col_q, col_q <- -s col_p + c col_q.
template <std::size_t N>
void rotate_cols(Matrix<N>& a, std::size_t p, std::size_t q, double c, double s) {
  for (std::size_t k = 0; k < N; ++k) {
    const double ap = a[k][p];
    const double aq = a[k][q];
    a[k][p] = c * ap + s * aq;
    a[k][q] = -s * ap + c * aq;
  }
}

template <std::size_t N>
double max_abs_diagonal(const Matrix<N>& a) {
  double m = 0.0;
  for (std::size_t d = 0; d < N; ++d) m = std::max(m, std::abs(a[d][d]));
  return m;
}

// One Kogbetliantz step on pair (p, q): a row rotation symmetrizes the 2x2
// block, then a symmetric Jacobi rotation on both sides diagonalizes it.
// Maintains m = u * w * v^T.
template <std::size_t N>
void annihilate(Matrix<N>& w, Matrix<N>& u, Matrix<N>& v, std::size_t p, std::size_t q) {
  const double app = w[p][p];
  const double apq = w[p][q];
  const double aqp = w[q][p];
  const double aqq = w[q][q];

  // Row rotation G with G * block symmetric; u <- u * G^T.
  const double sum = app + aqq;
  const double skew = aqp - apq;
  const double h = std::hypot(sum, skew);
  const double c1 = h > 0.0 ? sum / h : 1.0;
  const double s1 = h > 0.0 ? skew / h : 0.0;
  rotate_rows(w, p, q, c1, s1);
  rotate_cols(u, p, q, c1, s1);

  const double x = w[p][p];
  const double z = w[q][q];
  const double y = 0.5 * (w[p][q] + w[q][p]);
  if (y != 0.0) {
    // P = [[c, s], [-s, c]] on (p, q) with P^T S P diagonal.
    const double zeta = (z - x) / (2.0 * y);
    const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = t * c;
    // w <- P^T w P; P^T rotates rows with (c, -s), P rotates columns with (c, -s).
    rotate_rows(w, p, q, c, -s);
    rotate_cols(w, p, q, c, -s);
    rotate_cols(u, p, q, c, -s);
    rotate_cols(v, p, q, c, -s);
  }
  w[p][q] = 0.0;
  w[q][p] = 0.0;
}

}  // namespace

template <std::size_t N>
Matrix<N> SvdFactors<N>::scaled_u() const {
  Matrix<N> l = u;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) l[r][c] *= sigma[c];
  return l;
}

template <std::size_t N>
Matrix<N> SvdFactors<N>::reconstruct() const {
  return matmul(scaled_u(), transpose(v));
}

template <std::size_t N>
SvdFactors<N> svd(const Matrix<N>& m) {
  static_assert(N >= 1 && N <= 4, "svd supports 1x1 through 4x4 matrices");
  if (!all_finite(m)) {
    throw std::invalid_argument("svd input has non-finite entries");
  }

  Matrix<N> w = m;
  Matrix<N> u = identity_matrix<N>();
  Matrix<N> v = identity_matrix<N>();

  int sweeps = 0;
  bool converged = false;
  while (!converged) {
    // max |w_dd| approaches sigma_1 as w becomes diagonal.
    const double threshold = kJacobiThreshold * max_abs_diagonal(w);
    converged = true;
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        if (std::abs(w[p][q]) > threshold || std::abs(w[q][p]) > threshold) {
          annihilate(w, u, v, p, q);
          converged = false;
        }
      }
    }
    if (converged) break;
    if (++sweeps >= kMaxJacobiSweeps) {
      throw NoConvergence("Jacobi SVD did not converge in " + std::to_string(kMaxJacobiSweeps) +
                          " sweeps");
    }
  }

  std::array<double, N> diag{};
  for (std::size_t d = 0; d < N; ++d) {
    diag[d] = w[d][d];
    if (diag[d] < 0.0) {
      diag[d] = -diag[d];
      for (std::size_t r = 0; r < N; ++r) u[r][d] = -u[r][d];
    }
  }

  std::array<std::size_t, N> order{};
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return diag[a] > diag[b]; });

  SvdFactors<N> out;
  out.sweeps = sweeps;
  for (std::size_t k = 0; k < N; ++k) {
    const std::size_t src = order[k];
    out.sigma[k] = diag[src];
    std::size_t largest = 0;
    for (std::size_t r = 0; r < N; ++r) {
      out.u[r][k] = u[r][src];
      out.v[r][k] = v[r][src];
      if (std::abs(v[r][src]) > std::abs(v[largest][src])) largest = r;
    }
    if (out.v[largest][k] < 0.0) {
      for (std::size_t r = 0; r < N; ++r) {
        out.u[r][k] = -out.u[r][k];
        out.v[r][k] = -out.v[r][k];
      }
    }
  }
  return out;
}

template <std::size_t N>
std::size_t numeric_rank(const std::array<double, N>& sigma) {
  const double top = *std::max_element(sigma.begin(), sigma.end());
  const double cutoff = kRankTolerance * std::max(top, 1e-300);
  return static_cast<std::size_t>(
      std::count_if(sigma.begin(), sigma.end(), [&](double s) { return s > cutoff; }));
}

#define QUATLIN_DEFINE_SVD(N)                              \
  template struct SvdFactors<N>;                           \
  template SvdFactors<N> svd<N>(const Matrix<N>&);         \
  template std::size_t numeric_rank<N>(const std::array<double, N>&);
QUATLIN_DEFINE_SVD(1)
QUATLIN_DEFINE_SVD(2)
QUATLIN_DEFINE_SVD(3)
QUATLIN_DEFINE_SVD(4)
#undef QUATLIN_DEFINE_SVD

}  // namespace quatlin
