#pragma once

// Fixed-size dense square matrices, row-major: m[row][col].

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>

namespace quatlin {

template <std::size_t N>
using Matrix = std::array<std::array<double, N>, N>;

using Matrix3 = Matrix<3>;
using Matrix4 = Matrix<4>;

template <std::size_t N>
constexpr Matrix<N> zero_matrix() {
  return Matrix<N>{};
}

template <std::size_t N>
constexpr Matrix<N> identity_matrix() {
  Matrix<N> m{};
  for (std::size_t d = 0; d < N; ++d) m[d][d] = 1.0;
  return m;
}

template <std::size_t N>
constexpr Matrix<N> transpose(const Matrix<N>& a) {
  Matrix<N> t{};
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) t[c][r] = a[r][c];
  return t;
}

template <std::size_t N>
constexpr Matrix<N> matmul(const Matrix<N>& a, const Matrix<N>& b) {
  Matrix<N> p{};
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t k = 0; k < N; ++k)
      for (std::size_t c = 0; c < N; ++c) p[r][c] += a[r][k] * b[k][c];
  return p;
}

template <std::size_t N>
constexpr std::array<double, N> matvec(const Matrix<N>& a, const std::array<double, N>& v) {
  std::array<double, N> out{};
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) out[r] += a[r][c] * v[c];
  return out;
}

template <std::size_t N>
constexpr Matrix<N> outer(const std::array<double, N>& left, const std::array<double, N>& right) {
  Matrix<N> m{};
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) m[r][c] = left[r] * right[c];
  return m;
}

template <std::size_t N>
constexpr Matrix<N> matrix_sum(const Matrix<N>& a, const Matrix<N>& b) {
  Matrix<N> s = a;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) s[r][c] += b[r][c];
  return s;
}

template <std::size_t N>
constexpr Matrix<N> matrix_difference(const Matrix<N>& a, const Matrix<N>& b) {
  Matrix<N> s = a;
  for (std::size_t r = 0; r < N; ++r)
    for (std::size_t c = 0; c < N; ++c) s[r][c] -= b[r][c];
  return s;
}

template <std::size_t N>
double max_abs(const Matrix<N>& a) {
  double m = 0.0;
  for (const auto& row : a)
    for (double v : row) m = std::max(m, std::abs(v));
  return m;
}

template <std::size_t N>
double max_abs_difference(const Matrix<N>& a, const Matrix<N>& b) {
  return max_abs(matrix_difference(a, b));
}

template <std::size_t N>
bool all_finite(const Matrix<N>& a) {
  for (const auto& row : a)
    for (double v : row)
      if (!std::isfinite(v)) return false;
  return true;
}

}  // namespace quatlin
