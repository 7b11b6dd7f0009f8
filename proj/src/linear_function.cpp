#include "quatlin/linear_function.hpp"

#include <algorithm>
#include <cmath>

#include "quatlin/small_svd.hpp"

namespace quatlin {

namespace {

Quaternion column_quaternion(const CoefficientMatrix& m, std::size_t col) {
  return Quaternion(m(0, col), m(1, col), m(2, col), m(3, col));
}

Quaternion row_quaternion(const CoefficientMatrix& m, std::size_t row) {
  return Quaternion(m(row, 0), m(row, 1), m(row, 2), m(row, 3));
}

Vec3 scaled(const Vec3& v, double s) { return {v[0] * s, v[1] * s, v[2] * s}; }

}  // namespace

GeneralLinearFunction GeneralLinearFunction::concatenated(const GeneralLinearFunction& other) const {
  std::vector<TermPair> all = terms_;
  all.insert(all.end(), other.terms_.begin(), other.terms_.end());
  return GeneralLinearFunction(std::move(all));
}

CoefficientMatrix::CoefficientMatrix(const Matrix4& entries) : entries_(entries) {
  if (!all_finite(entries)) {
    throw std::invalid_argument("coefficient matrix has non-finite entries");
  }
}

Matrix3 CoefficientMatrix::vector_block() const {
  Matrix3 block{};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) block[r][c] = entries_[r + 1][c + 1];
  return block;
}

CoefficientMatrix operator+(const CoefficientMatrix& a, const CoefficientMatrix& b) {
  return CoefficientMatrix(matrix_sum(a.entries(), b.entries()));
}

CoefficientMatrix term_matrix(const TermPair& t) {
  return CoefficientMatrix(outer(t.left.as_vector(), t.right.as_vector()));
}

CoefficientMatrix function_matrix(const GeneralLinearFunction& f) {
  Matrix4 sum{};
  for (const auto& t : f.terms()) {
    const Vec4 l = t.left.as_vector();
    const Vec4 r = t.right.as_vector();
    for (std::size_t row = 0; row < 4; ++row)
      for (std::size_t col = 0; col < 4; ++col) sum[row][col] += l[row] * r[col];
  }
  return CoefficientMatrix(sum);
}

CanonicFormLeft canonic_left(const CoefficientMatrix& m) {
  return {column_quaternion(m, 0), column_quaternion(m, 1), column_quaternion(m, 2),
          column_quaternion(m, 3)};
}

CanonicFormRight canonic_right(const CoefficientMatrix& m) {
  return {row_quaternion(m, 0), row_quaternion(m, 1), row_quaternion(m, 2), row_quaternion(m, 3)};
}

MixedForm mixed_form(const CoefficientMatrix& m) {
  MixedForm out;
  out.a = column_quaternion(m, 0);
  out.b = PureQuaternion(m(0, 1), m(0, 2), m(0, 3));
  out.v1 = PureQuaternion(m(1, 1), m(2, 1), m(3, 1));
  out.v3 = PureQuaternion(m(1, 2), m(2, 2), m(3, 2));
  out.v5 = PureQuaternion(m(1, 3), m(2, 3), m(3, 3));
  return out;
}

PureBilateralForm pure_bilateral_form(const CoefficientMatrix& m) {
  PureBilateralForm out;
  out.a = column_quaternion(m, 0);
  out.b = PureQuaternion(m(0, 1), m(0, 2), m(0, 3));

  const auto factors = svd(m.vector_block());
  const std::size_t rank = numeric_rank<3>(factors.sigma);
  for (std::size_t k = 0; k < rank; ++k) {
    // Split sigma evenly between the two sides.
    const double root = std::sqrt(factors.sigma[k]);
    const Vec3 u{factors.u[0][k], factors.u[1][k], factors.u[2][k]};
    const Vec3 v{factors.v[0][k], factors.v[1][k], factors.v[2][k]};
    out.pairs.push_back({PureQuaternion::from_vector(scaled(u, root)),
                         PureQuaternion::from_vector(scaled(v, root))});
  }
  return out;
}

GeneralLinearFunction meister_function(const MeisterForm& mf) {
  return {{mf.a, Quaternion::one()}, {Quaternion::one(), mf.b}, {mf.c, mf.d}};
}

CoefficientMatrix build_meister(const MeisterForm& mf) { return function_matrix(meister_function(mf)); }

Quaternion evaluate(const GeneralLinearFunction& f, const Quaternion& q) {
  Quaternion sum;
  for (const auto& t : f.terms()) sum += multiply(multiply(t.left, q), t.right);
  return sum;
}

Quaternion evaluate(const CanonicFormLeft& cf, const Quaternion& q) {
  return cf.a * q + cf.b * (q * Quaternion::i()) + cf.c * (q * Quaternion::j()) +
         cf.d * (q * Quaternion::k());
}

Quaternion evaluate(const CanonicFormRight& cf, const Quaternion& q) {
  return q * cf.a + (Quaternion::i() * q) * cf.b + (Quaternion::j() * q) * cf.c +
         (Quaternion::k() * q) * cf.d;
}

Quaternion evaluate(const MixedForm& mf, const Quaternion& q) {
  return mf.a * q + q * mf.b.as_quaternion() + mf.v1.as_quaternion() * q * Quaternion::i() +
         mf.v3.as_quaternion() * q * Quaternion::j() + mf.v5.as_quaternion() * q * Quaternion::k();
}

Quaternion evaluate(const PureBilateralForm& pf, const Quaternion& q) {
  Quaternion sum = pf.a * q + q * pf.b.as_quaternion();
  for (const auto& pair : pf.pairs) sum += pair.left.as_quaternion() * q * pair.right.as_quaternion();
  return sum;
}

GeneralLinearFunction to_function(const CanonicFormLeft& cf) {
  return {{cf.a, Quaternion::one()}, {cf.b, Quaternion::i()}, {cf.c, Quaternion::j()}, {cf.d, Quaternion::k()}};
}

GeneralLinearFunction to_function(const CanonicFormRight& cf) {
  return {{Quaternion::one(), cf.a}, {Quaternion::i(), cf.b}, {Quaternion::j(), cf.c}, {Quaternion::k(), cf.d}};
}

GeneralLinearFunction to_function(const MixedForm& mf) {
  return {{mf.a, Quaternion::one()},
          {Quaternion::one(), mf.b.as_quaternion()},
          {mf.v1.as_quaternion(), Quaternion::i()},
          {mf.v3.as_quaternion(), Quaternion::j()},
          {mf.v5.as_quaternion(), Quaternion::k()}};
}

GeneralLinearFunction to_function(const PureBilateralForm& pf) {
  GeneralLinearFunction f{{pf.a, Quaternion::one()}, {Quaternion::one(), pf.b.as_quaternion()}};
  for (const auto& pair : pf.pairs) f.add_term(pair.left.as_quaternion(), pair.right.as_quaternion());
  return f;
}

Matrix4 action_matrix(const GeneralLinearFunction& f) {
  Matrix4 action{};
  for (std::size_t col = 0; col < 4; ++col) {
    const Vec4 image = evaluate(f, Quaternion::basis(col)).as_vector();
    for (std::size_t row = 0; row < 4; ++row) action[row][col] = image[row];
  }
  return action;
}

Quaternion solve(const GeneralLinearFunction& f, const Quaternion& r) {
  const auto factors = svd(action_matrix(f));
  if (numeric_rank<4>(factors.sigma) < 4) {
    throw SingularFunction();
  }
  // q = V * diag(1/sigma) * U^T * r
  const Vec4 rhs = r.as_vector();
  Vec4 projected{};
  for (std::size_t k = 0; k < 4; ++k) {
    double dot = 0.0;
    for (std::size_t row = 0; row < 4; ++row) dot += factors.u[row][k] * rhs[row];
    projected[k] = dot / factors.sigma[k];
  }
  return Quaternion::from_vector(matvec(factors.v, projected));
}

bool matrices_equal(const CoefficientMatrix& a, const CoefficientMatrix& b, double tol) {
  if (!(tol >= 0.0)) {
    throw std::invalid_argument("equality tolerance must be nonnegative");
  }
  const double magnitude = std::max(max_abs(a.entries()), max_abs(b.entries()));
  return max_abs_difference(a.entries(), b.entries()) <= tol * (1.0 + magnitude);
}

bool functions_equal(const GeneralLinearFunction& f, const GeneralLinearFunction& g, double tol) {
  return matrices_equal(function_matrix(f), function_matrix(g), tol);
}

}  // namespace quatlin
