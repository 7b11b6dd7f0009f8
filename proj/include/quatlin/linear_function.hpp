#pragma once

// General linear quaternion functions f(q) = sum_p m_p q n_p, their 4x4
// coefficient matrix, and the canonic forms read off that matrix.
//
// Coefficient matrix entry (r, c) is the total coefficient of the basis
// product e_r q e_c, with e_0 = 1, e_1 = i, e_2 = j, e_3 = k. Rows follow the
// left coefficient's components, columns the right coefficient's.

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

#include "quatlin/matrix.hpp"
#include "quatlin/quaternion.hpp"

namespace quatlin {

struct TermPair {
  Quaternion left;
  Quaternion right;

  bool operator==(const TermPair&) const = default;
};

class GeneralLinearFunction {
 public:
  GeneralLinearFunction() = default;
  explicit GeneralLinearFunction(std::vector<TermPair> terms) : terms_(std::move(terms)) {}
  GeneralLinearFunction(std::initializer_list<TermPair> terms) : terms_(terms) {}

  const std::vector<TermPair>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  void add_term(const Quaternion& left, const Quaternion& right) { terms_.push_back({left, right}); }

  // Terms of this function followed by the terms of other.
  GeneralLinearFunction concatenated(const GeneralLinearFunction& other) const;

 private:
  std::vector<TermPair> terms_;
};

class CoefficientMatrix {
 public:
  CoefficientMatrix() = default;
  explicit CoefficientMatrix(const Matrix4& entries);

  double operator()(std::size_t row, std::size_t col) const { return entries_[row][col]; }
  const Matrix4& entries() const { return entries_; }

  // Lower-right 3x3 block: rows and columns i, j, k.
  Matrix3 vector_block() const;

  bool operator==(const CoefficientMatrix&) const = default;

 private:
  Matrix4 entries_{};
};

CoefficientMatrix operator+(const CoefficientMatrix& a, const CoefficientMatrix& b);

// f(q) = A q + B q i + C q j + D q k
struct CanonicFormLeft {
  Quaternion a, b, c, d;
  bool operator==(const CanonicFormLeft&) const = default;
};

// f(q) = q A' + i q B' + j q C' + k q D'
struct CanonicFormRight {
  Quaternion a, b, c, d;
  bool operator==(const CanonicFormRight&) const = default;
};

// f(q) = A q + q b + v1 q i + v3 q j + v5 q k, 16 real coefficients.
struct MixedForm {
  Quaternion a;
  PureQuaternion b;
  PureQuaternion v1, v3, v5;
  bool operator==(const MixedForm&) const = default;
};

struct PurePair {
  PureQuaternion left;
  PureQuaternion right;
};

// f(q) = A q + q b + sum_k left_k q right_k with at most three pure pairs.
struct PureBilateralForm {
  Quaternion a;
  PureQuaternion b;
  std::vector<PurePair> pairs;
};

// f(q) = A q + q B + C q D
struct MeisterForm {
  Quaternion a, b, c, d;
};

class SingularFunction : public std::runtime_error {
 public:
  SingularFunction() : std::runtime_error("function is singular") {}
};

CoefficientMatrix term_matrix(const TermPair& t);
CoefficientMatrix function_matrix(const GeneralLinearFunction& f);

CanonicFormLeft canonic_left(const CoefficientMatrix& m);
CanonicFormRight canonic_right(const CoefficientMatrix& m);
MixedForm mixed_form(const CoefficientMatrix& m);
PureBilateralForm pure_bilateral_form(const CoefficientMatrix& m);

GeneralLinearFunction meister_function(const MeisterForm& mf);
CoefficientMatrix build_meister(const MeisterForm& mf);

Quaternion evaluate(const GeneralLinearFunction& f, const Quaternion& q);
Quaternion evaluate(const CanonicFormLeft& cf, const Quaternion& q);
Quaternion evaluate(const CanonicFormRight& cf, const Quaternion& q);
Quaternion evaluate(const MixedForm& mf, const Quaternion& q);
Quaternion evaluate(const PureBilateralForm& pf, const Quaternion& q);

inline Quaternion evaluate_canonic_left(const CanonicFormLeft& cf, const Quaternion& q) { return evaluate(cf, q); }
inline Quaternion evaluate_canonic_right(const CanonicFormRight& cf, const Quaternion& q) { return evaluate(cf, q); }
inline Quaternion evaluate_mixed(const MixedForm& mf, const Quaternion& q) { return evaluate(mf, q); }

// Each form re-expressed as an explicit list of double-sided terms.
GeneralLinearFunction to_function(const CanonicFormLeft& cf);
GeneralLinearFunction to_function(const CanonicFormRight& cf);
GeneralLinearFunction to_function(const MixedForm& mf);
GeneralLinearFunction to_function(const PureBilateralForm& pf);

// Real 4x4 matrix F with as_vector(f(q)) = F * as_vector(q).
Matrix4 action_matrix(const GeneralLinearFunction& f);

// Returns q with f(q) = r. Throws SingularFunction when the action matrix
// has numeric rank below 4.
Quaternion solve(const GeneralLinearFunction& f, const Quaternion& r);

inline constexpr double kDefaultEqualityTolerance = 1e-12;

// Max-entry difference within tol * (1 + larger max-abs entry).
bool matrices_equal(const CoefficientMatrix& a, const CoefficientMatrix& b, double tol);
bool functions_equal(const GeneralLinearFunction& f, const GeneralLinearFunction& g,
                     double tol = kDefaultEqualityTolerance);

}  // namespace quatlin
