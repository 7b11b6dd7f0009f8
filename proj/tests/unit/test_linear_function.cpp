#include <gtest/gtest.h>

#include <algorithm>

#include "quatlin/linear_function.hpp"
#include "quatlin/random.hpp"
#include "quatlin/small_svd.hpp"
#include "support/oracles.hpp"

using quatlin::CoefficientMatrix;
using quatlin::GeneralLinearFunction;
using quatlin::Matrix4;
using quatlin::PureQuaternion;
using quatlin::Quaternion;
using quatlin::testing::close;

namespace {

const Quaternion kZero{};
const Quaternion kOne = Quaternion::one();
const Quaternion kI = Quaternion::i();
const Quaternion kJ = Quaternion::j();
const Quaternion kK = Quaternion::k();

Matrix4 single_entry(std::size_t row, std::size_t col, double value = 1.0) {
  Matrix4 m{};
  m[row][col] = value;
  return m;
}

GeneralLinearFunction q_plus_sum_eqe() { return {{kOne, kOne}, {kI, kI}, {kJ, kJ}, {kK, kK}}; }

// -1/2 (q + i q i + j q j + k q k) = conjugate(q)
GeneralLinearFunction conjugation_function() {
  return {{-0.5 * kOne, kOne}, {-0.5 * kI, kI}, {-0.5 * kJ, kJ}, {-0.5 * kK, kK}};
}

CoefficientMatrix matrix_of(const GeneralLinearFunction& f) { return quatlin::function_matrix(f); }

}  // namespace

TEST(TermMatrix, BasisOuterProducts) {
  EXPECT_EQ(quatlin::term_matrix({kOne, kOne}).entries(), single_entry(0, 0));
  EXPECT_EQ(quatlin::term_matrix({kI, kJ}).entries(), single_entry(1, 2));
  EXPECT_EQ(quatlin::term_matrix({kZero, Quaternion(1, 2, 3, 4)}).entries(), Matrix4{});
}

TEST(TermMatrix, GeneralEntries) {
  const Quaternion left(1, 2, 3, 4);
  const Quaternion right(5, 6, 7, 8);
  const auto m = quatlin::term_matrix({left, right});
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) EXPECT_EQ(m(r, c), left[r] * right[c]);
}

TEST(FunctionMatrix, Examples) {
  EXPECT_EQ(matrix_of(q_plus_sum_eqe()).entries(), quatlin::identity_matrix<4>());
  EXPECT_EQ(matrix_of({}).entries(), Matrix4{});
  Matrix4 expected{};
  expected[0][0] = 1.0;
  expected[1][0] = 1.0;
  expected[0][2] = 1.0;
  EXPECT_EQ(matrix_of({{Quaternion(1, 1, 0, 0), kOne}, {kOne, kJ}}).entries(), expected);
}

TEST(CoefficientMatrix, RejectsNonFinite) {
  Matrix4 m{};
  m[3][3] = std::numeric_limits<double>::quiet_NaN();
  EXPECT_THROW(CoefficientMatrix{m}, std::invalid_argument);
}

TEST(CanonicLeft, Examples) {
  const auto id = quatlin::canonic_left(CoefficientMatrix(quatlin::identity_matrix<4>()));
  EXPECT_EQ(id.a, kOne);
  EXPECT_EQ(id.b, kI);
  EXPECT_EQ(id.c, kJ);
  EXPECT_EQ(id.d, kK);

  const auto iqj = quatlin::canonic_left(matrix_of({{kI, kJ}}));
  EXPECT_EQ(iqj.a, kZero);
  EXPECT_EQ(iqj.b, kZero);
  EXPECT_EQ(iqj.c, kI);
  EXPECT_EQ(iqj.d, kZero);
}

TEST(CanonicLeft, ConjugationAgainstBasisActionOracle) {
  const auto f = conjugation_function();
  const Matrix4 expected_action{{{1, 0, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 0}, {0, 0, 0, -1}}};
  EXPECT_EQ(quatlin::action_matrix(f), expected_action);

  const auto oracle = quatlin::testing::left_canonic_from_action(quatlin::testing::conjugation);
  const std::array<Quaternion, 4> frozen{-0.5 * kOne, -0.5 * kI, -0.5 * kJ, -0.5 * kK};
  for (std::size_t s = 0; s < 4; ++s) EXPECT_LE(quatlin::max_abs_difference(oracle[s], frozen[s]), 1e-15);

  const auto cf = quatlin::canonic_left(matrix_of(f));
  const std::array<Quaternion, 4> got{cf.a, cf.b, cf.c, cf.d};
  for (std::size_t s = 0; s < 4; ++s) EXPECT_LE(quatlin::max_abs_difference(got[s], frozen[s]), 1e-15);
}

TEST(CanonicRight, Examples) {
  const auto id = quatlin::canonic_right(CoefficientMatrix(quatlin::identity_matrix<4>()));
  EXPECT_EQ(id.a, kOne);
  EXPECT_EQ(id.b, kI);
  EXPECT_EQ(id.c, kJ);
  EXPECT_EQ(id.d, kK);

  const auto iqj = quatlin::canonic_right(matrix_of({{kI, kJ}}));
  EXPECT_EQ(iqj.a, kZero);
  EXPECT_EQ(iqj.b, kJ);
  EXPECT_EQ(iqj.c, kZero);
  EXPECT_EQ(iqj.d, kZero);

  const auto oracle = quatlin::testing::right_canonic_from_action(quatlin::testing::conjugation);
  const auto cf = quatlin::canonic_right(matrix_of(conjugation_function()));
  const std::array<Quaternion, 4> got{cf.a, cf.b, cf.c, cf.d};
  const std::array<Quaternion, 4> frozen{-0.5 * kOne, -0.5 * kI, -0.5 * kJ, -0.5 * kK};
  for (std::size_t s = 0; s < 4; ++s) {
    EXPECT_LE(quatlin::max_abs_difference(oracle[s], frozen[s]), 1e-15);
    EXPECT_LE(quatlin::max_abs_difference(got[s], frozen[s]), 1e-15);
  }
}

TEST(MixedForm, Examples) {
  const auto zero = quatlin::mixed_form(CoefficientMatrix());
  EXPECT_EQ(zero.a, kZero);
  EXPECT_EQ(zero.b, PureQuaternion());
  EXPECT_EQ(zero.v1, PureQuaternion());
  EXPECT_EQ(zero.v3, PureQuaternion());
  EXPECT_EQ(zero.v5, PureQuaternion());

  const auto identity = quatlin::mixed_form(matrix_of({{kOne, kOne}}));
  EXPECT_EQ(identity.a, kOne);
  EXPECT_EQ(identity.b, PureQuaternion());
  EXPECT_EQ(identity.v1, PureQuaternion());

  const auto iqj = quatlin::mixed_form(matrix_of({{kI, kJ}}));
  EXPECT_EQ(iqj.a, kZero);
  EXPECT_EQ(iqj.b, PureQuaternion());
  EXPECT_EQ(iqj.v1, PureQuaternion());
  EXPECT_EQ(iqj.v3, PureQuaternion(1, 0, 0));
  EXPECT_EQ(iqj.v5, PureQuaternion());
}

TEST(MixedForm, RowOneFeedsB) {
  // q i has its only entry in row 0, column 1.
  const auto qi = quatlin::mixed_form(matrix_of({{kOne, kI}}));
  EXPECT_EQ(qi.a, kZero);
  EXPECT_EQ(qi.b, PureQuaternion(1, 0, 0));
}

TEST(PureBilateralForm, Examples) {
  const auto identity = quatlin::pure_bilateral_form(matrix_of({{kOne, kOne}}));
  EXPECT_EQ(identity.a, kOne);
  EXPECT_EQ(identity.b, PureQuaternion());
  EXPECT_TRUE(identity.pairs.empty());

  const auto iqi = quatlin::pure_bilateral_form(matrix_of({{kI, kI}}));
  EXPECT_EQ(iqi.a, kZero);
  ASSERT_EQ(iqi.pairs.size(), 1u);
  const auto block = quatlin::outer(iqi.pairs[0].left.as_vector(), iqi.pairs[0].right.as_vector());
  Matrix4 rebuilt{};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) rebuilt[r + 1][c + 1] = block[r][c];
  EXPECT_LE(quatlin::max_abs_difference(rebuilt, single_entry(1, 1)), 1e-15);
  // sqrt(sigma) on each side.
  EXPECT_NEAR(quatlin::norm(iqi.pairs[0].left.as_quaternion()), 1.0, 1e-15);
  EXPECT_NEAR(quatlin::norm(iqi.pairs[0].right.as_quaternion()), 1.0, 1e-15);
}

TEST(PureBilateralForm, RandomFunctionNeedsThreePairs) {
  quatlin::FixtureRng rng(1234);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = rng.function(10);
    const auto pf = quatlin::pure_bilateral_form(matrix_of(f));
    EXPECT_EQ(pf.pairs.size(), 3u);
    for (const auto& pair : pf.pairs) {
      EXPECT_EQ(pair.left.as_quaternion().w(), 0.0);
      EXPECT_EQ(pair.right.as_quaternion().w(), 0.0);
    }
    for (int n = 0; n < 100; ++n) {
      const Quaternion q = rng.quaternion();
      EXPECT_TRUE(close(quatlin::evaluate(pf, q), quatlin::evaluate(f, q), 1e-10));
    }
    EXPECT_TRUE(quatlin::functions_equal(quatlin::to_function(pf), f, 1e-10));
  }
}

TEST(Meister, Examples) {
  EXPECT_EQ(quatlin::build_meister({kOne, kZero, kZero, kZero}).entries(), single_entry(0, 0));
  const auto m = quatlin::build_meister({kOne, kZero, kI, kJ});
  Matrix4 expected = single_entry(0, 0);
  expected[1][2] = 1.0;
  EXPECT_EQ(m.entries(), expected);
  EXPECT_EQ(quatlin::numeric_rank(m.entries()), 2u);
}

TEST(MeisterProperty, RankAtMostThree) {
  quatlin::FixtureRng rng(555);
  std::size_t saw_three = 0;
  for (int n = 0; n < 1000; ++n) {
    const auto rank = quatlin::numeric_rank(quatlin::build_meister(rng.meister()).entries());
    EXPECT_LE(rank, 3u);
    saw_three += rank == 3;
  }
  EXPECT_EQ(saw_three, 1000u);
}

TEST(Evaluate, Examples) {
  EXPECT_EQ(quatlin::evaluate(GeneralLinearFunction{{kI, kJ}}, kK), kOne);
  EXPECT_EQ(quatlin::evaluate(GeneralLinearFunction{}, Quaternion(1, 2, 3, 4)), kZero);
  EXPECT_EQ(quatlin::evaluate(q_plus_sum_eqe(), Quaternion(1, 2, 3, 4)), Quaternion(-2, 4, 6, 8));
}

TEST(Evaluate, CanonicExamples) {
  const quatlin::CanonicFormLeft identity{kOne, kZero, kZero, kZero};
  EXPECT_EQ(quatlin::evaluate(identity, Quaternion(1, 2, 3, 4)), Quaternion(1, 2, 3, 4));
  const quatlin::CanonicFormLeft conj{-0.5 * kOne, -0.5 * kI, -0.5 * kJ, -0.5 * kK};
  EXPECT_EQ(quatlin::evaluate(conj, kI), -kI);
}

TEST(ActionMatrix, Examples) {
  EXPECT_EQ(quatlin::action_matrix({{kOne, kOne}}), quatlin::identity_matrix<4>());
  const Matrix4 left_i{{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}}};
  EXPECT_EQ(quatlin::action_matrix({{kI, kOne}}), left_i);
}

TEST(Solve, Examples) {
  const Quaternion r(0.3, -1.5, 2.0, 7.0);
  EXPECT_TRUE(close(quatlin::solve({{kOne, kOne}}, r), r, 1e-15));
  EXPECT_TRUE(close(quatlin::solve(conjugation_function(), Quaternion(1, 1, 0, 0)), Quaternion(1, -1, 0, 0), 1e-15));
  EXPECT_TRUE(close(quatlin::solve({{2.0 * kOne, kOne}}, 4.0 * kJ), 2.0 * kJ, 1e-15));
}

TEST(Solve, SingularFunctions) {
  EXPECT_THROW(quatlin::solve({}, kOne), quatlin::SingularFunction);
  // q + i q i annihilates 1 and i.
  EXPECT_THROW(quatlin::solve({{kOne, kOne}, {kI, kI}}, kOne), quatlin::SingularFunction);
}

TEST(SolveProperty, ResidualIsSmall) {
  quatlin::FixtureRng rng(31);
  for (int n = 0; n < 500; ++n) {
    const auto f = rng.function(1 + n % 6);
    const Quaternion r = rng.quaternion();
    const Quaternion q = quatlin::solve(f, r);
    EXPECT_LE(quatlin::norm(quatlin::evaluate(f, q) - r), 1e-9 * quatlin::norm(r));
  }
}

TEST(FunctionsEqual, Examples) {
  quatlin::FixtureRng rng(8);
  const auto f = rng.function(10);
  auto shuffled = f.terms();
  std::reverse(shuffled.begin(), shuffled.end());
  std::rotate(shuffled.begin(), shuffled.begin() + 3, shuffled.end());
  EXPECT_TRUE(quatlin::functions_equal(f, GeneralLinearFunction(shuffled)));

  EXPECT_FALSE(quatlin::functions_equal({{kI, kJ}}, {{kJ, kI}}));
  EXPECT_TRUE(quatlin::functions_equal(f, quatlin::to_function(quatlin::canonic_left(matrix_of(f)))));
  EXPECT_THROW(quatlin::functions_equal(f, f, -1.0), std::invalid_argument);
}

TEST(LinearFunctionProperty, TermMatrixHasRankOne) {
  quatlin::FixtureRng rng(61);
  for (int n = 0; n < 1000; ++n) {
    EXPECT_EQ(quatlin::numeric_rank(quatlin::term_matrix(rng.term()).entries()), 1u);
  }
}

TEST(LinearFunctionProperty, MatrixIsAdditive) {
  quatlin::FixtureRng rng(62);
  for (int n = 0; n < 200; ++n) {
    const auto f = rng.function(n % 7);
    const auto g = rng.function(n % 5);
    const auto sum = matrix_of(f) + matrix_of(g);
    EXPECT_LE(quatlin::max_abs_difference(matrix_of(f.concatenated(g)).entries(), sum.entries()), 1e-14);
  }
}

TEST(LinearFunctionProperty, CanonizationSoundness) {
  quatlin::FixtureRng rng(63);
  for (int n = 0; n < 1000; ++n) {
    const auto f = rng.function(static_cast<std::size_t>(n % 11));
    const auto m = matrix_of(f);
    const auto left = quatlin::canonic_left(m);
    const auto right = quatlin::canonic_right(m);
    const auto mixed = quatlin::mixed_form(m);
    for (int k = 0; k < 10; ++k) {
      const Quaternion q = rng.quaternion();
      const Quaternion direct = quatlin::evaluate(f, q);
      EXPECT_TRUE(close(quatlin::evaluate_canonic_left(left, q), direct, 1e-12));
      EXPECT_TRUE(close(quatlin::evaluate_canonic_right(right, q), direct, 1e-12));
      EXPECT_TRUE(close(quatlin::evaluate_mixed(mixed, q), direct, 1e-12));
    }
  }
}

TEST(LinearFunctionProperty, CanonicRoundTripIsExact) {
  quatlin::FixtureRng rng(64);
  for (int n = 0; n < 500; ++n) {
    const quatlin::CanonicFormLeft cf{rng.quaternion(), rng.quaternion(), rng.quaternion(), rng.quaternion()};
    EXPECT_EQ(quatlin::canonic_left(matrix_of(quatlin::to_function(cf))), cf);
    const quatlin::CanonicFormRight rf{rng.quaternion(), rng.quaternion(), rng.quaternion(), rng.quaternion()};
    EXPECT_EQ(quatlin::canonic_right(matrix_of(quatlin::to_function(rf))), rf);
    const auto m = matrix_of(rng.function(5));
    EXPECT_EQ(matrix_of(quatlin::to_function(quatlin::mixed_form(m))), m);
  }
}

TEST(LinearFunctionProperty, EvaluationIsLinear) {
  quatlin::FixtureRng rng(65);
  for (int n = 0; n < 500; ++n) {
    const auto f = rng.function(static_cast<std::size_t>(n % 11));
    const Quaternion q1 = rng.quaternion();
    const Quaternion q2 = rng.quaternion();
    const double s = 3.0 * rng.uniform();
    EXPECT_TRUE(close(quatlin::evaluate(f, q1 + q2), quatlin::evaluate(f, q1) + quatlin::evaluate(f, q2), 1e-12));
    EXPECT_TRUE(close(quatlin::evaluate(f, s * q1), s * quatlin::evaluate(f, q1), 1e-12));
  }
}

TEST(LinearFunctionProperty, MatrixIsCompleteInvariant) {
  quatlin::FixtureRng rng(66);
  const auto same_on_basis = [](const GeneralLinearFunction& f, const GeneralLinearFunction& g) {
    for (std::size_t c = 0; c < 4; ++c) {
      const Quaternion e = Quaternion::basis(c);
      if (!close(quatlin::evaluate(f, e), quatlin::evaluate(g, e), 1e-12)) return false;
    }
    return true;
  };
  for (int n = 0; n < 300; ++n) {
    const auto f = rng.function(static_cast<std::size_t>(1 + n % 10));
    const auto m = matrix_of(f);
    const GeneralLinearFunction equivalents[] = {
        quatlin::to_function(quatlin::canonic_left(m)),
        quatlin::to_function(quatlin::canonic_right(m)),
        quatlin::to_function(quatlin::mixed_form(m)),
    };
    for (const auto& g : equivalents) {
      EXPECT_TRUE(quatlin::functions_equal(f, g, 1e-12));
      EXPECT_TRUE(same_on_basis(f, g));
    }
    const auto other = f.concatenated({rng.term()});
    EXPECT_FALSE(quatlin::functions_equal(f, other, 1e-12));
    EXPECT_FALSE(same_on_basis(f, other));
  }
}

TEST(LinearFunctionProperty, ActionMatrixConsistency) {
  quatlin::FixtureRng rng(67);
  for (int n = 0; n < 500; ++n) {
    const auto f = rng.function(static_cast<std::size_t>(n % 11));
    const Quaternion q = rng.quaternion();
    const auto predicted = Quaternion::from_vector(quatlin::matvec(quatlin::action_matrix(f), q.as_vector()));
    EXPECT_TRUE(close(predicted, quatlin::evaluate(f, q), 1e-12));
  }
}
