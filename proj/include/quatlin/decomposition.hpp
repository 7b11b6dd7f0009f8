#pragma once

// Minimal double-sided decomposition f(q) = sum_k A_k q E_k obtained from
// the SVD M = U Sigma V^T = L V^T of the coefficient matrix. One term per
// singular value above the rank tolerance, in descending order.

#include <array>
#include <vector>

#include "quatlin/linear_function.hpp"

namespace quatlin {

struct MinimalDecomposition {
  std::vector<TermPair> terms;
  std::array<double, 4> singular_values{};
  std::size_t rank() const { return terms.size(); }

  GeneralLinearFunction as_function() const { return GeneralLinearFunction(terms); }
  CoefficientMatrix reconstruct() const { return function_matrix(as_function()); }
};

MinimalDecomposition minimal_decomposition(const CoefficientMatrix& m);

}  // namespace quatlin
