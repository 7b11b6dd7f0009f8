#include "quatlin/decomposition.hpp"

#include "quatlin/small_svd.hpp"

namespace quatlin {

MinimalDecomposition minimal_decomposition(const CoefficientMatrix& m) {
  const auto factors = svd(m.entries());
  const Matrix4 l = factors.scaled_u();

  MinimalDecomposition out;
  out.singular_values = factors.sigma;
  const std::size_t rank = numeric_rank<4>(factors.sigma);
  for (std::size_t k = 0; k < rank; ++k) {
    out.terms.push_back({Quaternion(l[0][k], l[1][k], l[2][k], l[3][k]),
                         Quaternion(factors.v[0][k], factors.v[1][k], factors.v[2][k], factors.v[3][k])});
  }
  return out;
}

}  // namespace quatlin
