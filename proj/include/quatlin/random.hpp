#pragma once

// Seeded fixture generation that any language can reproduce:
//
//   state_{n+1} = 6364136223846793005 * state_n + 1442695040888963407  (mod 2^64)
//   state_0     = seed
//   draw        = 2 * (state_{n+1} >> 11) * 2^-53 - 1                 in [-1, 1)
//
// Quaternions consume four draws in (w, x, y, z) order; a term draws its
// left coefficient, then its right.

#include <cstddef>
#include <cstdint>
#include <random>

#include "quatlin/linear_function.hpp"

namespace quatlin {

using Lcg64 = std::linear_congruential_engine<std::uint64_t, 6364136223846793005ULL,
                                              1442695040888963407ULL, 0ULL>;

class FixtureRng {
 public:
  explicit FixtureRng(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // [-1, 1)
  Quaternion quaternion();
  TermPair term();
  GeneralLinearFunction function(std::size_t terms);
  MeisterForm meister();

 private:
  Lcg64 engine_;
};

inline GeneralLinearFunction random_function(std::size_t terms, std::uint64_t seed) {
  return FixtureRng(seed).function(terms);
}

}  // namespace quatlin
