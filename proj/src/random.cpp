#include "quatlin/random.hpp"

#include <cmath>

namespace quatlin {

double FixtureRng::uniform() {
  const std::uint64_t bits = engine_() >> 11;
  return 2.0 * std::ldexp(static_cast<double>(bits), -53) - 1.0;
}

Quaternion FixtureRng::quaternion() {
  const double w = uniform();
  const double x = uniform();
  const double y = uniform();
  const double z = uniform();
  return Quaternion(w, x, y, z);
}

TermPair FixtureRng::term() {
  const Quaternion left = quaternion();
  return {left, quaternion()};
}

GeneralLinearFunction FixtureRng::function(std::size_t terms) {
  GeneralLinearFunction f;
  for (std::size_t p = 0; p < terms; ++p) {
    const TermPair t = term();
    f.add_term(t.left, t.right);
  }
  return f;
}

MeisterForm FixtureRng::meister() {
  MeisterForm mf;
  mf.a = quaternion();
  mf.b = quaternion();
  mf.c = quaternion();
  mf.d = quaternion();
  return mf;
}

}  // namespace quatlin
