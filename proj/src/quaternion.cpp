#include "quatlin/quaternion.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace quatlin {

namespace {

void require_finite(double value) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument("quaternion component is not finite");
  }
}

}  // namespace

Quaternion::Quaternion(double w, double x, double y, double z) : w_(w), x_(x), y_(y), z_(z) {
  require_finite(w);
  require_finite(x);
  require_finite(y);
  require_finite(z);
}

Quaternion Quaternion::from_vector(const Vec4& v) { return Quaternion(v[0], v[1], v[2], v[3]); }

Quaternion Quaternion::basis(std::size_t index) {
  if (index > 3) {
    throw std::out_of_range("quaternion basis index must be in 0..3");
  }
  Vec4 v{};
  v[index] = 1.0;
  return from_vector(v);
}

double Quaternion::operator[](std::size_t index) const {
  switch (index) {
    case 0: return w_;
    case 1: return x_;
    case 2: return y_;
    case 3: return z_;
    default: throw std::out_of_range("quaternion component index must be in 0..3");
  }
}

PureQuaternion::PureQuaternion(double x, double y, double z) : x_(x), y_(y), z_(z) {
  require_finite(x);
  require_finite(y);
  require_finite(z);
}

PureQuaternion PureQuaternion::from_vector(const Vec3& v) { return PureQuaternion(v[0], v[1], v[2]); }

Quaternion multiply(const Quaternion& a, const Quaternion& b) {
  // (a_w b_w - a.b, a_w b + b_w a + a x b), grouped so that
  // conjugate(a b) == conjugate(b) conjugate(a) holds bit for bit.
  return Quaternion(a.w() * b.w() - (a.x() * b.x() + a.y() * b.y() + a.z() * b.z()),
                    (a.w() * b.x() + b.w() * a.x()) + (a.y() * b.z() - a.z() * b.y()),
                    (a.w() * b.y() + b.w() * a.y()) + (a.z() * b.x() - a.x() * b.z()),
                    (a.w() * b.z() + b.w() * a.z()) + (a.x() * b.y() - a.y() * b.x()));
}

Quaternion add(const Quaternion& a, const Quaternion& b) {
  return Quaternion(a.w() + b.w(), a.x() + b.x(), a.y() + b.y(), a.z() + b.z());
}

Quaternion subtract(const Quaternion& a, const Quaternion& b) {
  return Quaternion(a.w() - b.w(), a.x() - b.x(), a.y() - b.y(), a.z() - b.z());
}

Quaternion scale(const Quaternion& a, double s) {
  return Quaternion(a.w() * s, a.x() * s, a.y() * s, a.z() * s);
}

Quaternion conjugate(const Quaternion& a) { return Quaternion(a.w(), -a.x(), -a.y(), -a.z()); }

double norm(const Quaternion& a) {
  // hypot avoids overflow in the intermediate squares.
  return std::hypot(std::hypot(a.w(), a.x()), std::hypot(a.y(), a.z()));
}

double max_abs_difference(const Quaternion& a, const Quaternion& b) {
  double d = 0.0;
  for (std::size_t c = 0; c < 4; ++c) {
    d = std::max(d, std::abs(a[c] - b[c]));
  }
  return d;
}

std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.w() << ", " << q.x() << ", " << q.y() << ", " << q.z() << ')';
}

}  // namespace quatlin
