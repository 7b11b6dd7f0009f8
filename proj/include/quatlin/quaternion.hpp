#pragma once

// Quaternion value type w + xi + yj + zk with the Hamilton product.
//
// Components are always ordered (w, x, y, z). Construction rejects
// non-finite components, so every Quaternion in the program is finite.

#include <array>
#include <cmath>
#include <cstddef>
#include <iosfwd>

namespace quatlin {

using Vec4 = std::array<double, 4>;
using Vec3 = std::array<double, 3>;

class Quaternion {
 public:
  constexpr Quaternion() = default;
  Quaternion(double w, double x, double y, double z);

  static Quaternion from_vector(const Vec4& v);
  static Quaternion real(double w) { return Quaternion(w, 0.0, 0.0, 0.0); }

  // e_0 = 1, e_1 = i, e_2 = j, e_3 = k.
  static Quaternion basis(std::size_t index);
  static Quaternion one() { return basis(0); }
  static Quaternion i() { return basis(1); }
  static Quaternion j() { return basis(2); }
  static Quaternion k() { return basis(3); }

  constexpr double w() const { return w_; }
  constexpr double x() const { return x_; }
  constexpr double y() const { return y_; }
  constexpr double z() const { return z_; }

  constexpr Vec4 as_vector() const { return {w_, x_, y_, z_}; }
  double operator[](std::size_t index) const;

  bool operator==(const Quaternion&) const = default;

 private:
  double w_ = 0.0;
  double x_ = 0.0;
  double y_ = 0.0;
  double z_ = 0.0;
};

// A quaternion whose scalar part is identically zero (the "vector" part).
class PureQuaternion {
 public:
  constexpr PureQuaternion() = default;
  PureQuaternion(double x, double y, double z);

  static PureQuaternion from_vector(const Vec3& v);

  constexpr double x() const { return x_; }
  constexpr double y() const { return y_; }
  constexpr double z() const { return z_; }

  constexpr Vec3 as_vector() const { return {x_, y_, z_}; }
  Quaternion as_quaternion() const { return Quaternion(0.0, x_, y_, z_); }

  bool operator==(const PureQuaternion&) const = default;

 private:
  double x_ = 0.0;
  double y_ = 0.0;
  double z_ = 0.0;
};

Quaternion multiply(const Quaternion& a, const Quaternion& b);
Quaternion add(const Quaternion& a, const Quaternion& b);
Quaternion subtract(const Quaternion& a, const Quaternion& b);
Quaternion scale(const Quaternion& a, double s);
Quaternion conjugate(const Quaternion& a);
double norm(const Quaternion& a);

inline Vec4 as_vector(const Quaternion& a) { return a.as_vector(); }
inline Quaternion from_vector(const Vec4& v) { return Quaternion::from_vector(v); }

inline Quaternion operator*(const Quaternion& a, const Quaternion& b) { return multiply(a, b); }
inline Quaternion operator+(const Quaternion& a, const Quaternion& b) { return add(a, b); }
inline Quaternion operator-(const Quaternion& a, const Quaternion& b) { return subtract(a, b); }
inline Quaternion operator-(const Quaternion& a) { return scale(a, -1.0); }
inline Quaternion operator*(const Quaternion& a, double s) { return scale(a, s); }
inline Quaternion operator*(double s, const Quaternion& a) { return scale(a, s); }
inline Quaternion& operator+=(Quaternion& a, const Quaternion& b) { return a = add(a, b); }

// Max-abs componentwise distance.
double max_abs_difference(const Quaternion& a, const Quaternion& b);

std::ostream& operator<<(std::ostream& os, const Quaternion& q);

}  // namespace quatlin
