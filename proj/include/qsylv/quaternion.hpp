#pragma once

#include <cmath>

namespace qsylv {

// Scalar w + x*i + y*j + z*k over double-precision reals,
// with i^2 = j^2 = k^2 = ijk = -1.
struct Quaternion {
  double w = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double w_, double x_, double y_, double z_)
      : w(w_), x(x_), y(y_), z(z_) {}
  constexpr explicit Quaternion(double real) : w(real) {}

  static constexpr Quaternion unit_i() { return {0.0, 1.0, 0.0, 0.0}; }
  static constexpr Quaternion unit_j() { return {0.0, 0.0, 1.0, 0.0}; }
  static constexpr Quaternion unit_k() { return {0.0, 0.0, 0.0, 1.0}; }

  constexpr Quaternion conj() const { return {w, -x, -y, -z}; }
  constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
  double norm() const { return std::sqrt(norm_sq()); }

  constexpr bool operator==(const Quaternion&) const = default;

  constexpr Quaternion& operator+=(const Quaternion& o) {
    w += o.w;
    x += o.x;
    y += o.y;
    z += o.z;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    w -= o.w;
    x -= o.x;
    y -= o.y;
    z -= o.z;
    return *this;
  }
};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) {
  a += b;
  return a;
}

constexpr Quaternion operator-(Quaternion a, const Quaternion& b) {
  a -= b;
  return a;
}

constexpr Quaternion operator-(const Quaternion& q) {
  return {-q.w, -q.x, -q.y, -q.z};
}

// Hamilton product; noncommutative, associative.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
          a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
          a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
          a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
}

constexpr Quaternion operator*(double s, const Quaternion& q) {
  return {s * q.w, s * q.x, s * q.y, s * q.z};
}

constexpr Quaternion operator*(const Quaternion& q, double s) { return s * q; }

// One of the three imaginary units; eta^2 = -1 as a quaternion.
enum class EtaUnit { i, j, k };

constexpr Quaternion to_quaternion(EtaUnit eta) {
  switch (eta) {
    case EtaUnit::i:
      return Quaternion::unit_i();
    case EtaUnit::j:
      return Quaternion::unit_j();
    case EtaUnit::k:
      return Quaternion::unit_k();
  }
  return {};
}

constexpr char to_char(EtaUnit eta) {
  switch (eta) {
    case EtaUnit::i:
      return 'i';
    case EtaUnit::j:
      return 'j';
    case EtaUnit::k:
      return 'k';
  }
  return '?';
}

// -eta * conj(q) * eta, the scalar building block of the eta-involution.
constexpr Quaternion eta_conj(const Quaternion& q, EtaUnit eta) {
  const Quaternion e = to_quaternion(eta);
  return -(e * q.conj() * e);
}

}  // namespace qsylv
