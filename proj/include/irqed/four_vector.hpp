#pragma once

#include <array>
#include <cmath>
#include <ostream>
#include <stdexcept>

namespace irqed {

//! Minkowski four-vector with signature (+,-,-,-); natural units, c = 1.
struct FourVector {
  double t = 0.0;
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  constexpr FourVector() = default;
  constexpr FourVector(double t_, double x_, double y_, double z_)
      : t(t_), x(x_), y(y_), z(z_) {}

  double operator[](int mu) const {
    switch (mu) {
    case 0: return t;
    case 1: return x;
    case 2: return y;
    case 3: return z;
    default: throw std::out_of_range("FourVector index");
    }
  }
  double &operator[](int mu) {
    switch (mu) {
    case 0: return t;
    case 1: return x;
    case 2: return y;
    case 3: return z;
    default: throw std::out_of_range("FourVector index");
    }
  }

  friend constexpr FourVector operator+(const FourVector &a, const FourVector &b) {
    return {a.t + b.t, a.x + b.x, a.y + b.y, a.z + b.z};
  }
  friend constexpr FourVector operator-(const FourVector &a, const FourVector &b) {
    return {a.t - b.t, a.x - b.x, a.y - b.y, a.z - b.z};
  }
  friend constexpr FourVector operator*(double s, const FourVector &a) {
    return {s * a.t, s * a.x, s * a.y, s * a.z};
  }
  friend constexpr FourVector operator*(const FourVector &a, double s) { return s * a; }
  friend constexpr FourVector operator/(const FourVector &a, double s) {
    return {a.t / s, a.x / s, a.y / s, a.z / s};
  }
  constexpr FourVector operator-() const { return {-t, -x, -y, -z}; }

  friend std::ostream &operator<<(std::ostream &os, const FourVector &v) {
    return os << "(" << v.t << ", " << v.x << ", " << v.y << ", " << v.z << ")";
  }
};

//! a.b with signature (+,-,-,-).
constexpr double mdot(const FourVector &a, const FourVector &b) {
  return a.t * b.t - a.x * b.x - a.y * b.y - a.z * b.z;
}

inline double spatial_norm(const FourVector &a) {
  return std::sqrt(a.x * a.x + a.y * a.y + a.z * a.z);
}

inline double max_abs_component(const FourVector &a) {
  return std::max(std::max(std::abs(a.t), std::abs(a.x)),
                  std::max(std::abs(a.y), std::abs(a.z)));
}

//! Real 4x4 matrix acting on FourVector components; used for Lorentz maps.
struct Matrix4 {
  std::array<std::array<double, 4>, 4> m{};

  static Matrix4 identity() {
    Matrix4 r;
    for (int i = 0; i < 4; ++i)
      r.m[i][i] = 1.0;
    return r;
  }

  FourVector operator*(const FourVector &v) const {
    FourVector out;
    for (int i = 0; i < 4; ++i) {
      double s = 0.0;
      for (int j = 0; j < 4; ++j)
        s += m[i][j] * v[j];
      out[i] = s;
    }
    return out;
  }

  Matrix4 operator*(const Matrix4 &o) const {
    Matrix4 r;
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) {
        double s = 0.0;
        for (int k = 0; k < 4; ++k)
          s += m[i][k] * o.m[k][j];
        r.m[i][j] = s;
      }
    return r;
  }
};

//! Pure boost with rapidity alpha along the unit spatial direction (nx,ny,nz).
Matrix4 boost_matrix(double alpha, double nx, double ny, double nz);

inline Matrix4 boost_z(double alpha) { return boost_matrix(alpha, 0, 0, 1); }

//! Max |Lambda^T eta Lambda - eta|; zero for exact Lorentz maps.
double lorentz_defect(const Matrix4 &L);

} // namespace irqed
