#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace refrec {

template <typename T>
struct Vec2T {
  T x{}, y{};

  Vec2T() = default;
  Vec2T(T x_, T y_) : x(x_), y(y_) {}

  Vec2T operator+(const Vec2T& o) const { return {x + o.x, y + o.y}; }
  Vec2T operator-(const Vec2T& o) const { return {x - o.x, y - o.y}; }
  Vec2T operator*(const T& s) const { return {x * s, y * s}; }
  T& operator[](int i) { return i == 0 ? x : y; }
  const T& operator[](int i) const { return i == 0 ? x : y; }
};

template <typename T>
struct Vec3T {
  T x{}, y{}, z{};

  Vec3T() = default;
  Vec3T(T x_, T y_, T z_) : x(x_), y(y_), z(z_) {}

  Vec3T operator+(const Vec3T& o) const { return {x + o.x, y + o.y, z + o.z}; }
  Vec3T operator-(const Vec3T& o) const { return {x - o.x, y - o.y, z - o.z}; }
  Vec3T operator-() const { return {-x, -y, -z}; }
  Vec3T operator*(const T& s) const { return {x * s, y * s, z * s}; }
  Vec3T operator/(const T& s) const { return {x / s, y / s, z / s}; }
  Vec3T& operator+=(const Vec3T& o) {
    x = x + o.x; y = y + o.y; z = z + o.z;
    return *this;
  }
  Vec3T& operator-=(const Vec3T& o) {
    x = x - o.x; y = y - o.y; z = z - o.z;
    return *this;
  }
  Vec3T& operator*=(const T& s) {
    x = x * s; y = y * s; z = z * s;
    return *this;
  }
  T& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }
  const T& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

template <typename T>
Vec3T<T> operator*(const T& s, const Vec3T<T>& v) { return v * s; }
inline Vec3T<double> operator*(double s, const Vec3T<double>& v) { return v * s; }

template <typename T>
T dot(const Vec3T<T>& a, const Vec3T<T>& b) {
  return a.x * b.x + a.y * b.y + a.z * b.z;
}

template <typename T>
T dot(const Vec2T<T>& a, const Vec2T<T>& b) {
  return a.x * b.x + a.y * b.y;
}

template <typename T>
Vec3T<T> cross(const Vec3T<T>& a, const Vec3T<T>& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

template <typename T>
T norm2(const Vec3T<T>& v) { return dot(v, v); }

template <typename T>
T norm(const Vec3T<T>& v) {
  using std::sqrt;
  return sqrt(dot(v, v));
}

template <typename T>
T norm(const Vec2T<T>& v) {
  using std::sqrt;
  return sqrt(dot(v, v));
}

template <typename T>
Vec3T<T> normalized(const Vec3T<T>& v) {
  T n = norm(v);
  return {v.x / n, v.y / n, v.z / n};
}

using Vec2 = Vec2T<double>;
using Vec3 = Vec3T<double>;

// Row-major 3x3 matrix, double only; used for camera rotations.
struct Mat3 {
  std::array<double, 9> m{1, 0, 0, 0, 1, 0, 0, 0, 1};

  static Mat3 identity() { return {}; }

  double operator()(int r, int c) const { return m[r * 3 + c]; }
  double& operator()(int r, int c) { return m[r * 3 + c]; }

  Vec3 operator*(const Vec3& v) const {
    return {m[0] * v.x + m[1] * v.y + m[2] * v.z,
            m[3] * v.x + m[4] * v.y + m[5] * v.z,
            m[6] * v.x + m[7] * v.y + m[8] * v.z};
  }
  Mat3 operator*(const Mat3& o) const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        double s = 0;
        for (int k = 0; k < 3; ++k) s += (*this)(i, k) * o(k, j);
        r(i, j) = s;
      }
    return r;
  }
  Mat3 transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r(i, j) = (*this)(j, i);
    return r;
  }
  static Mat3 from_rows(const Vec3& r0, const Vec3& r1, const Vec3& r2) {
    Mat3 r;
    r.m = {r0.x, r0.y, r0.z, r1.x, r1.y, r1.z, r2.x, r2.y, r2.z};
    return r;
  }
};

}  // namespace refrec
