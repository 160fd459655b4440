#pragma once

// Quaternions x0 + x1 i + x2 j + x3 k and quaternion matrices, embedded into
// complex matrices by x0 + x1 i + x2 j + x3 k -> [[x0 + i x1, x2 + i x3],
// [-x2 + i x3, x0 - i x1]].

#include <vector>

#include "unital/linalg.hpp"

namespace unital {

struct Quaternion {
  double x0 = 0.0, x1 = 0.0, x2 = 0.0, x3 = 0.0;

  static Quaternion real(double a) { return {a, 0, 0, 0}; }
  static Quaternion i(double a = 1.0) { return {0, a, 0, 0}; }
  static Quaternion j(double a = 1.0) { return {0, 0, a, 0}; }
  static Quaternion k(double a = 1.0) { return {0, 0, 0, a}; }

  Quaternion conj() const { return {x0, -x1, -x2, -x3}; }
  double norm() const { return std::sqrt(x0 * x0 + x1 * x1 + x2 * x2 + x3 * x3); }

  friend Quaternion operator+(const Quaternion& a, const Quaternion& b) {
    return {a.x0 + b.x0, a.x1 + b.x1, a.x2 + b.x2, a.x3 + b.x3};
  }
  friend Quaternion operator-(const Quaternion& a, const Quaternion& b) {
    return {a.x0 - b.x0, a.x1 - b.x1, a.x2 - b.x2, a.x3 - b.x3};
  }
  friend Quaternion operator*(double s, const Quaternion& a) {
    return {s * a.x0, s * a.x1, s * a.x2, s * a.x3};
  }
  friend Quaternion operator*(const Quaternion& a, const Quaternion& b) {
    return {a.x0 * b.x0 - a.x1 * b.x1 - a.x2 * b.x2 - a.x3 * b.x3,
            a.x0 * b.x1 + a.x1 * b.x0 + a.x2 * b.x3 - a.x3 * b.x2,
            a.x0 * b.x2 - a.x1 * b.x3 + a.x2 * b.x0 + a.x3 * b.x1,
            a.x0 * b.x3 + a.x1 * b.x2 - a.x2 * b.x1 + a.x3 * b.x0};
  }
};

struct QuaternionMatrix {
  int d = 0;
  std::vector<Quaternion> entries;  // row-major

  explicit QuaternionMatrix(int n = 0) : d(n), entries(std::size_t(n) * std::size_t(n)) {}

  Quaternion& operator()(int r, int c) { return entries[std::size_t(r * d + c)]; }
  const Quaternion& operator()(int r, int c) const { return entries[std::size_t(r * d + c)]; }

  /// Entry-wise quaternion conjugate followed by transposition.
  QuaternionMatrix adjoint() const {
    QuaternionMatrix out(d);
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) out(c, r) = (*this)(r, c).conj();
    return out;
  }

  friend QuaternionMatrix operator*(const QuaternionMatrix& a, const QuaternionMatrix& b) {
    if (a.d != b.d) throw DimensionError("quaternion matrix product: size mismatch");
    QuaternionMatrix out(a.d);
    for (int r = 0; r < a.d; ++r)
      for (int c = 0; c < a.d; ++c) {
        Quaternion s;
        for (int k = 0; k < a.d; ++k) s = s + a(r, k) * b(k, c);
        out(r, c) = s;
      }
    return out;
  }
};

inline CMatrix quaternion_embed(const Quaternion& q) {
  CMatrix m(2, 2);
  m << Complex(q.x0, q.x1), Complex(q.x2, q.x3), Complex(-q.x2, q.x3), Complex(q.x0, -q.x1);
  return m;
}

/// 2d x 2d embedding, the quaternion index being the second tensor factor.
inline CMatrix quatmat_embed(const QuaternionMatrix& a) {
  CMatrix m(2 * a.d, 2 * a.d);
  for (int r = 0; r < a.d; ++r)
    for (int c = 0; c < a.d; ++c) m.block(2 * r, 2 * c, 2, 2) = quaternion_embed(a(r, c));
  return m;
}

}  // namespace unital
