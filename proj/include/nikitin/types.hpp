#pragma once

#include <algorithm>
#include <complex>

namespace nikitin {

using Complex = std::complex<double>;

inline constexpr Complex kI{0.0, 1.0};

/// Dense 2x2 complex matrix, row-major.
struct Matrix2 {
  Complex m00{}, m01{}, m10{}, m11{};

  static constexpr Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }

  Complex trace() const { return m00 + m11; }
  Complex det() const { return m00 * m11 - m01 * m10; }
  Matrix2 adjoint() const {
    return {std::conj(m00), std::conj(m10), std::conj(m01), std::conj(m11)};
  }

  friend Matrix2 operator*(const Matrix2& a, const Matrix2& b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
  }
  friend Matrix2 operator*(Complex s, const Matrix2& a) {
    return {s * a.m00, s * a.m01, s * a.m10, s * a.m11};
  }
  friend Matrix2 operator-(const Matrix2& a, const Matrix2& b) {
    return {a.m00 - b.m00, a.m01 - b.m01, a.m10 - b.m10, a.m11 - b.m11};
  }

  /// Largest entry modulus.
  double max_abs() const;
};

/// Probability amplitudes (C1, C2) of the diabatic states |1>, |2> at time t.
struct AmplitudePair {
  Complex c1{};
  Complex c2{};
  double t = 0.0;

  double norm() const { return std::norm(c1) + std::norm(c2); }
};

/// Evolution matrix U(t, t0): C(t) = U(t, t0) C(t0).
struct PropagatorMatrix {
  Complex u11{}, u12{}, u21{}, u22{};
  double t0 = 0.0;
  double t = 0.0;

  Matrix2 matrix() const { return {u11, u12, u21, u22}; }
  static PropagatorMatrix from(const Matrix2& m, double t0, double t) {
    return {m.m00, m.m01, m.m10, m.m11, t0, t};
  }
  AmplitudePair apply(const AmplitudePair& init) const {
    return {u11 * init.c1 + u12 * init.c2, u21 * init.c1 + u22 * init.c2, t};
  }
};

inline double Matrix2::max_abs() const {
  double m = std::abs(m00);
  for (const Complex& v : {m01, m10, m11}) m = std::max(m, std::abs(v));
  return m;
}

}  // namespace nikitin
