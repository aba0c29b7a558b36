#pragma once

#include <array>

#include "adj/kernels.hpp"

namespace adj::two_level {

// Column vector in C^2.
struct Vec2 {
  cplx x0{0.0, 0.0};
  cplx x1{0.0, 0.0};
};

// Row-major 2x2 complex matrix.
struct Mat2 {
  cplx a00{0.0, 0.0}, a01{0.0, 0.0};
  cplx a10{0.0, 0.0}, a11{0.0, 0.0};
};

inline Vec2 operator*(const Mat2& m, const Vec2& v) {
  return {m.a00 * v.x0 + m.a01 * v.x1, m.a10 * v.x0 + m.a11 * v.x1};
}

inline cplx dot(const Vec2& a, const Vec2& b) {
  return std::conj(a.x0) * b.x0 + std::conj(a.x1) * b.x1;
}

// |u><u|
inline Mat2 outer(const Vec2& u) {
  return {u.x0 * std::conj(u.x0), u.x0 * std::conj(u.x1),
          u.x1 * std::conj(u.x0), u.x1 * std::conj(u.x1)};
}

// Eigen-decomposition of a Hermitian 2x2 matrix, ascending eigenvalues,
// orthonormal eigenvectors.
struct Eigh2 {
  std::array<double, 2> values{};
  std::array<Vec2, 2> vectors{};
};

Eigh2 eigh(const Mat2& h);

// exp(-i * h * dt) for Hermitian h, via the Pauli decomposition
// h = m0 I + m . sigma.
Mat2 expm_hermitian(const Mat2& h, double dt);

}  // namespace adj::two_level
