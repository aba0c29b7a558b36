#include "adj/two_level.hpp"

#include <cmath>

namespace adj::two_level {

Eigh2 eigh(const Mat2& h) {
  const double p = h.a00.real();
  const double r = h.a11.real();
  const cplx q = 0.5 * (h.a01 + std::conj(h.a10));
  const double mean = 0.5 * (p + r);
  const double half_diff = 0.5 * (p - r);
  const double radius = std::hypot(half_diff, std::abs(q));

  Eigh2 out;
  out.values = {mean - radius, mean + radius};
  if (std::abs(q) <= 1e-300) {
    // Already diagonal.
    if (p <= r) {
      out.vectors = {Vec2{1.0, 0.0}, Vec2{0.0, 1.0}};
    } else {
      out.vectors = {Vec2{0.0, 1.0}, Vec2{1.0, 0.0}};
    }
    return out;
  }
  for (int k = 0; k < 2; ++k) {
    const double lambda = out.values[k];
    // Two candidate null vectors of (h - lambda); take the better conditioned.
    const Vec2 first{q, lambda - p};
    const Vec2 second{lambda - r, std::conj(q)};
    const double n1 = std::sqrt(std::norm(first.x0) + std::norm(first.x1));
    const double n2 = std::sqrt(std::norm(second.x0) + std::norm(second.x1));
    out.vectors[k] = n1 >= n2 ? Vec2{first.x0 / n1, first.x1 / n1}
                              : Vec2{second.x0 / n2, second.x1 / n2};
  }
  return out;
}

Mat2 expm_hermitian(const Mat2& h, double dt) {
  const double m0 = 0.5 * (h.a00.real() + h.a11.real());
  const double mz = 0.5 * (h.a00.real() - h.a11.real());
  const cplx off = 0.5 * (h.a01 + std::conj(h.a10));
  const double mx = off.real();
  const double my = -off.imag();
  const double m = std::sqrt(mx * mx + my * my + mz * mz);
  const double theta = m * dt;
  const double cos_t = std::cos(theta);
  // sin(theta)/m, finite as m -> 0
  const double sinc = m > 1e-300 ? std::sin(theta) / m : dt;
  const cplx i{0.0, 1.0};
  const cplx global = std::exp(-i * (m0 * dt));
  // cos(theta) I - i sin(theta) (n . sigma)
  Mat2 u{cos_t - i * sinc * mz, -i * sinc * cplx{mx, -my},
         -i * sinc * cplx{mx, my}, cos_t + i * sinc * mz};
  u.a00 *= global;
  u.a01 *= global;
  u.a10 *= global;
  u.a11 *= global;
  return u;
}

}  // namespace adj::two_level
