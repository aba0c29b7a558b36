#pragma once

#include <Eigen/Dense>
#include <span>
#include <vector>

#include "adj/state.hpp"
#include "adj/two_level.hpp"

namespace adj {

// Largest dimension for dense materialization and eigensolves.
inline constexpr std::size_t kMaxDenseDim = 4096;

// H(s) = (1-s)(I - |alpha><alpha|) + s(I - |beta><beta|).
//
// The nontrivial dynamics lives in span{alpha, beta}. Inside that plane we
// use the orthonormal basis {alpha, beta_perp} with
//   beta_perp = (beta - <alpha|beta> alpha) / sqrt(1 - c^2),
// so beta has coordinates (<alpha|beta>, sqrt(1 - c^2)). When c == 1 the
// plane collapses to a line; beta_perp is then the zero vector and every
// 2x2 formula below still holds with the second coordinate zero.
class ProjectorInterpolation {
 public:
  ProjectorInterpolation(StateVector alpha, StateVector beta);

  const StateVector& alpha() const { return alpha_; }
  const StateVector& beta() const { return beta_; }
  std::span<const cplx> beta_perp() const { return beta_perp_; }
  std::size_t dim() const { return alpha_.dim(); }

  // |<alpha|beta>|
  double c() const { return c_; }
  cplx alpha_beta() const { return alpha_beta_; }
  // sqrt(1 - c^2), the beta_perp coordinate of beta
  double perp_weight() const { return perp_weight_; }
  bool degenerate() const { return perp_weight_ == 0.0; }

  // Coordinates of beta in the {alpha, beta_perp} basis.
  two_level::Vec2 beta_coords() const { return {alpha_beta_, perp_weight_}; }
  // H(s) restricted to the plane.
  two_level::Mat2 effective(double s) const;
  // dH/ds = |alpha><alpha| - |beta><beta| restricted to the plane.
  two_level::Mat2 effective_derivative() const;

 private:
  StateVector alpha_;
  StateVector beta_;
  std::vector<cplx> beta_perp_;
  cplx alpha_beta_;
  double c_ = 0.0;
  double perp_weight_ = 0.0;
};

ProjectorInterpolation original_interpolation(const BooleanOracle& oracle);
ProjectorInterpolation modified_interpolation(const BooleanOracle& oracle);

struct SpectrumPoint {
  double s = 0.0;
  double e0 = 0.0;
  double e1 = 0.0;
  double gap = 0.0;
};

// H(s)|psi> in O(N) without forming the matrix.
std::vector<cplx> apply(const ProjectorInterpolation& h, double s, std::span<const cplx> psi);

// Dense N x N matrix, for cross-checks only (N <= kMaxDenseDim).
Eigen::MatrixXcd dense(const ProjectorInterpolation& h, double s);

// Closed form for the two coupled levels: e0,1 = (1 -/+ g)/2 with
// g(s) = sqrt(1 - 4 s (1-s) (1 - c^2)).
SpectrumPoint gap_analytic(const ProjectorInterpolation& h, double s);

// Two smallest eigenvalues of dense(h, s).
SpectrumPoint gap_numeric(const ProjectorInterpolation& h, double s);

// All eigenvalues of dense(h, s), ascending.
Eigen::VectorXd dense_spectrum(const ProjectorInterpolation& h, double s);

// min_s g(s). The closed form is minimized at s = 1/2 where g = c.
double g_min(const ProjectorInterpolation& h);

// Analytic gap on `points` uniform s values; returns the minimizing point.
SpectrumPoint gap_grid_min(const ProjectorInterpolation& h, int points = 1001);

// |<E1,s| dH/ds |E0,s>| between the two coupled levels. Requires 0 < c < 1.
double coupling_element(const ProjectorInterpolation& h, double s);

struct DmaxEstimate {
  double value = 0.0;   // (1/T) max_s coupling_element(s)
  double bound = 0.0;   // 2/T
  double argmax_s = 0.0;
};

// D_max under s = t/T, maximized over `points` uniform s values.
DmaxEstimate dmax_linear(const ProjectorInterpolation& h, double T, int points = 1001);

// Spectral norm of H_T - H_0 = |alpha><alpha| - |beta><beta|.
double driver_norm(const ProjectorInterpolation& h);

}  // namespace adj
