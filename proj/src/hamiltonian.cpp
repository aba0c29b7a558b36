#include "adj/hamiltonian.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "adj/errors.hpp"
#include "adj/kernels.hpp"

namespace adj {

namespace {

void check_s(double s) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw ValidationError("interpolation parameter s=" + std::to_string(s) +
                          " outside [0, 1]");
  }
}

void check_dense(const ProjectorInterpolation& h) {
  if (h.dim() > kMaxDenseDim) {
    throw ValidationError("dense routines are capped at N <= " +
                          std::to_string(kMaxDenseDim) + ", got N=" +
                          std::to_string(h.dim()));
  }
}

double closed_form_gap(double c, double s) {
  const double radicand = 1.0 - 4.0 * s * (1.0 - s) * (1.0 - c * c);
  return std::sqrt(std::max(0.0, radicand));
}

}  // namespace

ProjectorInterpolation::ProjectorInterpolation(StateVector alpha, StateVector beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_.dim() != beta_.dim()) {
    throw ValidationError("alpha and beta dimensions differ");
  }
  alpha_beta_ = overlap(alpha_, beta_);
  c_ = std::min(1.0, std::abs(alpha_beta_));

  // Residual of beta after removing its alpha component. Its norm is taken
  // directly because sqrt(1 - c^2) loses half the digits near c = 1.
  const auto a = alpha_.amplitudes();
  const auto b = beta_.amplitudes();
  beta_perp_.resize(dim());
  for (std::size_t i = 0; i < dim(); ++i) beta_perp_[i] = b[i] - alpha_beta_ * a[i];
  perp_weight_ = std::sqrt(kernels::parallel::norm_squared(beta_perp_));
  // Treat numerically parallel states as exactly parallel.
  if (perp_weight_ < 1e-12) {
    perp_weight_ = 0.0;
    c_ = 1.0;
    std::fill(beta_perp_.begin(), beta_perp_.end(), cplx{0.0, 0.0});
  } else {
    for (auto& v : beta_perp_) v /= perp_weight_;
  }
}

two_level::Mat2 ProjectorInterpolation::effective(double s) const {
  const two_level::Mat2 pb = two_level::outer(beta_coords());
  return {1.0 - (1.0 - s) - s * pb.a00, -s * pb.a01, -s * pb.a10, 1.0 - s * pb.a11};
}

two_level::Mat2 ProjectorInterpolation::effective_derivative() const {
  const two_level::Mat2 pb = two_level::outer(beta_coords());
  return {1.0 - pb.a00, -pb.a01, -pb.a10, -pb.a11};
}

ProjectorInterpolation original_interpolation(const BooleanOracle& oracle) {
  return {alpha_state(oracle.qubits()), beta_original(oracle)};
}

ProjectorInterpolation modified_interpolation(const BooleanOracle& oracle) {
  return {alpha_state(oracle.qubits()), beta_modified(oracle)};
}

std::vector<cplx> apply(const ProjectorInterpolation& h, double s, std::span<const cplx> psi) {
  check_s(s);
  if (psi.size() != h.dim()) {
    throw ValidationError("apply: state dimension " + std::to_string(psi.size()) +
                          " does not match Hamiltonian dimension " + std::to_string(h.dim()));
  }
  const auto alpha = h.alpha().amplitudes();
  const auto beta = h.beta().amplitudes();
  const cplx on_alpha = kernels::parallel::inner(alpha, psi);
  const cplx on_beta = kernels::parallel::inner(beta, psi);
  std::vector<cplx> out(psi.begin(), psi.end());
  kernels::parallel::rank2_update(out, 1.0, -(1.0 - s) * on_alpha, alpha, -s * on_beta, beta);
  return out;
}

Eigen::MatrixXcd dense(const ProjectorInterpolation& h, double s) {
  check_s(s);
  check_dense(h);
  const auto N = static_cast<Eigen::Index>(h.dim());
  const Eigen::Map<const Eigen::VectorXcd> alpha(h.alpha().amplitudes().data(), N);
  const Eigen::Map<const Eigen::VectorXcd> beta(h.beta().amplitudes().data(), N);
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(N, N);
  m.noalias() -= (1.0 - s) * alpha * alpha.adjoint();
  m.noalias() -= s * beta * beta.adjoint();
  return m;
}

Eigen::VectorXd dense_spectrum(const ProjectorInterpolation& h, double s) {
  const Eigen::MatrixXcd m = dense(h, s);
  // Every construction in this library is real; the real solver is several
  // times faster and sees the same matrix.
  if (m.imag().cwiseAbs().maxCoeff() == 0.0) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m.real(), Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
      throw NumericalError("dense eigensolver did not converge at s=" + std::to_string(s));
    }
    return solver.eigenvalues();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("dense eigensolver did not converge at s=" + std::to_string(s));
  }
  return solver.eigenvalues();
}

SpectrumPoint gap_analytic(const ProjectorInterpolation& h, double s) {
  check_s(s);
  const double g = closed_form_gap(h.c(), s);
  return {s, 0.5 * (1.0 - g), 0.5 * (1.0 + g), g};
}

SpectrumPoint gap_numeric(const ProjectorInterpolation& h, double s) {
  const Eigen::VectorXd values = dense_spectrum(h, s);
  if (values.size() < 2) throw ValidationError("gap needs N >= 2");
  return {s, values[0], values[1], values[1] - values[0]};
}

double g_min(const ProjectorInterpolation& h) { return gap_analytic(h, 0.5).gap; }

SpectrumPoint gap_grid_min(const ProjectorInterpolation& h, int points) {
  if (points < 2) throw ValidationError("gap grid needs at least 2 points");
  SpectrumPoint best = gap_analytic(h, 0.0);
  for (int k = 1; k < points; ++k) {
    const auto p = gap_analytic(h, static_cast<double>(k) / (points - 1));
    if (p.gap < best.gap) best = p;
  }
  return best;
}

double coupling_element(const ProjectorInterpolation& h, double s) {
  check_s(s);
  if (h.degenerate() || h.c() < 1e-12) {
    throw ValidationError("coupling element undefined for c=" + std::to_string(h.c()) +
                          " (coupled levels degenerate)");
  }
  const auto eig = two_level::eigh(h.effective(s));
  const auto d = h.effective_derivative();
  return std::abs(two_level::dot(eig.vectors[1], d * eig.vectors[0]));
}

DmaxEstimate dmax_linear(const ProjectorInterpolation& h, double T, int points) {
  if (!(T > 0.0)) throw ValidationError("total time T must be positive");
  if (points < 2) throw ValidationError("D_max grid needs at least 2 points");
  DmaxEstimate out;
  out.bound = 2.0 / T;
  // dH/ds vanishes identically when alpha and beta coincide.
  if (h.degenerate()) return out;
  double best = -1.0;
  for (int k = 0; k < points; ++k) {
    const double s = static_cast<double>(k) / (points - 1);
    const double v = coupling_element(h, s);
    if (v > best) {
      best = v;
      out.argmax_s = s;
    }
  }
  out.value = best / T;
  return out;
}

double driver_norm(const ProjectorInterpolation& h) {
  if (h.degenerate()) return 0.0;
  const auto eig = two_level::eigh(h.effective_derivative());
  return std::max(std::abs(eig.values[0]), std::abs(eig.values[1]));
}

}  // namespace adj
