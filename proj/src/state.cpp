#include "adj/state.hpp"

#include <cmath>
#include <string>

#include "adj/errors.hpp"

namespace adj {

namespace {

StateVector build(std::vector<cplx> amps, const BooleanOracle& oracle, bool renormalize,
                  const char* which) {
  if (oracle.is_promise()) return StateVector(std::move(amps));
  if (!renormalize) {
    throw PromiseViolation(std::string(which) + ": oracle " + to_hex(oracle) +
                           " is neither constant nor balanced");
  }
  return StateVector::renormalized(std::move(amps));
}

}  // namespace

StateVector::StateVector(std::vector<cplx> amplitudes, double tolerance)
    : amps_(std::move(amplitudes)) {
  if (amps_.empty()) throw ValidationError("state vector must be nonempty");
  const double norm = std::sqrt(kernels::serial::norm_squared(amps_));
  if (!(std::abs(norm - 1.0) <= tolerance)) {
    throw ValidationError("state vector norm " + std::to_string(norm) +
                          " differs from 1 by more than tolerance");
  }
}

StateVector StateVector::renormalized(std::vector<cplx> amplitudes) {
  const double norm = std::sqrt(kernels::serial::norm_squared(amplitudes));
  if (!(norm > 0.0)) throw ValidationError("cannot renormalize a zero vector");
  for (auto& z : amplitudes) z /= norm;
  StateVector out;
  out.amps_ = std::move(amplitudes);
  out.physical_ = false;
  return out;
}

StateVector StateVector::with_phase(cplx phase) const {
  StateVector out = *this;
  for (auto& z : out.amps_) z *= phase;
  return out;
}

StateVector alpha_state(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw ValidationError("qubit count n=" + std::to_string(n) + " out of range");
  }
  const std::size_t N = std::size_t{1} << n;
  return StateVector(std::vector<cplx>(N, cplx{1.0 / std::sqrt(static_cast<double>(N)), 0.0}));
}

StateVector beta_original(const BooleanOracle& oracle, bool renormalize) {
  const auto [mu, nu] = mu_nu(oracle);
  const std::size_t N = oracle.size();
  std::vector<cplx> amps(N, cplx{nu / std::sqrt(static_cast<double>(N - 1)), 0.0});
  amps[0] = mu;
  return build(std::move(amps), oracle, renormalize, "beta_original");
}

StateVector beta_modified(const BooleanOracle& oracle, bool renormalize) {
  const auto [mu, nu] = mu_nu(oracle);
  const std::size_t N = oracle.size();
  const double half = std::sqrt(static_cast<double>(N / 2));
  std::vector<cplx> amps(N);
  for (std::size_t i = 0; i < N; ++i) amps[i] = (i % 2 == 0 ? mu : nu) / half;
  return build(std::move(amps), oracle, renormalize, "beta_modified");
}

cplx overlap(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw ValidationError("overlap: dimension mismatch " + std::to_string(a.dim()) +
                          " vs " + std::to_string(b.dim()));
  }
  return kernels::parallel::inner(a.amplitudes(), b.amplitudes());
}

}  // namespace adj
