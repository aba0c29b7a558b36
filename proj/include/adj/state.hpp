#pragma once

#include <span>
#include <vector>

#include "adj/kernels.hpp"
#include "adj/oracle.hpp"

namespace adj {

inline constexpr double kNormTolerance = 1e-12;

// Normalized amplitude vector over the computational basis; index i is the
// integer value of the bit string. Immutable once built.
class StateVector {
 public:
  // Throws ValidationError if the norm is off by more than `tolerance`.
  explicit StateVector(std::vector<cplx> amplitudes, double tolerance = kNormTolerance);

  // Divides by the norm first; the result is flagged non-physical.
  static StateVector renormalized(std::vector<cplx> amplitudes);

  std::size_t dim() const { return amps_.size(); }
  std::span<const cplx> amplitudes() const { return amps_; }
  const cplx& operator[](std::size_t i) const { return amps_[i]; }
  bool physical() const { return physical_; }

  StateVector with_phase(cplx phase) const;

 private:
  StateVector() = default;

  std::vector<cplx> amps_;
  bool physical_ = true;
};

// Uniform superposition over N = 2^n basis states.
StateVector alpha_state(int n);

// mu|0> + nu/sqrt(N-1) * sum_{i>=1} |i>. The sum in the published formula
// names its summand |k>; it is read as sum_i |i>.
StateVector beta_original(const BooleanOracle& oracle, bool renormalize = false);

// mu/sqrt(N/2) on even indices, nu/sqrt(N/2) on odd indices.
StateVector beta_modified(const BooleanOracle& oracle, bool renormalize = false);

// <a|b>, conjugate-linear in `a`. Throws ValidationError on dim mismatch.
cplx overlap(const StateVector& a, const StateVector& b);

}  // namespace adj
