#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "adj/hamiltonian.hpp"
#include "adj/schedule.hpp"

namespace adj {

enum class Engine { FullSpace, Effective2D };

std::string_view to_string(Engine engine);

// Cap on the qubit count accepted by the full-space engine.
inline constexpr int kMaxFullSpaceQubits = 12;

inline constexpr int kDefaultStepsPerUnitTime = 200;

// Step count for a run of length T: steps_per_unit * T rounded up, at least 16.
std::size_t default_steps(double total_time, int steps_per_unit = kDefaultStepsPerUnitTime);

struct TraceSample {
  double t = 0.0;
  double s = 0.0;
  // |<E0,s|psi(t)>|^2 against the instantaneous ground state
  double fidelity = 0.0;
};

struct EvolutionResult {
  StateVector final_state;
  // |<beta|psi(T)>|^2
  double fidelity = 0.0;
  double min_gap_seen = 0.0;
  std::vector<TraceSample> trace;
  Engine engine = Engine::FullSpace;
  double total_time = 0.0;
  std::size_t steps = 0;
};

// Both engines solve i d|psi>/dt = H(s(t))|psi> from |psi(0)> = |alpha> with
// a piecewise-constant Hamiltonian evaluated at each step midpoint and the
// exact propagator for that step. Preconditions: dt = T/steps <= 0.1 and
// alpha is the uniform superposition. `trace_points` samples (including both
// endpoints) are recorded when trace_points >= 2.

// Works on full N-vectors. With A = (1-s)|alpha><alpha| + s|beta><beta| = W W^+
// and W = [sqrt(1-s) alpha, sqrt(s) beta]:
//   exp(-i H dt) = e^{-i dt} (I + W f(W^+ W) W^+),  f(x) = (e^{i x dt} - 1) / x.
EvolutionResult evolve_full(const ProjectorInterpolation& h, const Schedule& schedule,
                            std::size_t steps, std::size_t trace_points = 0);

// Works on the two coordinates in the {alpha, beta_perp} basis with a
// Pauli-form 2x2 exponential per step; O(1) per step regardless of N.
EvolutionResult evolve_effective(const ProjectorInterpolation& h, const Schedule& schedule,
                                 std::size_t steps, std::size_t trace_points = 0);

EvolutionResult evolve(Engine engine, const ProjectorInterpolation& h, const Schedule& schedule,
                       std::size_t steps, std::size_t trace_points = 0);

struct TimeSearchOptions {
  double t_max = 100.0;
  // Coarse grid spacing for the envelope scan.
  double grid_step = 0.25;
  int steps_per_unit = kDefaultStepsPerUnitTime;
  Engine engine = Engine::Effective2D;
  // Only used for LocalAdiabatic: the schedule shape is built once with this
  // epsilon and stretched to each candidate T.
  double epsilon = 0.1;
};

// Smallest T such that fidelity(T') >= target for every grid T' in [T, t_max].
// Fidelity oscillates in T, so the grid is scanned from t_max downward for
// the last failing point and the crossing above it is bisected to `tol`.
// Throws NumericalError if fidelity(t_max) < target.
double minimal_time(const ProjectorInterpolation& h, double target_fidelity, ScheduleKind kind,
                    double tol, const TimeSearchOptions& options = {});

}  // namespace adj
