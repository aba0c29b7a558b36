#include "adj/evolution.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "adj/errors.hpp"
#include "adj/kernels.hpp"

namespace adj {

namespace {

constexpr double kMaxStep = 0.1;
constexpr double kNormDrift = 1e-9;
constexpr cplx kI{0.0, 1.0};

void check_preconditions(const ProjectorInterpolation& h, const Schedule& schedule,
                         std::size_t steps) {
  if (steps == 0) throw ValidationError("step count must be positive");
  const double dt = schedule.total_time() / static_cast<double>(steps);
  if (dt > kMaxStep) {
    throw ValidationError("step size dt=" + std::to_string(dt) + " exceeds " +
                          std::to_string(kMaxStep) + "; use at least " +
                          std::to_string(static_cast<std::size_t>(
                              std::ceil(schedule.total_time() / kMaxStep))) +
                          " steps");
  }
  const double expected = 1.0 / std::sqrt(static_cast<double>(h.dim()));
  for (const auto& z : h.alpha().amplitudes()) {
    if (std::abs(z - expected) > 1e-12) {
      throw ValidationError("initial state alpha must be the uniform superposition");
    }
  }
}

// Steps at which a trace sample is taken: round(j * steps / (points - 1)).
std::vector<std::size_t> trace_steps(std::size_t steps, std::size_t points) {
  std::vector<std::size_t> out;
  if (points < 2) return out;
  out.reserve(points);
  for (std::size_t j = 0; j < points; ++j) {
    out.push_back(static_cast<std::size_t>(
        std::llround(static_cast<double>(j) * static_cast<double>(steps) /
                     static_cast<double>(points - 1))));
  }
  return out;
}

// (e^{i x dt} - 1) / x, with the x -> 0 limit.
cplx phase_ratio(double x, double dt) {
  const double theta = x * dt;
  if (std::abs(theta) < 1e-6) {
    return kI * dt * (1.0 + kI * theta / 2.0 - theta * theta / 6.0);
  }
  return (std::exp(kI * theta) - 1.0) / x;
}

two_level::Vec2 ground_coords(const ProjectorInterpolation& h, double s) {
  return two_level::eigh(h.effective(s)).vectors[0];
}

struct Stepper {
  const ProjectorInterpolation& h;
  const Schedule& schedule;
  std::size_t steps;
  double dt;
  double min_gap = 1.0;

  double s_mid(std::size_t k) {
    const double s = schedule.s_at((static_cast<double>(k) + 0.5) * dt);
    min_gap = std::min(min_gap, gap_analytic(h, s).gap);
    return s;
  }
  double t_at(std::size_t k) const {
    return k == steps ? schedule.total_time() : static_cast<double>(k) * dt;
  }
};

}  // namespace

std::string_view to_string(Engine engine) {
  return engine == Engine::FullSpace ? "full" : "effective";
}

std::size_t default_steps(double total_time, int steps_per_unit) {
  if (steps_per_unit <= 0) throw ValidationError("steps per unit time must be positive");
  const double raw = std::ceil(total_time * steps_per_unit);
  return std::max<std::size_t>(16, static_cast<std::size_t>(raw));
}

EvolutionResult evolve_full(const ProjectorInterpolation& h, const Schedule& schedule,
                            std::size_t steps, std::size_t trace_points) {
  check_preconditions(h, schedule, steps);
  namespace par = kernels::parallel;
  const auto alpha = h.alpha().amplitudes();
  const auto beta = h.beta().amplitudes();
  const auto perp = h.beta_perp();
  const cplx ab = h.alpha_beta();

  Stepper stepper{h, schedule, steps, schedule.total_time() / static_cast<double>(steps)};
  std::vector<cplx> psi(alpha.begin(), alpha.end());
  std::vector<TraceSample> trace;
  const auto sample_at = trace_steps(steps, trace_points);
  std::size_t next_sample = 0;

  const auto record = [&](std::size_t k) {
    while (next_sample < sample_at.size() && sample_at[next_sample] == k) {
      const double t = stepper.t_at(k);
      const double s = schedule.s_at(t);
      const double norm = std::sqrt(par::norm_squared(psi));
      if (std::abs(norm - 1.0) > kNormDrift) {
        throw NumericalError("norm drifted to " + std::to_string(norm) + " at t=" +
                             std::to_string(t));
      }
      const auto u = ground_coords(h, s);
      const cplx amp = std::conj(u.x0) * par::inner(alpha, psi) +
                       std::conj(u.x1) * par::inner(perp, psi);
      trace.push_back({t, s, std::norm(amp)});
      ++next_sample;
    }
  };

  record(0);
  for (std::size_t k = 0; k < steps; ++k) {
    const double s = stepper.s_mid(k);
    const double wa = std::sqrt(1.0 - s);
    const double wb = std::sqrt(s);
    // Gram matrix W^+ W of the (non-orthogonal) columns of W.
    const two_level::Mat2 gram{wa * wa, wa * wb * ab, wa * wb * std::conj(ab), wb * wb};
    const auto eig = two_level::eigh(gram);
    const two_level::Vec2 w{wa * par::inner(alpha, psi), wb * par::inner(beta, psi)};
    two_level::Vec2 y;
    for (int j = 0; j < 2; ++j) {
      const auto& q = eig.vectors[j];
      const cplx coef = phase_ratio(eig.values[j], stepper.dt) * two_level::dot(q, w);
      y.x0 += coef * q.x0;
      y.x1 += coef * q.x1;
    }
    par::rank2_update(psi, std::exp(-kI * stepper.dt), wa * y.x0, alpha, wb * y.x1, beta);
    record(k + 1);
  }

  const double fidelity = std::norm(par::inner(beta, psi));
  StateVector final_state(std::move(psi), kNormDrift);
  return {std::move(final_state), fidelity, stepper.min_gap, std::move(trace),
          Engine::FullSpace, schedule.total_time(), steps};
}

EvolutionResult evolve_effective(const ProjectorInterpolation& h, const Schedule& schedule,
                                 std::size_t steps, std::size_t trace_points) {
  check_preconditions(h, schedule, steps);
  Stepper stepper{h, schedule, steps, schedule.total_time() / static_cast<double>(steps)};
  two_level::Vec2 x{1.0, 0.0};
  std::vector<TraceSample> trace;
  const auto sample_at = trace_steps(steps, trace_points);
  std::size_t next_sample = 0;

  const auto record = [&](std::size_t k) {
    while (next_sample < sample_at.size() && sample_at[next_sample] == k) {
      const double t = stepper.t_at(k);
      const double s = schedule.s_at(t);
      const double norm = std::sqrt(std::norm(x.x0) + std::norm(x.x1));
      if (std::abs(norm - 1.0) > kNormDrift) {
        throw NumericalError("norm drifted to " + std::to_string(norm) + " at t=" +
                             std::to_string(t));
      }
      trace.push_back({t, s, std::norm(two_level::dot(ground_coords(h, s), x))});
      ++next_sample;
    }
  };

  record(0);
  for (std::size_t k = 0; k < steps; ++k) {
    x = two_level::expm_hermitian(h.effective(stepper.s_mid(k)), stepper.dt) * x;
    record(k + 1);
  }

  const double fidelity = std::norm(two_level::dot(h.beta_coords(), x));
  const auto alpha = h.alpha().amplitudes();
  const auto perp = h.beta_perp();
  std::vector<cplx> psi(h.dim());
  for (std::size_t i = 0; i < psi.size(); ++i) psi[i] = x.x0 * alpha[i] + x.x1 * perp[i];
  StateVector final_state(std::move(psi), kNormDrift);
  return {std::move(final_state), fidelity, stepper.min_gap, std::move(trace),
          Engine::Effective2D, schedule.total_time(), steps};
}

EvolutionResult evolve(Engine engine, const ProjectorInterpolation& h, const Schedule& schedule,
                       std::size_t steps, std::size_t trace_points) {
  if (engine == Engine::FullSpace) {
    if (h.dim() > (std::size_t{1} << kMaxFullSpaceQubits)) {
      throw ValidationError("full-space engine is restricted to n <= " +
                            std::to_string(kMaxFullSpaceQubits));
    }
    return evolve_full(h, schedule, steps, trace_points);
  }
  return evolve_effective(h, schedule, steps, trace_points);
}

double minimal_time(const ProjectorInterpolation& h, double target_fidelity, ScheduleKind kind,
                    double tol, const TimeSearchOptions& options) {
  if (!(target_fidelity >= 0.5 && target_fidelity < 1.0)) {
    throw ValidationError("target fidelity must lie in [0.5, 1), got " +
                          std::to_string(target_fidelity));
  }
  if (!(tol > 0.0) || !(options.grid_step > 0.0) || !(options.t_max > options.grid_step)) {
    throw ValidationError("time search needs tol > 0 and 0 < grid_step < t_max");
  }

  std::optional<Schedule> shape;
  if (kind == ScheduleKind::LocalAdiabatic) shape = build_local_schedule(h, options.epsilon);

  const auto fidelity_at = [&](double T) {
    if (T <= 0.0) return h.c() * h.c();  // sudden limit: nothing evolves
    const Schedule schedule = shape ? shape->rescaled(T) : Schedule::linear(T);
    return evolve(options.engine, h, schedule, default_steps(T, options.steps_per_unit))
        .fidelity;
  };

  const auto points =
      static_cast<std::int64_t>(std::ceil(options.t_max / options.grid_step));
  std::vector<double> grid(static_cast<std::size_t>(points) + 1);
  for (std::int64_t k = 0; k <= points; ++k) {
    grid[static_cast<std::size_t>(k)] =
        std::min(options.t_max, static_cast<double>(k) * options.grid_step);
  }
  std::vector<double> fid(grid.size());
  // Grid points are independent runs; the envelope is assembled serially.
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t k = 0; k <= points; ++k) {
    fid[static_cast<std::size_t>(k)] = fidelity_at(grid[static_cast<std::size_t>(k)]);
  }

  if (fid.back() < target_fidelity) {
    throw NumericalError("no T <= " + std::to_string(options.t_max) +
                         " reaches fidelity " + std::to_string(target_fidelity));
  }
  std::size_t last_fail = grid.size();
  for (std::size_t k = grid.size(); k-- > 0;) {
    if (fid[k] < target_fidelity) {
      last_fail = k;
      break;
    }
  }
  if (last_fail == grid.size()) return 0.0;

  double lo = grid[last_fail];
  double hi = grid[last_fail + 1];
  while (hi - lo > tol) {
    const double mid = 0.5 * (lo + hi);
    (fidelity_at(mid) >= target_fidelity ? hi : lo) = mid;
  }
  return hi;
}

}  // namespace adj
