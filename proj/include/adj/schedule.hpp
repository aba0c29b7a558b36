#pragma once

#include <string_view>
#include <vector>

#include "adj/hamiltonian.hpp"

namespace adj {

enum class ScheduleKind { Linear, LocalAdiabatic };

std::string_view to_string(ScheduleKind kind);

// Monotone map t -> s on [0, T] with s(0) = 0 and s(T) = 1. Linear schedules
// are evaluated exactly; tabulated ones interpolate linearly in t.
class Schedule {
 public:
  static Schedule linear(double total_time);
  // Throws ValidationError unless both columns start at 0, s ends at 1, and
  // both are nondecreasing (t strictly increasing).
  static Schedule tabulated(std::vector<double> t, std::vector<double> s,
                            ScheduleKind kind = ScheduleKind::LocalAdiabatic,
                            double epsilon = 0.0);

  ScheduleKind kind() const { return kind_; }
  double total_time() const { return total_time_; }
  double epsilon() const { return epsilon_; }
  const std::vector<double>& t_table() const { return t_; }
  const std::vector<double>& s_table() const { return s_; }

  double s_at(double t) const;

  // Same shape stretched to a new total time.
  Schedule rescaled(double total_time) const;

 private:
  Schedule() = default;

  ScheduleKind kind_ = ScheduleKind::Linear;
  double total_time_ = 1.0;
  double epsilon_ = 0.0;
  std::vector<double> t_;
  std::vector<double> s_;
};

// Local adiabatic schedule: ds/dt = epsilon * g(s)^2 / |<E1|dH/ds|E0>|, so the
// adiabatic ratio |<dH/dt>_{1,0}| / g^2 equals epsilon at every s. The elapsed
// time t(s) is tabulated on `table_points` uniform s values with Simpson's
// rule per interval. Requires 0 < epsilon < 1 and 0 < c < 1.
Schedule build_local_schedule(const ProjectorInterpolation& h, double epsilon,
                              int table_points = 4097);

}  // namespace adj
