#include "adj/schedule.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "adj/errors.hpp"

namespace adj {

std::string_view to_string(ScheduleKind kind) {
  return kind == ScheduleKind::Linear ? "linear" : "local";
}

Schedule Schedule::linear(double total_time) {
  if (!(total_time > 0.0) || !std::isfinite(total_time)) {
    throw ValidationError("total time T must be positive and finite, got " +
                          std::to_string(total_time));
  }
  Schedule out;
  out.kind_ = ScheduleKind::Linear;
  out.total_time_ = total_time;
  return out;
}

Schedule Schedule::tabulated(std::vector<double> t, std::vector<double> s, ScheduleKind kind,
                             double epsilon) {
  if (t.size() != s.size() || t.size() < 2) {
    throw ValidationError("schedule table needs two equal-length columns of >= 2 rows");
  }
  if (t.front() != 0.0 || s.front() != 0.0 || s.back() != 1.0) {
    throw ValidationError("schedule table must satisfy s(0) = 0 and s(T) = 1");
  }
  for (std::size_t k = 1; k < t.size(); ++k) {
    if (!(t[k] > t[k - 1]) || !(s[k] >= s[k - 1])) {
      throw ValidationError("non-monotone schedule at row " + std::to_string(k));
    }
  }
  Schedule out;
  out.kind_ = kind;
  out.epsilon_ = epsilon;
  out.total_time_ = t.back();
  out.t_ = std::move(t);
  out.s_ = std::move(s);
  return out;
}

double Schedule::s_at(double t) const {
  if (t <= 0.0) return 0.0;
  if (t >= total_time_) return 1.0;
  if (t_.empty()) return t / total_time_;
  const auto hi = std::upper_bound(t_.begin(), t_.end(), t);
  const auto k = static_cast<std::size_t>(hi - t_.begin());
  const double w = (t - t_[k - 1]) / (t_[k] - t_[k - 1]);
  return s_[k - 1] + w * (s_[k] - s_[k - 1]);
}

Schedule Schedule::rescaled(double total_time) const {
  if (kind_ == ScheduleKind::Linear && t_.empty()) return linear(total_time);
  if (!(total_time > 0.0)) throw ValidationError("total time T must be positive");
  std::vector<double> t = t_;
  const double factor = total_time / total_time_;
  for (auto& v : t) v *= factor;
  t.back() = total_time;
  return tabulated(std::move(t), s_, kind_, epsilon_);
}

Schedule build_local_schedule(const ProjectorInterpolation& h, double epsilon,
                              int table_points) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw ValidationError("epsilon must lie in (0, 1), got " + std::to_string(epsilon));
  }
  if (h.degenerate() || h.c() < 1e-12) {
    throw ValidationError("local adiabatic schedule needs 0 < c < 1, got c=" +
                          std::to_string(h.c()));
  }
  if (table_points < 3) throw ValidationError("schedule table needs >= 3 points");

  // D(t)/g^2 = epsilon at every s, with D(t) = coupling(s) ds/dt.
  const auto dt_ds = [&](double s) {
    const double g = gap_analytic(h, s).gap;
    return coupling_element(h, s) / (epsilon * g * g);
  };

  const auto rows = static_cast<std::size_t>(table_points);
  std::vector<double> s(rows);
  std::vector<double> t(rows, 0.0);
  const double step = 1.0 / static_cast<double>(rows - 1);
  for (std::size_t k = 0; k < rows; ++k) s[k] = static_cast<double>(k) * step;
  s.back() = 1.0;
  for (std::size_t k = 1; k < rows; ++k) {
    const double a = s[k - 1];
    const double b = s[k];
    t[k] = t[k - 1] + (b - a) / 6.0 * (dt_ds(a) + 4.0 * dt_ds(0.5 * (a + b)) + dt_ds(b));
  }
  return Schedule::tabulated(std::move(t), std::move(s), ScheduleKind::LocalAdiabatic, epsilon);
}

}  // namespace adj
