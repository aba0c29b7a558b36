#include "doctest.h"

#include <cmath>

#include "adj/errors.hpp"
#include "adj/schedule.hpp"

using namespace adj;

namespace {

// Closed form of t(s) = integral of coupling / (epsilon g^3) with
// coupling = c sqrt(k) / g, g^2 = c^2 + k u^2, u = 2s - 1, k = 1 - c^2:
//   t(s) = sqrt(k) / (2 c epsilon) * (1 + u / g(u)).
double elapsed_closed_form(double c, double epsilon, double s) {
  const double k = 1.0 - c * c;
  const double u = 2.0 * s - 1.0;
  return std::sqrt(k) / (2.0 * c * epsilon) * (1.0 + u / std::sqrt(c * c + k * u * u));
}

// Inverse of the above.
double s_closed_form(double c, double epsilon, double t) {
  const double k = 1.0 - c * c;
  const double w = 2.0 * c * epsilon * t / std::sqrt(k) - 1.0;
  const double u = w * c / std::sqrt(1.0 - k * w * w);
  return 0.5 * (1.0 + u);
}

}  // namespace

TEST_CASE("linear schedule") {
  const auto s = Schedule::linear(40.0);
  CHECK(s.kind() == ScheduleKind::Linear);
  CHECK(s.s_at(0.0) == 0.0);
  CHECK(s.s_at(40.0) == 1.0);
  CHECK(s.s_at(10.0) == 0.25);
  CHECK(s.s_at(-1.0) == 0.0);
  CHECK(s.s_at(41.0) == 1.0);
  CHECK_THROWS_AS(Schedule::linear(0.0), ValidationError);
  CHECK_THROWS_AS(Schedule::linear(-2.0), ValidationError);
  CHECK(s.rescaled(10.0).s_at(5.0) == 0.5);
}

TEST_CASE("tabulated schedule validation") {
  CHECK_NOTHROW(Schedule::tabulated({0.0, 1.0, 2.0}, {0.0, 0.5, 1.0}));
  CHECK_THROWS_AS(Schedule::tabulated({0.0, 1.0, 2.0}, {0.0, 0.7, 0.5}), ValidationError);
  CHECK_THROWS_AS(Schedule::tabulated({0.0, 1.0, 1.0}, {0.0, 0.5, 1.0}), ValidationError);
  CHECK_THROWS_AS(Schedule::tabulated({0.0, 1.0}, {0.1, 1.0}), ValidationError);
  CHECK_THROWS_AS(Schedule::tabulated({0.0, 1.0}, {0.0, 0.9}), ValidationError);
  CHECK_THROWS_AS(Schedule::tabulated({0.0}, {0.0}), ValidationError);

  const auto s = Schedule::tabulated({0.0, 1.0, 3.0}, {0.0, 0.5, 1.0});
  CHECK(s.total_time() == 3.0);
  CHECK(s.s_at(0.5) == doctest::Approx(0.25));
  CHECK(s.s_at(2.0) == doctest::Approx(0.75));
  const auto r = s.rescaled(6.0);
  CHECK(r.total_time() == 6.0);
  CHECK(r.s_at(4.0) == doctest::Approx(0.75));
}

TEST_CASE("local schedule matches the closed-form integral") {
  for (int n : {2, 4, 6}) {
    for (bool modified : {true, false}) {
      const auto o = BooleanOracle::constant(n, false);
      const auto h = modified ? modified_interpolation(o) : original_interpolation(o);
      const double eps = 0.1;
      const auto sched = build_local_schedule(h, eps);
      const double T = elapsed_closed_form(h.c(), eps, 1.0);
      CHECK(T == doctest::Approx(std::sqrt(1.0 - h.c() * h.c()) / (h.c() * eps)).epsilon(1e-14));
      CHECK(sched.total_time() == doctest::Approx(T).epsilon(1e-9));
      CHECK(sched.epsilon() == eps);

      const auto& ts = sched.t_table();
      const auto& ss = sched.s_table();
      for (std::size_t k = 1; k < ts.size(); ++k) {
        REQUIRE(ts[k] > ts[k - 1]);
        REQUIRE(ss[k] > ss[k - 1]);
      }
      for (std::size_t k = 0; k < ts.size(); k += 97) {
        REQUIRE(std::abs(ts[k] - elapsed_closed_form(h.c(), eps, ss[k])) < 1e-9 * T);
      }
      for (int j = 1; j < 50; ++j) {
        const double t = T * j / 50.0;
        REQUIRE(std::abs(sched.s_at(t) - s_closed_form(h.c(), eps, t)) < 1e-6);
      }
    }
  }
}

TEST_CASE("local schedule: modified construction is n-independent") {
  const double T2 = build_local_schedule(modified_interpolation(BooleanOracle::constant(2, 0)), 0.1)
                        .total_time();
  for (int n = 1; n <= 12; ++n) {
    const double Tn =
        build_local_schedule(modified_interpolation(BooleanOracle::balanced(n, 3)), 0.1)
            .total_time();
    REQUIRE(std::abs(Tn - T2) < 1e-9 * T2);
  }
}

TEST_CASE("local schedule: original constant case grows like sqrt(N)") {
  const auto T = [](int n) {
    return build_local_schedule(original_interpolation(BooleanOracle::constant(n, false)), 0.1)
        .total_time();
  };
  const double ratio = T(8) / T(4);
  CHECK(ratio == doctest::Approx(4.0).epsilon(0.15));
  // T = sqrt(N - 1) / epsilon exactly
  for (int n = 2; n <= 10; ++n) {
    REQUIRE(T(n) == doctest::Approx(std::sqrt((1 << n) - 1.0) / 0.1).epsilon(1e-9));
  }
}

TEST_CASE("local schedule errors") {
  const auto h = modified_interpolation(BooleanOracle::constant(3, false));
  CHECK_THROWS_AS(build_local_schedule(h, 0.0), ValidationError);
  CHECK_THROWS_AS(build_local_schedule(h, 1.0), ValidationError);
  const ProjectorInterpolation same(alpha_state(3), alpha_state(3));
  CHECK_THROWS_AS(build_local_schedule(same, 0.1), ValidationError);
}
