#include "doctest.h"

#include <cmath>
#include <random>

#include "adj/errors.hpp"
#include "adj/state.hpp"

using namespace adj;
using doctest::Approx;

namespace {

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

void check_amps(const StateVector& v, const std::vector<double>& expected) {
  REQUIRE(v.dim() == expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    CHECK(v[i].real() == Approx(expected[i]).epsilon(1e-15));
    CHECK(v[i].imag() == 0.0);
  }
}

BooleanOracle random_promise(std::mt19937_64& rng, int n) {
  return rng() % 2 ? BooleanOracle::constant(n, rng() % 2) : BooleanOracle::balanced(n, rng());
}

}  // namespace

TEST_CASE("alpha_state") {
  check_amps(alpha_state(1), {kInvSqrt2, kInvSqrt2});
  check_amps(alpha_state(2), {0.5, 0.5, 0.5, 0.5});
  for (int n = 1; n <= 12; ++n) {
    const auto a = alpha_state(n);
    CHECK(std::abs(overlap(a, a) - 1.0) < 1e-12);
  }
  CHECK_THROWS_AS(alpha_state(0), ValidationError);
}

TEST_CASE("beta_original") {
  check_amps(beta_original(BooleanOracle::constant(2, false)), {1, 0, 0, 0});
  const double third = 1.0 / std::sqrt(3.0);
  check_amps(beta_original(BooleanOracle::balanced(2, 5)), {0, third, third, third});
  // 1/sqrt(N) with N = 4
  CHECK(std::abs(overlap(alpha_state(2), beta_original(BooleanOracle::constant(2, true)))) ==
        Approx(0.5).epsilon(1e-15));
}

TEST_CASE("beta_modified") {
  check_amps(beta_modified(BooleanOracle::constant(2, false)), {kInvSqrt2, 0, kInvSqrt2, 0});
  check_amps(beta_modified(BooleanOracle::balanced(2, 9)), {0, kInvSqrt2, 0, kInvSqrt2});
  CHECK(std::abs(overlap(alpha_state(3), beta_modified(BooleanOracle::constant(3, false)))) ==
        Approx(0.7071067812).epsilon(1e-10));
}

TEST_CASE("promise violations") {
  const auto bad = BooleanOracle::from_truth_table({1, 0, 0, 0});
  CHECK_THROWS_AS(beta_original(bad), PromiseViolation);
  CHECK_THROWS_AS(beta_modified(bad), PromiseViolation);

  const auto forced = beta_modified(bad, true);
  CHECK_FALSE(forced.physical());
  CHECK(std::abs(overlap(forced, forced) - 1.0) < 1e-12);
  // mu = nu = 1/2 before renormalization, so every entry ends up equal
  for (std::size_t i = 0; i < 4; ++i) CHECK(forced[i].real() == Approx(0.5));

  const auto forced_orig = beta_original(bad, true);
  CHECK_FALSE(forced_orig.physical());
  CHECK(std::abs(overlap(forced_orig, forced_orig) - 1.0) < 1e-12);
  CHECK(beta_original(BooleanOracle::constant(2, false)).physical());
}

TEST_CASE("overlap") {
  const auto v = beta_modified(BooleanOracle::balanced(4, 1));
  CHECK(std::abs(overlap(v, v) - 1.0) < 1e-14);
  CHECK_THROWS_AS(overlap(alpha_state(2), alpha_state(3)), ValidationError);

  // conjugate-linear in the first argument
  const cplx phase = std::polar(1.0, 0.7);
  const auto a = alpha_state(3);
  const auto b = beta_modified(BooleanOracle::constant(3, false));
  const cplx base = overlap(a, b);
  CHECK(std::abs(overlap(a.with_phase(phase), b) - std::conj(phase) * base) < 1e-14);
  CHECK(std::abs(overlap(a, b.with_phase(phase)) - phase * base) < 1e-14);
}

TEST_CASE("construction rejects non-normalized amplitudes") {
  CHECK_THROWS_AS(StateVector({1.0, 1.0}), ValidationError);
  CHECK_THROWS_AS(StateVector(std::vector<cplx>{}), ValidationError);
  CHECK_NOTHROW(StateVector({cplx{0.6, 0.0}, cplx{0.0, 0.8}}));
  CHECK_THROWS_AS(StateVector::renormalized({0.0, 0.0}), ValidationError);
}

TEST_CASE("state invariants for random promise oracles, n in [1, 12]") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 1 + trial % 12;
    const auto o = random_promise(rng, n);
    const double N = static_cast<double>(o.size());
    const auto alpha = alpha_state(n);
    const auto mod = beta_modified(o);
    const auto orig = beta_original(o);

    REQUIRE(std::abs(std::sqrt(std::abs(overlap(mod, mod))) - 1.0) < 1e-12);
    REQUIRE(std::abs(std::sqrt(std::abs(overlap(orig, orig))) - 1.0) < 1e-12);
    REQUIRE(std::abs(std::abs(overlap(alpha, mod)) - 1.0 / std::sqrt(2.0)) < 1e-12);

    const double expected_orig = o.kind() == OracleKind::Constant ? 1.0 / std::sqrt(N)
                                                                  : std::sqrt((N - 1.0) / N);
    REQUIRE(std::abs(std::abs(overlap(alpha, orig)) - expected_orig) < 1e-12);

    // support parity follows the oracle kind
    const std::size_t wrong_parity = o.kind() == OracleKind::Constant ? 1 : 0;
    for (std::size_t i = 0; i < mod.dim(); ++i) {
      if (i % 2 == wrong_parity) {
        REQUIRE(mod[i] == cplx{0.0, 0.0});
      } else {
        REQUIRE(mod[i] != cplx{0.0, 0.0});
      }
    }
  }
}
