#include "adj/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "adj/errors.hpp"

namespace adj {

namespace {

double unit_double(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

template <typename IsConstant>
MeasurementRecord majority(const Histogram& hist, IsConstant is_constant) {
  std::uint64_t constant_shots = 0;
  std::uint64_t total = 0;
  for (const auto& [index, count] : hist) {
    total += count;
    if (is_constant(index)) constant_shots += count;
  }
  if (total == 0) throw ValidationError("cannot classify an empty histogram");
  const std::uint64_t balanced_shots = total - constant_shots;
  if (constant_shots == balanced_shots) {
    throw TieError("tie: " + std::to_string(constant_shots) +
                   " shots each way; draw more shots");
  }
  MeasurementRecord rec;
  rec.shots = total;
  rec.histogram = hist;
  rec.verdict = constant_shots > balanced_shots ? OracleKind::Constant : OracleKind::Balanced;
  rec.confidence = static_cast<double>(std::max(constant_shots, balanced_shots)) /
                   static_cast<double>(total);
  return rec;
}

}  // namespace

Histogram sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw ValidationError("shots must be positive");
  std::vector<double> cdf(state.dim());
  double acc = 0.0;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    acc += std::norm(state[i]);
    cdf[i] = acc;
  }
  if (std::abs(acc - 1.0) > 1e-6) {
    throw ValidationError("cannot sample a state with squared norm " + std::to_string(acc));
  }
  std::mt19937_64 rng(seed);
  Histogram hist;
  for (std::uint64_t k = 0; k < shots; ++k) {
    // Scale by the total so round-off in the cdf never leaves a gap at the top.
    const double u = unit_double(rng) * acc;
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    if (it == cdf.end()) --it;
    ++hist[static_cast<std::uint64_t>(it - cdf.begin())];
  }
  return hist;
}

MeasurementRecord classify_modified(const Histogram& hist) {
  return majority(hist, [](std::uint64_t i) { return i % 2 == 0; });
}

MeasurementRecord classify_original(const Histogram& hist) {
  return majority(hist, [](std::uint64_t i) { return i == 0; });
}

MeasurementRecord classify(const Histogram& hist, DecisionRule rule) {
  return rule == DecisionRule::Modified ? classify_modified(hist) : classify_original(hist);
}

}  // namespace adj
