#pragma once

#include <cstdint>
#include <map>

#include "adj/oracle.hpp"
#include "adj/state.hpp"

namespace adj {

// basis index -> count, ordered by index
using Histogram = std::map<std::uint64_t, std::uint64_t>;

enum class DecisionRule {
  Modified,  // even outcome => constant, odd => balanced
  Original,  // outcome 0 => constant, anything else => balanced
};

struct MeasurementRecord {
  std::uint64_t shots = 0;
  Histogram histogram;
  OracleKind verdict = OracleKind::Invalid;
  // Fraction of shots that agree with the verdict.
  double confidence = 0.0;
};

// Born-rule sampling with std::mt19937_64 seeded by `seed`. Uniform doubles
// are built from the top 53 bits of each draw, so histograms are identical
// on every platform. Throws ValidationError if the norm is off by > 1e-6.
Histogram sample(const StateVector& state, std::uint64_t shots, std::uint64_t seed);

// Majority vote; throws TieError on an exact tie and ValidationError on an
// empty histogram.
MeasurementRecord classify_modified(const Histogram& hist);
MeasurementRecord classify_original(const Histogram& hist);
MeasurementRecord classify(const Histogram& hist, DecisionRule rule);

}  // namespace adj
