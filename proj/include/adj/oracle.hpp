#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace adj {

// Largest qubit count accepted anywhere in the library. The full-space
// engine and dense routines impose tighter caps of their own.
inline constexpr int kMaxQubits = 20;

enum class OracleKind { Constant, Balanced, Invalid };

std::string_view to_string(OracleKind kind);

// mu + nu == 1 always; under the promise one of them is exactly zero.
struct AmplitudePair {
  double mu = 0.0;
  double nu = 0.0;
};

// Explicit truth table of f : {0,1}^n -> {0,1}. Bit x of the table is f(x).
// Immutable after construction.
class BooleanOracle {
 public:
  static BooleanOracle constant(int n, bool value);
  // Exactly N/2 ones, placed by a seeded Fisher-Yates shuffle (mt19937_64).
  static BooleanOracle balanced(int n, std::uint64_t seed);
  // Throws ValidationError unless bits.size() is a power of two >= 2.
  static BooleanOracle from_truth_table(std::vector<std::uint8_t> bits);

  int qubits() const { return n_; }
  std::size_t size() const { return table_.size(); }
  OracleKind kind() const { return kind_; }
  bool is_promise() const { return kind_ != OracleKind::Invalid; }
  std::span<const std::uint8_t> table() const { return table_; }
  bool operator()(std::size_t x) const { return table_[x] != 0; }

  std::size_t popcount() const;

  friend bool operator==(const BooleanOracle&, const BooleanOracle&) = default;

 private:
  BooleanOracle(int n, std::vector<std::uint8_t> table);

  int n_ = 0;
  std::vector<std::uint8_t> table_;
  OracleKind kind_ = OracleKind::Invalid;
};

// mu = |sum_x (-1)^f(x)| / N evaluated in integer arithmetic, nu = 1 - mu.
AmplitudePair mu_nu(const BooleanOracle& oracle);

// "n=<n>:<hex>" where hex digit j holds bits 4j..4j+3, least significant bit
// first. For n = 1 the single digit carries two bits.
std::string to_hex(const BooleanOracle& oracle);
BooleanOracle from_hex(std::string_view text);

}  // namespace adj
