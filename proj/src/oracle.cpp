#include "adj/oracle.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cstdlib>
#include <numeric>
#include <random>

#include "adj/errors.hpp"

namespace adj {

namespace {

void check_qubits(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw ValidationError("qubit count n=" + std::to_string(n) +
                          " outside supported range [1, " +
                          std::to_string(kMaxQubits) + "]");
  }
}

OracleKind classify_table(const std::vector<std::uint8_t>& table) {
  const std::size_t ones = std::count(table.begin(), table.end(), 1);
  if (ones == 0 || ones == table.size()) return OracleKind::Constant;
  if (2 * ones == table.size()) return OracleKind::Balanced;
  return OracleKind::Invalid;
}

// Uniform draw in [0, bound) by rejection, so the shuffle is identical on
// every standard library.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

}  // namespace

std::string_view to_string(OracleKind kind) {
  switch (kind) {
    case OracleKind::Constant:
      return "constant";
    case OracleKind::Balanced:
      return "balanced";
    case OracleKind::Invalid:
      return "invalid";
  }
  return "invalid";
}

BooleanOracle::BooleanOracle(int n, std::vector<std::uint8_t> table)
    : n_(n), table_(std::move(table)), kind_(classify_table(table_)) {}

BooleanOracle BooleanOracle::constant(int n, bool value) {
  check_qubits(n);
  return BooleanOracle(n, std::vector<std::uint8_t>(std::size_t{1} << n, value ? 1 : 0));
}

BooleanOracle BooleanOracle::balanced(int n, std::uint64_t seed) {
  check_qubits(n);
  const std::size_t N = std::size_t{1} << n;
  std::vector<std::uint8_t> table(N, 0);
  std::fill(table.begin(), table.begin() + N / 2, 1);
  std::mt19937_64 rng(seed);
  for (std::size_t i = N - 1; i > 0; --i) {
    std::swap(table[i], table[bounded(rng, i + 1)]);
  }
  return BooleanOracle(n, std::move(table));
}

BooleanOracle BooleanOracle::from_truth_table(std::vector<std::uint8_t> bits) {
  if (bits.size() < 2 || !std::has_single_bit(bits.size())) {
    throw ValidationError("truth table length " + std::to_string(bits.size()) +
                          " is not a power of two >= 2");
  }
  const int n = std::countr_zero(bits.size());
  check_qubits(n);
  for (auto& b : bits) {
    if (b > 1) throw ValidationError("truth table entries must be 0 or 1");
  }
  return BooleanOracle(n, std::move(bits));
}

std::size_t BooleanOracle::popcount() const {
  return std::count(table_.begin(), table_.end(), 1);
}

AmplitudePair mu_nu(const BooleanOracle& oracle) {
  const auto N = static_cast<std::int64_t>(oracle.size());
  const auto ones = static_cast<std::int64_t>(oracle.popcount());
  const std::int64_t signed_sum = std::llabs(N - 2 * ones);
  const double mu = static_cast<double>(signed_sum) / static_cast<double>(N);
  return {mu, 1.0 - mu};
}

std::string to_hex(const BooleanOracle& oracle) {
  static constexpr char kDigits[] = "0123456789abcdef";
  const auto table = oracle.table();
  std::string out = "n=" + std::to_string(oracle.qubits()) + ":";
  for (std::size_t base = 0; base < table.size(); base += 4) {
    unsigned digit = 0;
    for (std::size_t k = 0; k < 4 && base + k < table.size(); ++k) {
      digit |= static_cast<unsigned>(table[base + k]) << k;
    }
    out.push_back(kDigits[digit]);
  }
  return out;
}

BooleanOracle from_hex(std::string_view text) {
  const auto colon = text.find(':');
  if (text.substr(0, 2) != "n=" || colon == std::string_view::npos) {
    throw ValidationError("truth table must look like n=<n>:<hex>, got '" +
                          std::string(text) + "'");
  }
  int n = 0;
  const auto head = text.substr(2, colon - 2);
  const auto [ptr, ec] = std::from_chars(head.data(), head.data() + head.size(), n);
  if (ec != std::errc{} || ptr != head.data() + head.size()) {
    throw ValidationError("bad qubit count in '" + std::string(text) + "'");
  }
  check_qubits(n);
  const std::size_t N = std::size_t{1} << n;
  const auto hex = text.substr(colon + 1);
  if (hex.size() != (N + 3) / 4) {
    throw ValidationError("expected " + std::to_string((N + 3) / 4) +
                          " hex digits for n=" + std::to_string(n) + ", got " +
                          std::to_string(hex.size()));
  }
  std::vector<std::uint8_t> bits(N, 0);
  for (std::size_t j = 0; j < hex.size(); ++j) {
    const char ch = hex[j];
    unsigned digit;
    if (ch >= '0' && ch <= '9') {
      digit = ch - '0';
    } else if (ch >= 'a' && ch <= 'f') {
      digit = ch - 'a' + 10;
    } else if (ch >= 'A' && ch <= 'F') {
      digit = ch - 'A' + 10;
    } else {
      throw ValidationError(std::string("invalid hex digit '") + ch + "'");
    }
    for (std::size_t k = 0; k < 4; ++k) {
      const std::size_t x = 4 * j + k;
      const unsigned bit = (digit >> k) & 1U;
      if (x < N) {
        bits[x] = static_cast<std::uint8_t>(bit);
      } else if (bit) {
        throw ValidationError("hex digit sets bits beyond N=" + std::to_string(N));
      }
    }
  }
  return BooleanOracle::from_truth_table(std::move(bits));
}

}  // namespace adj
