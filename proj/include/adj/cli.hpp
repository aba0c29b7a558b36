#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adj/evolution.hpp"
#include "adj/measurement.hpp"
#include "adj/schedule.hpp"

namespace adj::cli {

enum class Variant { Original, Modified };
enum class OracleSource { Constant, Balanced, FromTable };
enum class EngineChoice { FullSpace, Effective2D, Both };
enum class SweepMode { Fidelity, MinimalTime };

std::string_view to_string(Variant v);

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;
inline constexpr int kExitNumerical = 2;

// Relative output paths are resolved against this directory when set.
inline constexpr const char* kOutputDirEnv = "ADJ_OUTPUT_DIR";

struct ExperimentConfig {
  std::vector<int> n{4};
  OracleSource oracle = OracleSource::Constant;
  bool constant_value = false;
  std::string table;  // "n=<n>:<hex>" for FromTable
  std::uint64_t seed = 0;
  std::vector<Variant> variants{Variant::Modified};
  ScheduleKind schedule = ScheduleKind::Linear;
  // Empty: 4/epsilon for Linear, the built local-adiabatic length otherwise.
  std::vector<double> T;
  std::vector<double> epsilon{0.1};
  int steps_per_unit = kDefaultStepsPerUnitTime;
  std::uint64_t shots = 1000;
  std::uint64_t sample_seed = 1;
  EngineChoice engine = EngineChoice::FullSpace;
  std::size_t trace_points = 101;

  std::string output;     // result file; empty = stdout
  std::string trace;      // CSV trace "t,s,fid" (simulate)
  std::string state_out;  // final state JSON (simulate)
  std::string state_in;   // state JSON to classify instead of simulating

  int points = 1001;  // gap-scan grid

  SweepMode mode = SweepMode::Fidelity;
  double target = 0.0;  // 0: use 1 - epsilon^2
  double t_max = 100.0;
  double grid_step = 0.25;
  double tol = 1e-3;
  int workers = 1;
  std::size_t max_points = 10000;
};

// Collects every problem with the config for `command` into one
// ValidationError naming the offending fields.
void validate(const ExperimentConfig& config, std::string_view command);

// "2..10", "2..10:2", "1,4,8" or "" (empty list).
std::vector<int> parse_int_list(std::string_view text);
// "0.05,0.1", "10..40:10" or "".
std::vector<double> parse_real_list(std::string_view text);

BooleanOracle make_oracle(const ExperimentConfig& config, int n);
ProjectorInterpolation make_interpolation(Variant variant, const BooleanOracle& oracle);

// Each command writes its primary output to config.output (or `out`) and
// throws on failure.
void cmd_simulate(const ExperimentConfig& config, std::ostream& out);
void cmd_gap_scan(const ExperimentConfig& config, std::ostream& out);
void cmd_sweep(const ExperimentConfig& config, std::ostream& out);
void cmd_classify(const ExperimentConfig& config, std::ostream& out);

// Full command line: `adj <subcommand> [--config file] [flags]`. Config
// files hold `key = value` lines named like the long flags (without
// dashes); `#` starts a comment. Flags on the command line override file
// values. Returns the process exit code; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace adj::cli
