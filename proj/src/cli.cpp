#include "adj/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "adj/errors.hpp"
#include "adj/io.hpp"

namespace adj::cli {

namespace {

using io::json;

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
T parse_number(const std::string& text) {
  T value{};
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ValidationError("cannot parse number '" + text + "'");
  }
  return value;
}

// "a..b[:step]" or a comma list.
template <typename T>
std::vector<T> parse_list(std::string_view raw) {
  const std::string text = trim(raw);
  std::vector<T> out;
  if (text.empty()) return out;
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    for (const auto& item : split(text, ',')) out.push_back(parse_number<T>(item));
    return out;
  }
  const auto colon = text.find(':', dots);
  const T lo = parse_number<T>(trim(text.substr(0, dots)));
  const T hi = parse_number<T>(trim(text.substr(dots + 2, colon == std::string::npos
                                                              ? std::string::npos
                                                              : colon - dots - 2)));
  const T step = colon == std::string::npos ? T{1} : parse_number<T>(trim(text.substr(colon + 1)));
  if (!(step > T{0})) throw ValidationError("range step must be positive in '" + text + "'");
  if (hi < lo) return out;
  const auto count = static_cast<std::size_t>(std::floor((hi - lo) / static_cast<double>(step) + 1e-9));
  if (count > 1'000'000) throw ValidationError("range '" + text + "' is too long");
  for (std::size_t k = 0; k <= count; ++k) out.push_back(static_cast<T>(lo + static_cast<T>(k) * step));
  return out;
}

std::filesystem::path resolve(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
      return std::filesystem::path(dir) / p;
    }
  }
  return p;
}

// Writes through `fallback` when `path` is empty.
template <typename Fn>
void emit(const std::string& path, std::ostream& fallback, Fn&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  const auto p = resolve(path);
  std::ofstream file(p, std::ios::binary);
  if (!file) throw ValidationError("cannot open output file '" + p.string() + "'");
  write(file);
}

json number(double x) { return io::round12(x); }

DecisionRule rule_for(Variant v) {
  return v == Variant::Modified ? DecisionRule::Modified : DecisionRule::Original;
}

json histogram_json(const Histogram& hist) {
  json out = json::object();
  for (const auto& [index, count] : hist) out[std::to_string(index)] = count;
  return out;
}

json measurement_json(const StateVector& state, const ExperimentConfig& config, Variant variant) {
  const auto hist = sample(state, config.shots, config.sample_seed);
  json out;
  out["shots"] = config.shots;
  out["sample_seed"] = config.sample_seed;
  out["rule"] = to_string(variant);
  try {
    const auto rec = classify(hist, rule_for(variant));
    out["verdict"] = to_string(rec.verdict);
    out["confidence"] = number(rec.confidence);
  } catch (const TieError&) {
    out["verdict"] = "tie";
    out["confidence"] = number(0.5);
  }
  out["histogram"] = histogram_json(hist);
  return out;
}

struct Run {
  Schedule schedule;
  EvolutionResult result;
  std::optional<double> effective_fidelity;
};

Schedule make_schedule(const ExperimentConfig& config, const ProjectorInterpolation& h,
                       double epsilon, std::optional<double> T) {
  if (config.schedule == ScheduleKind::Linear) return Schedule::linear(T.value_or(4.0 / epsilon));
  Schedule local = build_local_schedule(h, epsilon);
  return T ? local.rescaled(*T) : local;
}

constexpr double kEngineAgreement = 1e-8;

Run run_evolution(const ExperimentConfig& config, const ProjectorInterpolation& h,
                  const Schedule& schedule, std::size_t trace_points) {
  const std::size_t steps = default_steps(schedule.total_time(), config.steps_per_unit);
  const Engine primary =
      config.engine == EngineChoice::Effective2D ? Engine::Effective2D : Engine::FullSpace;
  Run run{schedule, evolve(primary, h, schedule, steps, trace_points), std::nullopt};
  if (config.engine == EngineChoice::Both) {
    const double eff = evolve_effective(h, schedule, steps).fidelity;
    if (std::abs(eff - run.result.fidelity) > kEngineAgreement) {
      throw NumericalError("engines disagree: full " + io::format_number(run.result.fidelity) +
                           " vs effective " + io::format_number(eff));
    }
    run.effective_fidelity = eff;
  }
  return run;
}

std::optional<double> single_T(const ExperimentConfig& config) {
  if (config.T.empty()) return std::nullopt;
  return config.T.front();
}

// Runs `body(i)` for i in [0, count) on up to `workers` threads and rethrows
// the first failure (by index) afterwards.
template <typename Body>
void parallel_for(std::size_t count, int workers, Body&& body) {
  std::vector<std::exception_ptr> errors(count);
  const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (std::int64_t i = 0; i < n; ++i) {
    try {
      body(static_cast<std::size_t>(i));
    } catch (...) {
      errors[static_cast<std::size_t>(i)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::string_view to_string(Variant v) { return v == Variant::Modified ? "modified" : "original"; }

std::vector<int> parse_int_list(std::string_view text) { return parse_list<int>(text); }
std::vector<double> parse_real_list(std::string_view text) { return parse_list<double>(text); }

void validate(const ExperimentConfig& config, std::string_view command) {
  std::vector<std::string> problems;
  const auto fail = [&](std::string msg) { problems.push_back(std::move(msg)); };
  const bool single = command != "sweep";

  std::vector<int> ns = config.n;
  if (config.oracle != OracleSource::FromTable && !config.table.empty()) {
    fail("table: only valid with oracle = table");
  }
  if (config.oracle == OracleSource::FromTable) {
    if (config.table.empty()) {
      fail("table: required when oracle = table");
    } else {
      try {
        ns = {from_hex(config.table).qubits()};
      } catch (const ValidationError& e) {
        fail(std::string("table: ") + e.what());
      }
    }
  }
  if (single && ns.size() != 1) fail("n: exactly one value required for " + std::string(command));
  for (int n : ns) {
    if (n < 1 || n > kMaxQubits) {
      fail("n: " + std::to_string(n) + " outside [1, " + std::to_string(kMaxQubits) + "]");
    } else if (config.engine != EngineChoice::Effective2D && n > kMaxFullSpaceQubits &&
               command != "gap-scan" && config.state_in.empty()) {
      fail("n: " + std::to_string(n) + " exceeds the full-space engine cap n <= " +
           std::to_string(kMaxFullSpaceQubits) + " (use --engine effective)");
    } else if (command == "gap-scan" && (std::size_t{1} << n) > kMaxDenseDim) {
      fail("n: gap-scan needs N <= " + std::to_string(kMaxDenseDim) + " for the dense eigensolver");
    }
  }
  if (single && config.variants.size() != 1) fail("variant: exactly one value required");
  if (single && config.epsilon.size() != 1) fail("epsilon: exactly one value required");
  if (single && config.T.size() > 1) fail("T: at most one value allowed");
  for (double e : config.epsilon) {
    if (!(e > 0.0 && e < 1.0)) fail("epsilon: " + io::format_number(e) + " outside (0, 1)");
  }
  for (double t : config.T) {
    if (!(t > 0.0) || !std::isfinite(t)) fail("T: " + io::format_number(t) + " must be positive");
  }
  if (config.steps_per_unit <= 0) fail("steps-per-unit: must be positive");
  if (config.shots == 0) fail("shots: must be positive");
  if (config.points < 2) fail("points: need at least 2");
  if (config.trace_points == 1) fail("trace-points: use 0 (off) or >= 2");
  if (command == "sweep") {
    if (config.workers < 1) fail("workers: must be >= 1");
    if (config.mode == SweepMode::MinimalTime) {
      if (config.target != 0.0 && !(config.target >= 0.5 && config.target < 1.0)) {
        fail("target: must lie in [0.5, 1)");
      }
      if (!(config.tol > 0.0)) fail("tol: must be positive");
      if (!(config.grid_step > 0.0) || !(config.t_max > config.grid_step)) {
        fail("grid-step/t-max: need 0 < grid-step < t-max");
      }
    }
    const std::size_t t_count =
        config.mode == SweepMode::Fidelity ? std::max<std::size_t>(1, config.T.size()) : 1;
    const std::size_t total = ns.size() * config.variants.size() * config.epsilon.size() * t_count;
    if (total > config.max_points) {
      fail("grid: " + std::to_string(total) + " points exceeds max-points " +
           std::to_string(config.max_points));
    }
  }
  if (problems.empty()) return;
  std::string msg = "invalid configuration for " + std::string(command) + ":";
  for (const auto& p : problems) msg += "\n  " + p;
  throw ValidationError(msg);
}

BooleanOracle make_oracle(const ExperimentConfig& config, int n) {
  switch (config.oracle) {
    case OracleSource::Constant:
      return BooleanOracle::constant(n, config.constant_value);
    case OracleSource::Balanced:
      return BooleanOracle::balanced(n, config.seed);
    case OracleSource::FromTable:
      return from_hex(config.table);
  }
  throw ValidationError("unknown oracle source");
}

ProjectorInterpolation make_interpolation(Variant variant, const BooleanOracle& oracle) {
  return variant == Variant::Modified ? modified_interpolation(oracle)
                                      : original_interpolation(oracle);
}

void cmd_simulate(const ExperimentConfig& config, std::ostream& out) {
  validate(config, "simulate");
  const auto oracle = make_oracle(config, config.n.front());
  const Variant variant = config.variants.front();
  const auto h = make_interpolation(variant, oracle);
  const double epsilon = config.epsilon.front();
  const auto schedule = make_schedule(config, h, epsilon, single_T(config));
  const std::size_t trace_points = config.trace.empty() ? 0 : config.trace_points;
  const Run run = run_evolution(config, h, schedule, trace_points);
  const auto& res = run.result;

  json doc;
  doc["n"] = oracle.qubits();
  doc["N"] = oracle.size();
  doc["oracle"] = to_hex(oracle);
  doc["oracle_kind"] = to_string(oracle.kind());
  doc["variant"] = to_string(variant);
  doc["schedule"] = to_string(schedule.kind());
  doc["epsilon"] = number(epsilon);
  doc["T"] = number(res.total_time);
  doc["steps"] = res.steps;
  doc["engine"] = config.engine == EngineChoice::Both ? "both" : to_string(res.engine);
  doc["fidelity"] = number(res.fidelity);
  if (run.effective_fidelity) doc["fidelity_effective"] = number(*run.effective_fidelity);
  doc["target_fidelity"] = number(1.0 - epsilon * epsilon);
  doc["min_gap_seen"] = number(res.min_gap_seen);
  doc["g_min"] = number(g_min(h));
  doc["measurement"] = measurement_json(res.final_state, config, variant);
  emit(config.output, out, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });

  if (!config.trace.empty()) {
    io::CsvTable table{{"t", "s", "fid"}, {}};
    for (const auto& sample : res.trace) {
      table.rows.push_back({io::format_number(sample.t), io::format_number(sample.s),
                            io::format_number(sample.fidelity)});
    }
    emit(config.trace, out, [&](std::ostream& os) { io::write_csv(os, table); });
  }
  if (!config.state_out.empty()) {
    emit(config.state_out, out,
         [&](std::ostream& os) { os << io::state_to_json(res.final_state).dump() << '\n'; });
  }
}

void cmd_gap_scan(const ExperimentConfig& config, std::ostream& out) {
  validate(config, "gap-scan");
  const auto oracle = make_oracle(config, config.n.front());
  const auto h = make_interpolation(config.variants.front(), oracle);
  const auto points = static_cast<std::size_t>(config.points);
  std::vector<SpectrumPoint> numeric(points);
  std::vector<double> analytic(points);
  parallel_for(points, kernels::max_threads(), [&](std::size_t k) {
    const double s = k + 1 == points ? 1.0 : static_cast<double>(k) / static_cast<double>(points - 1);
    numeric[k] = gap_numeric(h, s);
    analytic[k] = gap_analytic(h, s).gap;
  });
  io::CsvTable table{{"s", "e0", "e1", "gap", "gap_analytic"}, {}};
  for (std::size_t k = 0; k < points; ++k) {
    const auto& p = numeric[k];
    table.rows.push_back({io::format_number(p.s), io::format_number(p.e0), io::format_number(p.e1),
                          io::format_number(p.gap), io::format_number(analytic[k])});
  }
  emit(config.output, out, [&](std::ostream& os) { io::write_csv(os, table); });
}

void cmd_sweep(const ExperimentConfig& config, std::ostream& out) {
  validate(config, "sweep");
  struct Point {
    int n;
    Variant variant;
    double epsilon;
    std::optional<double> T;
  };
  std::vector<int> ns = config.n;
  if (config.oracle == OracleSource::FromTable) ns = {from_hex(config.table).qubits()};
  std::vector<Point> grid;
  for (int n : ns) {
    for (Variant v : config.variants) {
      for (double eps : config.epsilon) {
        if (config.mode == SweepMode::Fidelity && !config.T.empty()) {
          for (double T : config.T) grid.push_back({n, v, eps, T});
        } else {
          grid.push_back({n, v, eps, std::nullopt});
        }
      }
    }
  }

  struct Row {
    double T = 0.0;
    double fidelity = 0.0;
    double min_gap = 0.0;
  };
  std::vector<Row> rows(grid.size());
  parallel_for(grid.size(), config.workers, [&](std::size_t i) {
    const auto& pt = grid[i];
    const auto h = make_interpolation(pt.variant, make_oracle(config, pt.n));
    if (config.mode == SweepMode::Fidelity) {
      const auto schedule = make_schedule(config, h, pt.epsilon, pt.T);
      const Run run = run_evolution(config, h, schedule, 0);
      rows[i] = {run.result.total_time, run.result.fidelity, run.result.min_gap_seen};
      return;
    }
    TimeSearchOptions opts;
    opts.t_max = config.t_max;
    opts.grid_step = config.grid_step;
    opts.steps_per_unit = config.steps_per_unit;
    opts.engine =
        config.engine == EngineChoice::FullSpace ? Engine::FullSpace : Engine::Effective2D;
    opts.epsilon = pt.epsilon;
    const double target = config.target != 0.0 ? config.target : 1.0 - pt.epsilon * pt.epsilon;
    const double tstar = minimal_time(h, target, config.schedule, config.tol, opts);
    double fid = h.c() * h.c();
    if (tstar > 0.0) {
      Schedule schedule = config.schedule == ScheduleKind::Linear
                              ? Schedule::linear(tstar)
                              : build_local_schedule(h, pt.epsilon).rescaled(tstar);
      fid = evolve(opts.engine, h, schedule, default_steps(tstar, config.steps_per_unit)).fidelity;
    }
    rows[i] = {tstar, fid, g_min(h)};
  });

  io::CsvTable table{
      {"n", "N", "variant", "schedule", "epsilon", "T_or_Tstar", "fidelity", "min_gap"}, {}};
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const auto& pt = grid[i];
    table.rows.push_back({std::to_string(pt.n), std::to_string(std::size_t{1} << pt.n),
                          std::string(to_string(pt.variant)),
                          std::string(to_string(config.schedule)), io::format_number(pt.epsilon),
                          io::format_number(rows[i].T), io::format_number(rows[i].fidelity),
                          io::format_number(rows[i].min_gap)});
  }
  emit(config.output, out, [&](std::ostream& os) { io::write_csv(os, table); });
}

void cmd_classify(const ExperimentConfig& config, std::ostream& out) {
  validate(config, "classify");
  const Variant variant = config.variants.front();
  json doc;
  if (!config.state_in.empty()) {
    const auto path = resolve(config.state_in);
    std::ifstream file(path);
    if (!file) throw ValidationError("cannot open state file '" + path.string() + "'");
    json parsed;
    try {
      parsed = json::parse(file);
    } catch (const json::parse_error& e) {
      throw ValidationError(std::string("state file is not valid JSON: ") + e.what());
    }
    doc = measurement_json(io::state_from_json(parsed), config, variant);
  } else {
    const auto oracle = make_oracle(config, config.n.front());
    const auto h = make_interpolation(variant, oracle);
    const double epsilon = config.epsilon.front();
    const Run run = run_evolution(config, h, make_schedule(config, h, epsilon, single_T(config)), 0);
    doc = measurement_json(run.result.final_state, config, variant);
    doc["oracle"] = to_hex(oracle);
    doc["oracle_kind"] = to_string(oracle.kind());
    doc["fidelity"] = number(run.result.fidelity);
  }
  emit(config.output, out, [&](std::ostream& os) { os << doc.dump(2) << '\n'; });
}

namespace {

// `--config FILE` / `--config=FILE` lines become `--key=value` tokens placed
// right after the subcommand, ahead of the real flags.
std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::vector<std::string> from_file;
  for (std::size_t i = 0; i < args.size(); ++i) {
    std::string path;
    if (args[i] == "--config") {
      if (i + 1 >= args.size()) throw ValidationError("--config needs a file path");
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
      continue;
    }
    std::ifstream file(path);
    if (!file) throw ValidationError("cannot open config file '" + path + "'");
    std::string line;
    int lineno = 0;
    while (std::getline(file, line)) {
      ++lineno;
      if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      const std::string body = trim(line);
      if (body.empty()) continue;
      const auto eq = body.find('=');
      if (eq == std::string::npos) {
        throw ValidationError(path + ":" + std::to_string(lineno) + ": expected key = value");
      }
      from_file.push_back("--" + trim(body.substr(0, eq)) + "=" + trim(body.substr(eq + 1)));
    }
  }
  const auto sub = std::find_if(rest.begin(), rest.end(),
                                [](const std::string& a) { return a.empty() || a[0] != '-'; });
  if (sub == rest.end()) {
    rest.insert(rest.end(), from_file.begin(), from_file.end());
  } else {
    rest.insert(sub + 1, from_file.begin(), from_file.end());
  }
  // Split `--key=value` so an empty value (`--n=`) reaches the option as "".
  std::vector<std::string> split;
  for (const auto& a : rest) {
    const auto eq = a.find('=');
    if (a.rfind("--", 0) == 0 && eq != std::string::npos) {
      split.push_back(a.substr(0, eq));
      split.push_back(a.substr(eq + 1));
    } else {
      split.push_back(a);
    }
  }
  return split;
}

struct RawFlags {
  std::string n, T, epsilon, variant, oracle, schedule, engine, mode;
};

void add_options(CLI::App& sub, ExperimentConfig& cfg, RawFlags& raw) {
  sub.add_option("--n", raw.n, "Qubit count, list or range (2..10[:step])");
  sub.add_option("--oracle", raw.oracle, "constant | balanced | table")
      ->check(CLI::IsMember({"constant", "balanced", "table"}));
  sub.add_option("--value", cfg.constant_value, "Output bit of a constant oracle");
  sub.add_option("--table", cfg.table, "Truth table as n=<n>:<hex>");
  sub.add_option("--seed", cfg.seed, "Seed for balanced oracles");
  sub.add_option("--variant", raw.variant, "modified | original (comma list for sweep)");
  sub.add_option("--schedule", raw.schedule, "linear | local")
      ->check(CLI::IsMember({"linear", "local"}));
  sub.add_option("--T", raw.T, "Total evolution time (list or range for sweep)");
  sub.add_option("--epsilon", raw.epsilon, "Target error epsilon (list for sweep)");
  sub.add_option("--steps-per-unit", cfg.steps_per_unit, "Integrator steps per unit time");
  sub.add_option("--shots", cfg.shots, "Measurement shots");
  sub.add_option("--sample-seed", cfg.sample_seed, "Seed for measurement sampling");
  sub.add_option("--engine", raw.engine, "full | effective | both")
      ->check(CLI::IsMember({"full", "effective", "both"}));
  sub.add_option("--trace-points", cfg.trace_points, "Samples in the trace CSV");
  sub.add_option("--output,-o", cfg.output, "Result file (default stdout)");
  sub.add_option("--trace", cfg.trace, "Write the t,s,fid trace CSV here");
  sub.add_option("--state-out", cfg.state_out, "Write the final state JSON here");
  sub.add_option("--state-in", cfg.state_in, "Classify this state JSON instead of simulating");
  sub.add_option("--points", cfg.points, "gap-scan grid size");
  sub.add_option("--mode", raw.mode, "sweep mode: fidelity | tstar")
      ->check(CLI::IsMember({"fidelity", "tstar"}));
  sub.add_option("--target", cfg.target, "Target fidelity for tstar (default 1 - epsilon^2)");
  sub.add_option("--t-max", cfg.t_max, "Upper end of the T* search");
  sub.add_option("--grid-step", cfg.grid_step, "Coarse T grid spacing for the T* search");
  sub.add_option("--tol", cfg.tol, "Bisection tolerance for T*");
  sub.add_option("--workers", cfg.workers, "Parallel sweep workers");
  sub.add_option("--max-points", cfg.max_points, "Largest sweep grid accepted");
}

void apply_raw(const RawFlags& raw, ExperimentConfig& cfg, CLI::App& sub) {
  const auto given = [&](const char* name) { return sub.count(name) > 0; };
  if (given("--n")) cfg.n = parse_int_list(raw.n);
  if (given("--T")) cfg.T = parse_real_list(raw.T);
  if (given("--epsilon")) cfg.epsilon = parse_real_list(raw.epsilon);
  if (given("--oracle")) {
    cfg.oracle = raw.oracle == "constant"   ? OracleSource::Constant
                 : raw.oracle == "balanced" ? OracleSource::Balanced
                                            : OracleSource::FromTable;
  } else if (given("--table")) {
    cfg.oracle = OracleSource::FromTable;
  }
  if (given("--variant")) {
    cfg.variants.clear();
    for (const auto& v : split(raw.variant, ',')) {
      if (v == "modified") {
        cfg.variants.push_back(Variant::Modified);
      } else if (v == "original") {
        cfg.variants.push_back(Variant::Original);
      } else {
        throw ValidationError("variant: unknown value '" + v + "'");
      }
    }
  }
  if (given("--schedule")) {
    cfg.schedule = raw.schedule == "linear" ? ScheduleKind::Linear : ScheduleKind::LocalAdiabatic;
  }
  if (given("--engine")) {
    cfg.engine = raw.engine == "full"        ? EngineChoice::FullSpace
                 : raw.engine == "effective" ? EngineChoice::Effective2D
                                             : EngineChoice::Both;
  }
  if (given("--mode")) cfg.mode = raw.mode == "tstar" ? SweepMode::MinimalTime : SweepMode::Fidelity;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    const std::vector<std::string> expanded = expand_config(args);

    CLI::App app{"Adiabatic Deutsch-Jozsa simulator", "adj"};
    app.require_subcommand(1);
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);

    struct Sub {
      const char* name;
      const char* help;
      void (*fn)(const ExperimentConfig&, std::ostream&);
    };
    const Sub subs[] = {
        {"simulate", "Evolve one configuration, report fidelity and a measurement", cmd_simulate},
        {"gap-scan", "Emit s,e0,e1,gap,gap_analytic on a uniform s grid", cmd_gap_scan},
        {"sweep", "Grid over n, variant, epsilon and T (or T*)", cmd_sweep},
        {"classify", "Sample the final (or a given) state and decide constant vs balanced",
         cmd_classify},
    };
    ExperimentConfig cfg;
    RawFlags raw;
    std::vector<CLI::App*> apps;
    for (const auto& s : subs) {
      CLI::App* sub = app.add_subcommand(s.name, s.help);
      add_options(*sub, cfg, raw);
      apps.push_back(sub);
    }

    std::vector<const char*> argv{"adj"};
    for (const auto& a : expanded) argv.push_back(a.c_str());
    try {
      app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? kExitOk : kExitValidation;
    }

    for (std::size_t i = 0; i < apps.size(); ++i) {
      if (!apps[i]->parsed()) continue;
      apply_raw(raw, cfg, *apps[i]);
      subs[i].fn(cfg, out);
      return kExitOk;
    }
    return kExitValidation;
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  }
}

}  // namespace adj::cli
