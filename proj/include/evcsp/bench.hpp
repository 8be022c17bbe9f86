#ifndef EVCSP_BENCH_HPP
#define EVCSP_BENCH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "evcsp/cro.hpp"
#include "evcsp/report.hpp"

namespace evcsp {

enum class ExperimentKind { AlphaSweep, SizeScaling, DatasetRun, Convergence };

/// Declarative experiment description, loadable from a JSON config. Seeds are
/// always explicit; nothing in a run touches ambient randomness.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::AlphaSweep;
  std::vector<int> n_list = {50};
  double area_km = 100.0;
  std::vector<double> range_list = {20.0};  // D values
  std::vector<double> alpha_list = {1.0};
  double capacity = 0.5;
  double demand = 1.0;
  std::vector<std::uint64_t> seeds = {1};
  std::vector<std::string> methods = {"method1", "greedy", "cro"};
  int repeats = 1;  // stochastic methods only
  SolveLimits limits;
  CroParams cro;
  std::string distances_path;  // dataset runs: user-supplied matrix file
  bool parallel_cells = true;
};

ExperimentConfig load_experiment_config(const std::string& json_text);
ExperimentConfig load_experiment_config_file(const std::string& path);

struct BenchRow {
  double alpha = 1.0;
  int n = 0;
  double range_km = 0.0;
  std::uint64_t seed = 0;
  std::string method;
  int repeat = 0;
  bool feasible = false;
  double objective = 0.0;
  int stations = 0;
  double time_s = 0.0;
  bool optimal = false;
  Selection x;
};

struct BenchGroup {
  std::string key;  // e.g. "alpha=0.8" or "n=50" or "D=35,alpha=0.8"
  std::string method;
  int cases = 0;
  double mean_objective = 0.0;
  double mean_stations = 0.0;
  double mean_time_s = 0.0;
  // Stochastic methods: averages of the per-case best and worst repeats.
  double mean_best = 0.0;
  double mean_worst = 0.0;
};

struct BenchReport {
  std::vector<BenchRow> rows;
  std::vector<BenchGroup> groups;
  // Per group key: feasible case count and how many of those had every
  // requested method agree on the objective (stochastic methods enter with
  // their best repeat).
  std::vector<std::string> group_keys;
  std::vector<int> feasible_cases;
  std::vector<int> matched_cases;
};

/// Fixed geometry per seed, alpha varied across the grid: feasibility counts
/// shrink monotonically as alpha tightens the coverage constraint.
BenchReport run_alpha_sweep(const ExperimentConfig& config);

/// Timing and objective rows across problem sizes; exact methods honor the
/// limits and mark capped completions non-optimal instead of failing.
BenchReport run_size_scaling(const ExperimentConfig& config);

/// Runs the D x alpha grid on a dataset instance with a user-supplied
/// distance matrix. Cells whose all-ones test fails are marked infeasible.
BenchReport run_dataset(const ExperimentConfig& config, Instance instance,
                        const DistanceMatrix& distances);

struct ConvergenceTrace {
  std::uint64_t seed = 0;
  CroTrace trace;
  double final_objective = 0.0;
  bool converged_by_500 = false;  // final value already reached at FE 500
};

std::vector<ConvergenceTrace> run_convergence(const ExperimentConfig& config);

// CSV and JSON serialization. The row CSV round-trips losslessly (doubles are
// printed in shortest round-trip form, selections as 0/1 strings).
std::string bench_rows_to_csv(const std::vector<BenchRow>& rows);
std::vector<BenchRow> bench_rows_from_csv(const std::string& csv);
std::string bench_report_to_json(const BenchReport& report);
std::string convergence_to_csv(const std::vector<ConvergenceTrace>& traces);

/// Parses a distance-matrix document: {"distance_matrix": [...]}, flat
/// row-major or nested rows.
DistanceMatrix load_distance_matrix(const std::string& json_text, int n);
DistanceMatrix load_distance_matrix_file(const std::string& path, int n);

}  // namespace evcsp

#endif  // EVCSP_BENCH_HPP
