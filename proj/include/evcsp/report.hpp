#ifndef EVCSP_REPORT_HPP
#define EVCSP_REPORT_HPP

#include <limits>
#include <string>
#include <vector>

#include "evcsp/feasibility.hpp"

namespace evcsp {

/// Resource limits for the exact solvers. Zero means unlimited. For the
/// multi-root methods the node budget and the wall clock are shared across
/// roots. `parallel` selects the OpenMP path; the serial path is kept as the
/// reference implementation and produces identical objectives.
struct SolveLimits {
  long long node_limit = 0;
  double time_limit_s = 0.0;
  bool parallel = true;
};

struct RootStat {
  int root = 0;           // 0-based
  bool improved = false;  // this root's search improved the shared incumbent
  double objective = std::numeric_limits<double>::infinity();
  long long nodes = 0;
};

struct SolveReport {
  std::string method;
  bool feasible = false;
  Selection x;
  double objective = std::numeric_limits<double>::infinity();
  int stations = 0;
  double time_s = 0.0;
  long long nodes_explored = 0;
  bool optimal = false;  // search finished without hitting a resource limit
  std::vector<RootStat> per_root;
};

std::string solve_report_to_json(const SolveReport& report);

/// One CSV line: method,objective,stations,time_s,optimal. Infeasible runs
/// leave objective and stations empty.
std::string solve_report_csv_header();
std::string solve_report_csv_row(const SolveReport& report);

}  // namespace evcsp

#endif  // EVCSP_REPORT_HPP
