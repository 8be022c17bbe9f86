#ifndef EVCSP_GREEDY_HPP
#define EVCSP_GREEDY_HPP

#include <vector>

#include "evcsp/report.hpp"

namespace evcsp {

/// Selected nodes whose individual removal keeps the induced subgraph
/// connected, i.e. the selected nodes that are not articulation points.
/// A singleton selection is removable by convention (the empty graph counts
/// as connected). Throws on a disconnected selection.
std::vector<int> removable_set(const ReachGraph& reach, const Selection& x);

struct GreedyTraceRow {
  int iteration = 0;
  int removed_node = 0;  // 0-based
  double objective = 0.0;
};

/// Greedy node elimination from `x0`: repeatedly recompute the removable set,
/// try members in descending cost order (ties to the lower index), accept the
/// first removal that keeps demand satisfied, stop when none survives. The
/// result is feasible and 1-minimal. `protect` (if >= 0) is never offered for
/// removal. Throws when x0 is infeasible.
Selection greedy_from(const Instance& inst, const ReachGraph& reach,
                      Selection x0, int protect = -1,
                      std::vector<GreedyTraceRow>* trace = nullptr);

/// Method II: greedy elimination from the all-ones vector. Returns an
/// infeasible-marked report when the all-ones test fails.
SolveReport greedy(const Instance& inst, const ReachGraph& reach,
                   std::vector<GreedyTraceRow>* trace = nullptr);

/// Random feasible selection: from all-ones, attempt a uniform-random number
/// of removal rounds in [1, n]; each round draws a uniform selected node and
/// keeps the removal only if connectivity and demand both survive. Always
/// feasible; deterministic given the generator state. Throws when the
/// instance is infeasible.
Selection random_solution(const Instance& inst, const ReachGraph& reach,
                          Rng& rng);

}  // namespace evcsp

#endif  // EVCSP_GREEDY_HPP
