#ifndef EVCSP_EXACT_HPP
#define EVCSP_EXACT_HPP

#include <string>
#include <utility>
#include <vector>

#include "evcsp/report.hpp"

namespace evcsp {

/// Minimum-cost selection containing `root` (0-based) that satisfies demand
/// and induces a connected subgraph, or an infeasible marker. Combinatorial
/// branch-and-bound: branch on the most expensive undecided node (deselect
/// first), prune on demand that cannot be met even with every undecided node
/// selected, on forced-in nodes split across components of the graph induced
/// by forced-in plus undecided, and on a packing lower bound against the
/// incumbent. The incumbent starts from a root-protected greedy pass.
SolveReport solve_rooted(const Instance& inst, const ReachGraph& reach,
                         int root, const SolveLimits& limits = {});

/// Method I: global optimum as the minimum of the rooted problems over all
/// roots. Roots partition the solution space by lowest selected index and
/// share one incumbent, so the reported optimum matches the naive min while
/// per-root breakdowns only record improvements.
SolveReport method1(const Instance& inst, const ReachGraph& reach,
                    const SolveLimits& limits = {});

/// Method III: requires every demand positive (throws otherwise, naming the
/// node). Picks the pivot with minimum reach-graph degree (ties to the lower
/// index) and takes the minimum of the rooted problems over the pivot's
/// coverage neighborhood. Objective equals Method I's.
SolveReport method3(const Instance& inst, const ReachGraph& reach,
                    const SolveLimits& limits = {});

/// Exhaustive scan of all 2^n selections. The oracle for everything else.
SolveReport brute_force(const Instance& inst, const ReachGraph& reach,
                        int cap = 20);

/// Rooted flow MILP in LP text format: demand rows, source balance, arc
/// capacity couplings, per-node flow conservation, sink total, root fixing;
/// binaries x_<i>, arc flows y_<j>_<k> (two directed arcs per edge), source
/// arc y_0_<root>, residue x0. Names are 1-based.
std::string export_milp(const Instance& inst, const ReachGraph& reach,
                        int root);

/// Vertex-cover input for the hardness-reduction harness.
struct ReductionInput {
  int node_count = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based, simple
  int cost_bound = 0;
};

/// Builds the reduced placement instance (explicit mode): one node per vertex
/// and one per edge, a clique on the vertices, edge-nodes tied to their
/// endpoints, unit costs on vertices and zero on edge-nodes, unit capacity on
/// edge-nodes only, and every coverage neighborhood equal to the edge-node
/// set (plus the node itself, which carries no capacity). The minimum cover
/// size of the input equals the reduced optimum whenever the input has at
/// least two edges; a single isolated edge-node is already feasible at zero
/// cost, so single-edge inputs fall outside the equivalence.
Instance reduce_vertex_cover(const ReductionInput& input);

}  // namespace evcsp

#endif  // EVCSP_EXACT_HPP
