#ifndef EVCSP_FEASIBILITY_HPP
#define EVCSP_FEASIBILITY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "evcsp/instance.hpp"

namespace evcsp {

/// Boolean selection vector x; x[i] == 1 means a station is built at node i.
using Selection = std::vector<std::uint8_t>;

/// Sum of c_i over selected nodes, accumulated in index order so equal
/// selections produce bit-identical objectives everywhere in the kit.
double objective_of(const Instance& inst, const Selection& x);

int station_count(const Selection& x);

std::vector<int> selected_nodes(const Selection& x);

struct FeasibilityReport {
  bool demand_ok = false;
  std::vector<int> violated_nodes;  // 0-based; 1-based in serialized form
  bool connectivity_ok = false;
  bool c1_ok = false;
  bool overall = false;  // demand_ok && connectivity_ok
};

/// Coverage constraint: sum of f_j over selected j in N_i must reach F_i for
/// every node i. Exact >= on the stored reals, violators collected.
bool check_demand(const Instance& inst, const ReachGraph& reach,
                  const Selection& x, std::vector<int>* violated = nullptr);

/// Spanning condition: the subgraph induced by the selected nodes has at most
/// one connected component. Empty and singleton selections count as connected.
bool check_connectivity(const ReachGraph& reach, const Selection& x);

/// Mutual-reachability condition. The default reading permits j == i, which
/// makes the condition vacuous for any selection; `strict` demands another
/// selected node within range.
bool check_c1(const ReachGraph& reach, const Selection& x, bool strict = false);

FeasibilityReport is_feasible(const Instance& inst, const ReachGraph& reach,
                              const Selection& x);

/// Whole-instance feasibility via the all-ones test: with positive demands,
/// some feasible selection exists iff the all-ones vector is feasible.
bool instance_feasible(const Instance& inst, const ReachGraph& reach);

/// Witness that the selected set is connected from `root`: an integral
/// assignment of the single-commodity flow variables. The source holds n
/// units, pushes one unit into every selected node, and keeps the residue.
struct ArcFlow {
  int from = 0;
  int to = 0;
  long long flow = 0;
};

struct FlowCertificate {
  int root = 0;
  long long source_residue = 0;  // units never leaving the source
  long long source_flow = 0;     // units on the source arc into root
  std::vector<ArcFlow> arc_flows;  // directed arcs of the reach graph
};

/// Builds a certificate along a breadth-first search tree of the induced
/// subgraph: each tree arc carries the number of selected nodes in the
/// subtree below it. Returns nullopt when some selected node is unreachable
/// from the root. Throws if the root is not selected.
std::optional<FlowCertificate> construct_flow_certificate(
    const ReachGraph& reach, const Selection& x, int root);

/// Re-checks every flow equality and bound with exact integer arithmetic.
/// Accepts any certificate, not just constructed ones.
bool verify_flow_certificate(const FlowCertificate& cert,
                             const ReachGraph& reach, const Selection& x,
                             int n);

std::string feasibility_report_to_json(const FeasibilityReport& report);
std::string flow_certificate_to_json(const FlowCertificate& cert);

}  // namespace evcsp

#endif  // EVCSP_FEASIBILITY_HPP
