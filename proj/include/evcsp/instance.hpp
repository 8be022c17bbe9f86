#ifndef EVCSP_INSTANCE_HPP
#define EVCSP_INSTANCE_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "evcsp/util.hpp"

namespace evcsp {

enum class Mode { Geometric, Explicit };

struct RoadEdge {
  int i = 0;  // 0-based endpoints
  int j = 0;
  double length_km = 0.0;
};

/// One city instance: node economics (cost c_i, capacity f_i, demand F_i),
/// the EV range D, the tolerance alpha, and a distance payload.
///
/// Geometric instances derive distances from coordinates (complete Euclidean),
/// a road-edge list, or a verbatim matrix. Explicit instances skip distances
/// entirely and carry the reachability adjacency and the per-node coverage
/// neighborhoods directly; the vertex-cover reduction emits these.
///
/// All node indices in the C++ API are 0-based. Documents, reports, and error
/// messages use 1-based ids.
struct Instance {
  std::string name;
  Mode mode = Mode::Geometric;
  int n = 0;
  std::vector<double> cost;      // c_i; > 0 (explicit mode admits 0)
  std::vector<double> capacity;  // f_i; >= 0
  std::vector<double> demand;    // F_i; >= 0
  double range_km = 0.0;         // D
  double alpha = 1.0;            // in (0, 1]

  // Geometric payload. Coordinates may be absent when a distance matrix or a
  // road-edge list defines the metric.
  bool has_coords = false;
  std::vector<double> x_km, y_km;
  bool complete_euclidean = false;
  std::vector<RoadEdge> road_edges;
  std::vector<double> distance_matrix;  // row-major n*n; empty if unused

  // Explicit payload.
  std::vector<std::pair<int, int>> reach_edges;     // i < j, deduplicated
  std::vector<std::vector<int>> neighborhoods;      // sorted, contains self

  double total_cost() const;

  /// Checks every structural invariant; throws ValidationError with a field
  /// path on the first violation.
  void validate() const;
};

/// Parses and validates an instance document (JSON schema in the README).
Instance load_instance(const std::string& json_text);
Instance load_instance_file(const std::string& path);

/// Serializes to the document schema. load(save(inst)) is equivalent to inst.
std::string save_instance(const Instance& inst);

/// Random geometric instance: n nodes uniform in an area_km x area_km square,
/// costs uniform in (0,1], constant capacity/demand, complete-Euclidean
/// distances. Byte-identical output for identical arguments.
Instance generate_random(int n, double area_km, double range_km, double alpha,
                         double capacity, double demand, std::uint64_t seed);

/// All-pairs shortest-path distances, symmetric with zero diagonal.
/// `complete` is false when some pair is unreachable (entry = +infinity).
struct DistanceMatrix {
  int n = 0;
  std::vector<double> d;  // row-major
  bool complete = true;

  double at(int i, int j) const { return d[static_cast<std::size_t>(i) * n + j]; }
  double& at(int i, int j) { return d[static_cast<std::size_t>(i) * n + j]; }
};

/// Geometric mode only. Complete-Euclidean instances get the coordinate
/// metric, matrix-backed instances get the matrix verbatim, road graphs get
/// repeated Dijkstra over the edge list.
DistanceMatrix shortest_paths(const Instance& inst);

/// The derived graph over candidate sites: an edge wherever d(i,j) <= D, and
/// the coverage neighborhood N_i = {j : d(i,j) <= alpha*D} (self included).
/// Threshold comparisons are exact; instance authors control the distances.
struct ReachGraph {
  int n = 0;
  std::vector<std::vector<int>> adj;           // sorted neighbor lists
  std::vector<std::pair<int, int>> edges;      // undirected, i < j
  std::vector<std::vector<int>> neighborhood;  // N_i, sorted, contains i
  std::vector<int> hops;  // road-graph hop counts, row-major; empty in
                          // explicit mode; -1 marks unreachable pairs

  bool has_edge(int i, int j) const;
  int degree(int i) const { return static_cast<int>(adj[i].size()); }
};

ReachGraph build_reach_graph(const Instance& inst, const DistanceMatrix& d);

/// Convenience: derives the matrix itself for geometric instances, passes the
/// explicit payload through otherwise.
ReachGraph build_reach_graph(const Instance& inst);

}  // namespace evcsp

#endif  // EVCSP_INSTANCE_HPP
