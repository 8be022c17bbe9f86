#ifndef EVCSP_CRO_HPP
#define EVCSP_CRO_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "evcsp/report.hpp"

namespace evcsp {

enum class Perturbation {
  PaperPure,  // reactions apply greedy elimination directly
  Perturbed,  // add one random reach-neighbor of the selection first
};

struct CroParams {
  long long fe_limit = 2000;
  double initial_ke = 10.0;
  int population = 40;
  double initial_buffer = 10.0;
  double collision_ratio = 0.5;
  double synthesis_threshold = 0.5;
  long long decomposition_threshold = 20;
  double ke_loss_rate = 0.9;
  double unity_seed_fraction = 0.10;
  Perturbation perturbation = Perturbation::Perturbed;
};

struct Molecule {
  Selection x;
  double pe = 0.0;  // potential energy == objective of x
  double ke = 0.0;
  long long hits = 0;
  double best_pe = 0.0;      // lowest PE this molecule has held
  long long best_hit = 0;    // hit index at which best_pe was reached
};

struct CroTrace {
  // One (FE index, best objective so far) point per objective evaluation.
  std::vector<std::pair<long long, double>> best_by_fe;
  long long on_wall = 0;
  long long decompositions = 0;
  long long intermolecular = 0;
  long long syntheses = 0;
};

struct CroResult {
  SolveReport report;
  CroTrace trace;
};

/// Method IV: chemical reaction optimization over feasible selections. Runs
/// until the function-evaluation limit, returns the best solution seen. With
/// unity seeding the first greedy pass of an all-ones molecule reproduces
/// Method II, so the result never trails greedy. Deterministic per seed.
/// Infeasible instances (all-ones test) return an infeasible-marked report.
CroResult cro_solve(const Instance& inst, const ReachGraph& reach,
                    const CroParams& params, std::uint64_t seed);

// Energy bookkeeping of the four elementary reactions, exposed for direct
// testing. Each returns false on rejection and leaves outputs untouched.

struct OnWallEnergy {
  double ke_next = 0.0;
  double buffer_gain = 0.0;
};

/// Accept iff pe + ke >= pe_next; the survivor keeps fraction q of the
/// surplus as kinetic energy and the rest feeds the central buffer.
bool on_wall_energy(double pe, double ke, double pe_next, double q,
                    OnWallEnergy* out);

struct DecompositionEnergy {
  double ke1 = 0.0;
  double ke2 = 0.0;
  double buffer_draw = 0.0;  // debited from the buffer on acceptance
};

/// Accept iff pe + ke plus the buffer assistance (buffer * e1 * e2, drawn
/// only when needed) covers both child PEs; the surplus splits by `split`.
bool decomposition_energy(double pe, double ke, double pe1, double pe2,
                          double buffer, double e1, double e2, double split,
                          DecompositionEnergy* out);

struct PairEnergy {
  double ke1 = 0.0;
  double ke2 = 0.0;
};

/// Accept iff total energy of both reactants covers both new PEs; the
/// surplus splits by `split`. No buffer interaction.
bool intermolecular_energy(double pe1, double ke1, double pe2, double ke2,
                           double pe1_next, double pe2_next, double split,
                           PairEnergy* out);

/// Accept iff total energy of both reactants covers the merged PE; the
/// remainder becomes the merged molecule's kinetic energy.
bool synthesis_energy(double pe1, double ke1, double pe2, double ke2,
                      double pe_next, double* ke_next);

/// Adds one uniformly random unselected reach-neighbor of the current
/// selection (feasibility-preserving); identity when none exists.
Selection perturb_selection(const ReachGraph& reach, Selection x, Rng& rng);

}  // namespace evcsp

#endif  // EVCSP_CRO_HPP
