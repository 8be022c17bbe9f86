#ifndef EVCSP_HK_DATA_HPP
#define EVCSP_HK_DATA_HPP

#include <array>

#include "evcsp/instance.hpp"

namespace evcsp {

/// One row of the embedded Hong Kong district table (2006 census figures):
/// population drives the demand, median monthly income per capita is the
/// construction cost, and the capacity column is taken verbatim.
struct HkDistrict {
  double population_k;
  double density_per_km2;
  double income_hkd;
  double capacity;
};

const std::array<HkDistrict, 18>& hk_table();

/// The 18-district placement instance. Demand F_i = population (thousands),
/// cost c_i = median income, capacity f_i = table value. The instance carries
/// no distances: the real inter-district road distances are not bundled and
/// must be supplied as a matrix file (D and alpha default to 30 km and 1).
Instance hk_instance();

/// A stand-in distance matrix for smoke tests only: straight-line distances
/// between approximate district centers scaled by a 1.3 road-winding factor.
/// NOT the road network the original study measured; results computed with it
/// are not comparable to published figures.
DistanceMatrix hk_synthetic_distances();

}  // namespace evcsp

#endif  // EVCSP_HK_DATA_HPP
