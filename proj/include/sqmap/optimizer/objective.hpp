#pragma once

#include <vector>

#include "sqmap/geometry/project.hpp"
#include "sqmap/geometry/sampling.hpp"
#include "sqmap/geometry/superquadric.hpp"
#include "sqmap/optimizer/types.hpp"

namespace sqmap {
namespace opt {

struct ObjectiveValue {
  double value = 0.0;
  int skipped = 0;  // observations rejected for visibility
};

struct ObjectiveGradient {
  double value = 0.0;
  Vec11 grad = Vec11::Zero();
  int skipped = 0;
};

// Angle grid snapshot the objective and subgradient are evaluated on. The
// grid is treated as a constant: derivatives flow through the parametric
// surface at fixed angles, matching the finite differences of the on-grid
// objective. Unused in cuboid mode.
geom::SampleGrid objective_grid(const geom::SuperQuadricState& q,
                                const OptimizerConfig& cfg);

// Sum of squared corner residuals over 2 sigma^2 plus the Gaussian scale
// prior (when enabled). Observations that fail the visibility check
// contribute zero and are tallied; throws std::runtime_error when every
// observation is skipped.
ObjectiveValue neg_log_posterior_on_grid(const geom::SuperQuadricState& q,
                                         const geom::SampleGrid& grid,
                                         const std::vector<Observation>& obs,
                                         const ScalePrior& prior,
                                         const OptimizerConfig& cfg);

ObjectiveGradient gradient_on_grid(const geom::SuperQuadricState& q,
                                   const geom::SampleGrid& grid,
                                   const std::vector<Observation>& obs,
                                   const ScalePrior& prior, const OptimizerConfig& cfg);

// Convenience entry points that snapshot the grid from q.
double neg_log_posterior(const geom::SuperQuadricState& q,
                         const std::vector<Observation>& obs, const ScalePrior& prior,
                         const OptimizerConfig& cfg);

Vec11 gradient(const geom::SuperQuadricState& q, const std::vector<Observation>& obs,
               const ScalePrior& prior, const OptimizerConfig& cfg);

// Smallest gap between an extremal projected coordinate and its runner-up
// across all observations; degeneracy probe for the subgradient tie-break.
double min_extremum_margin(const geom::SuperQuadricState& q,
                           const geom::SampleGrid& grid,
                           const std::vector<Observation>& obs,
                           const OptimizerConfig& cfg);

}  // namespace opt
}  // namespace sqmap
