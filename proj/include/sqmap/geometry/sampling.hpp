#pragma once

#include <Eigen/Core>
#include <vector>

#include "sqmap/geometry/superquadric.hpp"

namespace sqmap {
namespace geom {

// Parametric angle grid; parallel arrays of (eta, omega).
struct SampleGrid {
  std::vector<double> eta;
  std::vector<double> omega;

  std::size_t size() const { return eta.size(); }
};

// Approximately equal-distance angle grid with ~count points. Latitude bands
// are spaced by equal arc length along the meridian; each ring carries a
// point budget proportional to its perimeter, placed at equal arc length.
// The six axis extremes and both poles are always present, each exactly once.
// Throws std::invalid_argument when count < 26.
SampleGrid sample_angles(const ShapeParams& shape, int count);

// Surface points at the grid of sample_angles.
std::vector<Eigen::Vector3d> sample_surface(const ShapeParams& shape, int count);

std::vector<Eigen::Vector3d> surface_points(const ShapeParams& shape,
                                            const SampleGrid& grid);

}  // namespace geom
}  // namespace sqmap
