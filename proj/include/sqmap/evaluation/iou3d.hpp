#pragma once

#include <cstdint>

#include "sqmap/geometry/superquadric.hpp"

namespace sqmap {
namespace eval {

// Exact IoU of two oriented boxes. The intersection volume comes from
// clipping box a's polytope by the six face half-spaces of box b.
// Throws std::invalid_argument on degenerate (zero-volume) boxes.
double iou3d(const geom::OrientedBox3D& a, const geom::OrientedBox3D& b);

// Unbiased sampling estimate over the union's axis-aligned bound; test oracle
// for iou3d.
double iou3d_montecarlo(const geom::OrientedBox3D& a, const geom::OrientedBox3D& b,
                        std::int64_t n_samples, std::uint64_t seed);

}  // namespace eval
}  // namespace sqmap
