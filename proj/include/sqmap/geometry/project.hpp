#pragma once

#include <stdexcept>

#include "sqmap/geometry/box2d.hpp"
#include "sqmap/geometry/camera.hpp"
#include "sqmap/geometry/sampling.hpp"
#include "sqmap/geometry/superquadric.hpp"

namespace sqmap {
namespace geom {

inline constexpr double kMinCameraDepth = 0.05;  // meters

// Raised when any sampled point falls at or behind the near-depth limit;
// the whole observation is unusable for that frame.
class VisibilityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Projected 2D bounding box of the super-quadric: sample the surface,
// transform by T_cw * T_wo, project, take the componentwise box.
Box2D project_quadric(const SuperQuadricState& q, const RigidPose& cam_from_world,
                      const CameraIntrinsics& k, int count);

// Same with a caller-provided angle grid.
Box2D project_quadric_on_grid(const SuperQuadricState& q, const SampleGrid& grid,
                              const RigidPose& cam_from_world,
                              const CameraIntrinsics& k);

// Projected box of an oriented box's eight corners (cuboid-mode projection).
Box2D project_box_corners(const OrientedBox3D& box, const RigidPose& cam_from_world,
                          const CameraIntrinsics& k);

}  // namespace geom
}  // namespace sqmap
