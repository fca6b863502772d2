#include "sqmap/geometry/project.hpp"

#include <vector>

namespace sqmap {
namespace geom {
namespace {

Box2D box_of_camera_points(const std::vector<Eigen::Vector3d>& cam_pts,
                           const CameraIntrinsics& k) {
  std::vector<Eigen::Vector2d> px;
  px.reserve(cam_pts.size());
  for (const auto& p : cam_pts) {
    if (p.z() <= kMinCameraDepth) {
      throw VisibilityError("sampled point at or behind the near-depth limit");
    }
    px.push_back(project_point(k, p));
  }
  return box_of_points(px);
}

}  // namespace

Box2D project_quadric_on_grid(const SuperQuadricState& q, const SampleGrid& grid,
                              const RigidPose& cam_from_world,
                              const CameraIntrinsics& k) {
  const Eigen::Matrix3d r_co = cam_from_world.rotation * q.pose.rotation;
  const Eigen::Vector3d t_co =
      cam_from_world.rotation * q.pose.translation + cam_from_world.translation;
  std::vector<Eigen::Vector3d> cam_pts(grid.size());
  const ShapeParams shape = q.shape();
  for (std::size_t i = 0; i < grid.size(); ++i) {
    cam_pts[i] = r_co * surface_point(shape, grid.eta[i], grid.omega[i]) + t_co;
  }
  return box_of_camera_points(cam_pts, k);
}

Box2D project_quadric(const SuperQuadricState& q, const RigidPose& cam_from_world,
                      const CameraIntrinsics& k, int count) {
  return project_quadric_on_grid(q, sample_angles(q.shape(), count), cam_from_world, k);
}

Box2D project_box_corners(const OrientedBox3D& box, const RigidPose& cam_from_world,
                          const CameraIntrinsics& k) {
  std::vector<Eigen::Vector3d> cam_pts;
  cam_pts.reserve(8);
  for (const auto& c : box.corners()) {
    cam_pts.push_back(cam_from_world.apply(c));
  }
  return box_of_camera_points(cam_pts, k);
}

}  // namespace geom
}  // namespace sqmap
