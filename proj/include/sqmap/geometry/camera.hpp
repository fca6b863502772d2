#pragma once

#include <Eigen/Core>
#include <stdexcept>

namespace sqmap {
namespace geom {

struct CameraIntrinsics {
  double fx = 0, fy = 0;
  double cx = 0, cy = 0;
  int width = 0, height = 0;

  bool valid() const { return fx > 0 && fy > 0 && width > 0 && height > 0; }
};

// Pinhole projection of a camera-frame point. The point must lie in front of
// the camera (z > 0).
inline Eigen::Vector2d project_point(const CameraIntrinsics& k, const Eigen::Vector3d& x_cam) {
  if (!(x_cam.z() > 0.0)) {
    throw std::invalid_argument("project_point: point is behind the camera");
  }
  return {k.fx * x_cam.x() / x_cam.z() + k.cx, k.fy * x_cam.y() / x_cam.z() + k.cy};
}

}  // namespace geom
}  // namespace sqmap
