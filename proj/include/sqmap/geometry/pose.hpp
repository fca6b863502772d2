#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>

namespace sqmap {
namespace geom {

// Rigid transform y = R * x + t. Rotation must be orthonormal with det +1.
struct RigidPose {
  Eigen::Matrix3d rotation = Eigen::Matrix3d::Identity();
  Eigen::Vector3d translation = Eigen::Vector3d::Zero();

  static RigidPose identity() { return {}; }

  Eigen::Vector3d apply(const Eigen::Vector3d& x) const {
    return rotation * x + translation;
  }
};

bool is_rotation(const Eigen::Matrix3d& r, double tol = 1e-9);

// Throws std::invalid_argument when the rotation block is not orthonormal.
void ensure_rotation(const Eigen::Matrix3d& r, double tol = 1e-9);

RigidPose se3_compose(const RigidPose& a, const RigidPose& b);
RigidPose se3_inverse(const RigidPose& p);
Eigen::Vector3d se3_transform(const RigidPose& p, const Eigen::Vector3d& x);

// Exponential map of an axis-angle increment.
Eigen::Matrix3d rotation_exp(const Eigen::Vector3d& axis_angle);

// Nearest rotation in Frobenius norm (orthogonal polar factor, det +1).
Eigen::Matrix3d nearest_rotation(const Eigen::Matrix3d& m);

inline Eigen::Matrix3d skew(const Eigen::Vector3d& v) {
  Eigen::Matrix3d s;
  s << 0, -v.z(), v.y(), v.z(), 0, -v.x(), -v.y(), v.x(), 0;
  return s;
}

}  // namespace geom
}  // namespace sqmap
