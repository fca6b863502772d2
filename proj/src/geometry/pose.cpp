#include "sqmap/geometry/pose.hpp"

#include <Eigen/SVD>
#include <stdexcept>

namespace sqmap {
namespace geom {

bool is_rotation(const Eigen::Matrix3d& r, double tol) {
  const Eigen::Matrix3d gram = r.transpose() * r;
  if ((gram - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff() > tol) {
    return false;
  }
  return std::abs(r.determinant() - 1.0) <= tol;
}

void ensure_rotation(const Eigen::Matrix3d& r, double tol) {
  if (!is_rotation(r, tol)) {
    throw std::invalid_argument("rotation matrix is not orthonormal with det +1");
  }
}

RigidPose se3_compose(const RigidPose& a, const RigidPose& b) {
  ensure_rotation(a.rotation);
  ensure_rotation(b.rotation);
  RigidPose out;
  out.rotation = a.rotation * b.rotation;
  out.translation = a.rotation * b.translation + a.translation;
  return out;
}

RigidPose se3_inverse(const RigidPose& p) {
  ensure_rotation(p.rotation);
  RigidPose out;
  out.rotation = p.rotation.transpose();
  out.translation = -(out.rotation * p.translation);
  return out;
}

Eigen::Vector3d se3_transform(const RigidPose& p, const Eigen::Vector3d& x) {
  ensure_rotation(p.rotation);
  return p.apply(x);
}

Eigen::Matrix3d rotation_exp(const Eigen::Vector3d& axis_angle) {
  const double angle = axis_angle.norm();
  if (angle < 1e-14) {
    return Eigen::Matrix3d::Identity() + skew(axis_angle);
  }
  return Eigen::AngleAxisd(angle, axis_angle / angle).toRotationMatrix();
}

Eigen::Matrix3d nearest_rotation(const Eigen::Matrix3d& m) {
  Eigen::JacobiSVD<Eigen::Matrix3d> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  Eigen::Matrix3d u = svd.matrixU();
  Eigen::Matrix3d v = svd.matrixV();
  Eigen::Matrix3d r = u * v.transpose();
  if (r.determinant() < 0) {
    u.col(2) *= -1.0;
    r = u * v.transpose();
  }
  return r;
}

}  // namespace geom
}  // namespace sqmap
