#pragma once

#include <Eigen/Core>
#include <cmath>

#include "sqmap/geometry/pose.hpp"

namespace sqmap {
namespace geom {

inline constexpr double kMinHalfExtent = 0.01;
inline constexpr double kMinShapeExponent = 0.1;
inline constexpr double kMaxShapeExponent = 1.9;

// Scale and curvature parameters of a super-quadric in its canonical frame.
struct ShapeParams {
  Eigen::Vector3d alpha = Eigen::Vector3d::Ones();  // half-extents, meters
  double eps1 = 1.0;
  double eps2 = 1.0;

  bool valid() const {
    return alpha.minCoeff() >= kMinHalfExtent && eps1 >= kMinShapeExponent &&
           eps1 <= kMaxShapeExponent && eps2 >= kMinShapeExponent &&
           eps2 <= kMaxShapeExponent;
  }
};

// Full 11-parameter bounding volume: object-to-world pose, half-extents and
// the two shape exponents.
struct SuperQuadricState {
  RigidPose pose;  // T_wo
  Eigen::Vector3d alpha = Eigen::Vector3d::Ones();
  double eps1 = 1.0;
  double eps2 = 1.0;

  ShapeParams shape() const { return {alpha, eps1, eps2}; }
  bool valid() const { return shape().valid() && is_rotation(pose.rotation); }
};

// Clamp shape parameters into their invariant ranges.
Eigen::Vector3d clamp_alpha(const Eigen::Vector3d& alpha);
double clamp_eps(double eps);

// sign(s) * |s|^e
inline double sgnpow(double s, double e) {
  if (s == 0.0) return 0.0;
  const double m = std::pow(std::abs(s), e);
  return s < 0.0 ? -m : m;
}

// Canonical implicit function; 1 on the surface, <1 inside, >1 outside.
// Absolute values keep the fractional powers defined in all octants.
double implicit_value(const ShapeParams& shape, const Eigen::Vector3d& x);

// Parametric surface point at angles (eta, omega),
// eta in [-pi/2, pi/2], omega in [-pi, pi).
Eigen::Vector3d surface_point(const ShapeParams& shape, double eta, double omega);

// Point plus partial derivatives with respect to alpha, eps1 and eps2 at
// fixed angles. d/dalpha is diagonal: column i scales canonical axis i.
struct SurfacePointJacobian {
  Eigen::Vector3d point;
  Eigen::Vector3d d_alpha;  // dpoint_i / dalpha_i
  Eigen::Vector3d d_eps1;
  Eigen::Vector3d d_eps2;
};
SurfacePointJacobian surface_point_jacobian(const ShapeParams& shape, double eta,
                                            double omega);

struct OrientedBox3D {
  RigidPose pose;
  Eigen::Vector3d half_extents = Eigen::Vector3d::Ones();

  bool valid() const { return half_extents.minCoeff() > 0.0; }

  // World-frame corners, all eight sign combinations of the half-extents.
  std::array<Eigen::Vector3d, 8> corners() const;
  double volume() const { return 8.0 * half_extents.prod(); }
};

// The canonical surface is bounded exactly by +-alpha on each axis, so the
// minimum enclosing oriented box shares the pose and uses alpha as extents.
OrientedBox3D enclosing_obb(const SuperQuadricState& q);

}  // namespace geom
}  // namespace sqmap
