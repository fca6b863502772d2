#include "sqmap/geometry/superquadric.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqmap {
namespace geom {
namespace {

// Below this magnitude a trig factor is treated as exactly zero so that axis
// extremes and poles come out exact.
constexpr double kTrigSnap = 1e-14;

double snapped(double v) { return std::abs(v) < kTrigSnap ? 0.0 : v; }

// x * ln|c| with the 0 * -inf limit resolved to 0.
double log_weight(double x, double c) {
  if (x == 0.0 || c == 0.0) return 0.0;
  return x * std::log(std::abs(c));
}

}  // namespace

Eigen::Vector3d clamp_alpha(const Eigen::Vector3d& alpha) {
  return alpha.cwiseMax(kMinHalfExtent);
}

double clamp_eps(double eps) {
  return std::clamp(eps, kMinShapeExponent, kMaxShapeExponent);
}

double implicit_value(const ShapeParams& shape, const Eigen::Vector3d& x) {
  if (!x.allFinite()) {
    throw std::invalid_argument("implicit_value: non-finite input point");
  }
  const double tx = std::pow(std::abs(x.x()) / shape.alpha.x(), 2.0 / shape.eps2);
  const double ty = std::pow(std::abs(x.y()) / shape.alpha.y(), 2.0 / shape.eps2);
  const double tz = std::pow(std::abs(x.z()) / shape.alpha.z(), 2.0 / shape.eps1);
  return std::pow(tx + ty, shape.eps2 / shape.eps1) + tz;
}

Eigen::Vector3d surface_point(const ShapeParams& shape, double eta, double omega) {
  const double ce = snapped(std::cos(eta));
  const double se = snapped(std::sin(eta));
  const double co = snapped(std::cos(omega));
  const double so = snapped(std::sin(omega));
  const double u = sgnpow(ce, shape.eps1);
  return {shape.alpha.x() * u * sgnpow(co, shape.eps2),
          shape.alpha.y() * u * sgnpow(so, shape.eps2),
          shape.alpha.z() * sgnpow(se, shape.eps1)};
}

SurfacePointJacobian surface_point_jacobian(const ShapeParams& shape, double eta,
                                            double omega) {
  const double ce = snapped(std::cos(eta));
  const double se = snapped(std::sin(eta));
  const double co = snapped(std::cos(omega));
  const double so = snapped(std::sin(omega));
  const double u = sgnpow(ce, shape.eps1);
  const double px = shape.alpha.x() * u * sgnpow(co, shape.eps2);
  const double py = shape.alpha.y() * u * sgnpow(so, shape.eps2);
  const double pz = shape.alpha.z() * sgnpow(se, shape.eps1);

  SurfacePointJacobian jac;
  jac.point = {px, py, pz};
  jac.d_alpha = {px / shape.alpha.x(), py / shape.alpha.y(), pz / shape.alpha.z()};
  jac.d_eps1 = {log_weight(px, ce), log_weight(py, ce), log_weight(pz, se)};
  jac.d_eps2 = {log_weight(px, co), log_weight(py, so), 0.0};
  return jac;
}

std::array<Eigen::Vector3d, 8> OrientedBox3D::corners() const {
  std::array<Eigen::Vector3d, 8> out;
  int i = 0;
  for (double sx : {-1.0, 1.0}) {
    for (double sy : {-1.0, 1.0}) {
      for (double sz : {-1.0, 1.0}) {
        out[i++] = pose.apply(half_extents.cwiseProduct(Eigen::Vector3d(sx, sy, sz)));
      }
    }
  }
  return out;
}

OrientedBox3D enclosing_obb(const SuperQuadricState& q) {
  return {q.pose, q.alpha};
}

}  // namespace geom
}  // namespace sqmap
