#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <stdexcept>

#include "sqmap/geometry/box2d.hpp"
#include "sqmap/geometry/camera.hpp"
#include "sqmap/geometry/pose.hpp"

namespace sqmap {
namespace opt {

inline constexpr double kMaxBoxCoord = 1e6;  // px sanity range

// One associated 2D box detection with its camera context.
struct Observation {
  int frame_id = 0;
  geom::RigidPose cam_from_world;  // T_cw
  geom::CameraIntrinsics intrinsics;
  geom::Box2D box;

  bool valid() const {
    return box.valid() && std::abs(box.xmin) <= kMaxBoxCoord &&
           std::abs(box.xmax) <= kMaxBoxCoord && std::abs(box.ymin) <= kMaxBoxCoord &&
           std::abs(box.ymax) <= kMaxBoxCoord;
  }
};

// Category-conditioned Gaussian prior over the half-extents.
struct ScalePrior {
  int class_id = 0;
  Eigen::Vector3d mu0 = Eigen::Vector3d::Ones();
  Eigen::Matrix3d sigma0 = Eigen::Matrix3d::Identity();

  Eigen::Matrix3d information() const {
    Eigen::LLT<Eigen::Matrix3d> llt(sigma0);
    if (llt.info() != Eigen::Success || mu0.minCoeff() <= 0.0) {
      throw std::invalid_argument("ScalePrior: sigma0 must be SPD and mu0 positive");
    }
    return llt.solve(Eigen::Matrix3d::Identity());
  }
};

enum class ShapeMode { kSuperquadric, kEllipsoid, kCuboid, kNoOptimization };

struct OptimizerConfig {
  double sigma2 = 20.0;  // px^2, per corner coordinate
  int sample_count = 1000;
  int iters_per_round = 20;
  int obs_per_round = 50;
  int final_iters = 200;
  double lr_translation = 0.01;
  double lr_rotation = 0.005;
  double lr_alpha = 0.01;
  double lr_eps = 0.005;
  double adam_beta1 = 0.9;
  double adam_beta2 = 0.999;
  double adam_epsilon = 1e-8;
  bool prior_enabled = true;
  bool freeze_roll_pitch = false;
  ShapeMode shape_mode = ShapeMode::kSuperquadric;

  bool valid() const {
    return sigma2 > 0 && sample_count > 0 && iters_per_round > 0 && obs_per_round > 0 &&
           final_iters > 0;
  }
};

using Vec11 = Eigen::Matrix<double, 11, 1>;

// Parameter slot layout: translation 0..2, rotation increment 3..5,
// alpha 6..8, eps 9..10.
inline constexpr int kSlotTranslation = 0;
inline constexpr int kSlotRotation = 3;
inline constexpr int kSlotAlpha = 6;
inline constexpr int kSlotEps = 9;

}  // namespace opt
}  // namespace sqmap
