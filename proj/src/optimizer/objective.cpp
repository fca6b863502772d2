#include "sqmap/optimizer/objective.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace sqmap {
namespace opt {
namespace {

using geom::SampleGrid;
using geom::SuperQuadricState;

struct ExtremeSelection {
  bool visible = false;
  std::array<double, 4> coords{};   // xmin, xmax, ymin, ymax
  std::array<std::size_t, 4> idx{};  // winning sample per coordinate
  double margin = std::numeric_limits<double>::infinity();
};

// Canonical-frame sample set; either the angle grid or the eight box corners
// in cuboid mode.
struct SamplePoints {
  std::vector<Eigen::Vector3d> pts;
  bool cuboid = false;
  const SampleGrid* grid = nullptr;
};

SamplePoints make_sample_points(const SuperQuadricState& q, const SampleGrid& grid,
                                const OptimizerConfig& cfg) {
  SamplePoints sp;
  if (cfg.shape_mode == ShapeMode::kCuboid) {
    sp.cuboid = true;
    sp.pts.reserve(8);
    for (double sx : {-1.0, 1.0}) {
      for (double sy : {-1.0, 1.0}) {
        for (double sz : {-1.0, 1.0}) {
          sp.pts.push_back(q.alpha.cwiseProduct(Eigen::Vector3d(sx, sy, sz)));
        }
      }
    }
  } else {
    sp.grid = &grid;
    sp.pts = geom::surface_points(q.shape(), grid);
  }
  return sp;
}

// Projects all samples and picks the four extremal coordinates, ties broken
// by the lowest sample index. Also records the distance to the runner-up.
ExtremeSelection select_extremes(const SamplePoints& sp, const Eigen::Matrix3d& r_co,
                                 const Eigen::Vector3d& t_co,
                                 const geom::CameraIntrinsics& k) {
  ExtremeSelection sel;
  const std::size_t n = sp.pts.size();
  std::vector<double> u(n), v(n);
  for (std::size_t j = 0; j < n; ++j) {
    const Eigen::Vector3d p = r_co * sp.pts[j] + t_co;
    if (p.z() <= geom::kMinCameraDepth) {
      return sel;  // frame unusable
    }
    u[j] = k.fx * p.x() / p.z() + k.cx;
    v[j] = k.fy * p.y() / p.z() + k.cy;
  }
  sel.visible = true;
  const std::array<const std::vector<double>*, 4> series{&u, &u, &v, &v};
  const std::array<bool, 4> want_max{false, true, false, true};
  for (int c = 0; c < 4; ++c) {
    const auto& s = *series[c];
    std::size_t best = 0;
    double runner_up = want_max[c] ? -std::numeric_limits<double>::infinity()
                                   : std::numeric_limits<double>::infinity();
    for (std::size_t j = 1; j < n; ++j) {
      const bool better = want_max[c] ? s[j] > s[best] : s[j] < s[best];
      if (better) {
        runner_up = s[best];
        best = j;
      } else {
        runner_up = want_max[c] ? std::max(runner_up, s[j]) : std::min(runner_up, s[j]);
      }
    }
    sel.coords[c] = s[best];
    sel.idx[c] = best;
    if (std::isfinite(runner_up)) {
      sel.margin = std::min(sel.margin, std::abs(s[best] - runner_up));
    }
  }
  return sel;
}

struct Evaluation {
  double value = 0.0;
  Vec11 grad = Vec11::Zero();
  int skipped = 0;
  double min_margin = std::numeric_limits<double>::infinity();
};

Evaluation evaluate(const SuperQuadricState& q, const SampleGrid& grid,
                    const std::vector<Observation>& obs, const ScalePrior& prior,
                    const OptimizerConfig& cfg, bool want_grad) {
  if (!cfg.valid()) {
    throw std::invalid_argument("OptimizerConfig invalid");
  }
  const SamplePoints sp = make_sample_points(q, grid, cfg);
  Evaluation ev;
  int usable = 0;
  for (const auto& o : obs) {
    const Eigen::Matrix3d r_co = o.cam_from_world.rotation * q.pose.rotation;
    const Eigen::Vector3d t_co =
        o.cam_from_world.rotation * q.pose.translation + o.cam_from_world.translation;
    const ExtremeSelection sel = select_extremes(sp, r_co, t_co, o.intrinsics);
    if (!sel.visible) {
      ++ev.skipped;
      continue;
    }
    ++usable;
    ev.min_margin = std::min(ev.min_margin, sel.margin);
    const std::array<double, 4> detected{o.box.xmin, o.box.xmax, o.box.ymin, o.box.ymax};
    for (int c = 0; c < 4; ++c) {
      const double e = sel.coords[c] - detected[c];
      ev.value += e * e / (2.0 * cfg.sigma2);
      if (!want_grad || e == 0.0) continue;

      const double w = e / cfg.sigma2;
      const std::size_t j = sel.idx[c];
      const Eigen::Vector3d p_cam = r_co * sp.pts[j] + t_co;
      const double z = p_cam.z();
      Eigen::Vector3d g_cam;
      if (c < 2) {
        g_cam = {o.intrinsics.fx / z, 0.0, -o.intrinsics.fx * p_cam.x() / (z * z)};
      } else {
        g_cam = {0.0, o.intrinsics.fy / z, -o.intrinsics.fy * p_cam.y() / (z * z)};
      }
      const Eigen::Vector3d h = o.cam_from_world.rotation.transpose() * g_cam;
      const Eigen::Vector3d p_rot = q.pose.rotation * sp.pts[j];
      ev.grad.segment<3>(kSlotTranslation) += w * h;
      ev.grad.segment<3>(kSlotRotation) += w * p_rot.cross(h);
      const Eigen::Vector3d m = q.pose.rotation.transpose() * h;
      if (sp.cuboid) {
        const Eigen::Vector3d signs = sp.pts[j].cwiseQuotient(q.alpha);
        ev.grad.segment<3>(kSlotAlpha) += w * m.cwiseProduct(signs);
      } else {
        const auto jac =
            geom::surface_point_jacobian(q.shape(), sp.grid->eta[j], sp.grid->omega[j]);
        ev.grad.segment<3>(kSlotAlpha) += w * m.cwiseProduct(jac.d_alpha);
        ev.grad[kSlotEps] += w * m.dot(jac.d_eps1);
        ev.grad[kSlotEps + 1] += w * m.dot(jac.d_eps2);
      }
    }
  }
  if (usable == 0) {
    throw std::runtime_error("neg_log_posterior: all observations skipped");
  }
  if (cfg.prior_enabled) {
    const Eigen::Matrix3d info = prior.information();
    const Eigen::Vector3d d = q.alpha - prior.mu0;
    ev.value += 0.5 * d.dot(info * d);
    if (want_grad) {
      ev.grad.segment<3>(kSlotAlpha) += info * d;
    }
  }
  return ev;
}

}  // namespace

SampleGrid objective_grid(const SuperQuadricState& q, const OptimizerConfig& cfg) {
  return geom::sample_angles(q.shape(), cfg.sample_count);
}

ObjectiveValue neg_log_posterior_on_grid(const SuperQuadricState& q,
                                         const SampleGrid& grid,
                                         const std::vector<Observation>& obs,
                                         const ScalePrior& prior,
                                         const OptimizerConfig& cfg) {
  const Evaluation ev = evaluate(q, grid, obs, prior, cfg, false);
  return {ev.value, ev.skipped};
}

ObjectiveGradient gradient_on_grid(const SuperQuadricState& q, const SampleGrid& grid,
                                   const std::vector<Observation>& obs,
                                   const ScalePrior& prior, const OptimizerConfig& cfg) {
  const Evaluation ev = evaluate(q, grid, obs, prior, cfg, true);
  return {ev.value, ev.grad, ev.skipped};
}

double neg_log_posterior(const SuperQuadricState& q, const std::vector<Observation>& obs,
                         const ScalePrior& prior, const OptimizerConfig& cfg) {
  if (cfg.shape_mode == ShapeMode::kCuboid) {
    SampleGrid empty;
    return neg_log_posterior_on_grid(q, empty, obs, prior, cfg).value;
  }
  return neg_log_posterior_on_grid(q, objective_grid(q, cfg), obs, prior, cfg).value;
}

Vec11 gradient(const SuperQuadricState& q, const std::vector<Observation>& obs,
               const ScalePrior& prior, const OptimizerConfig& cfg) {
  if (cfg.shape_mode == ShapeMode::kCuboid) {
    SampleGrid empty;
    return gradient_on_grid(q, empty, obs, prior, cfg).grad;
  }
  return gradient_on_grid(q, objective_grid(q, cfg), obs, prior, cfg).grad;
}

double min_extremum_margin(const SuperQuadricState& q, const SampleGrid& grid,
                           const std::vector<Observation>& obs,
                           const OptimizerConfig& cfg) {
  const SamplePoints sp = make_sample_points(q, grid, cfg);
  double margin = std::numeric_limits<double>::infinity();
  for (const auto& o : obs) {
    const Eigen::Matrix3d r_co = o.cam_from_world.rotation * q.pose.rotation;
    const Eigen::Vector3d t_co =
        o.cam_from_world.rotation * q.pose.translation + o.cam_from_world.translation;
    const ExtremeSelection sel = select_extremes(sp, r_co, t_co, o.intrinsics);
    if (sel.visible) {
      margin = std::min(margin, sel.margin);
    }
  }
  return margin;
}

}  // namespace opt
}  // namespace sqmap
