#include "sqmap/evaluation/iou3d.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace sqmap {
namespace eval {
namespace {

using geom::OrientedBox3D;

using Polygon = std::vector<Eigen::Vector3d>;

struct HalfSpace {
  Eigen::Vector3d normal;
  double offset;  // keep normal . x <= offset

  double signed_dist(const Eigen::Vector3d& p) const { return normal.dot(p) - offset; }
};

// Faces wound counterclockwise as seen from outside.
std::vector<Polygon> box_faces(const OrientedBox3D& box) {
  const Eigen::Vector3d h = box.half_extents;
  auto corner = [&](double sx, double sy, double sz) {
    return box.pose.apply(Eigen::Vector3d(sx * h.x(), sy * h.y(), sz * h.z()));
  };
  std::vector<Polygon> faces;
  faces.push_back({corner(1, -1, -1), corner(1, 1, -1), corner(1, 1, 1), corner(1, -1, 1)});
  faces.push_back({corner(-1, -1, -1), corner(-1, -1, 1), corner(-1, 1, 1), corner(-1, 1, -1)});
  faces.push_back({corner(-1, 1, -1), corner(-1, 1, 1), corner(1, 1, 1), corner(1, 1, -1)});
  faces.push_back({corner(-1, -1, -1), corner(1, -1, -1), corner(1, -1, 1), corner(-1, -1, 1)});
  faces.push_back({corner(-1, -1, 1), corner(1, -1, 1), corner(1, 1, 1), corner(-1, 1, 1)});
  faces.push_back({corner(-1, -1, -1), corner(-1, 1, -1), corner(1, 1, -1), corner(1, -1, -1)});
  return faces;
}

std::vector<HalfSpace> box_half_spaces(const OrientedBox3D& box) {
  std::vector<HalfSpace> hs;
  hs.reserve(6);
  for (int axis = 0; axis < 3; ++axis) {
    const Eigen::Vector3d n = box.pose.rotation.col(axis);
    const double c = n.dot(box.pose.translation);
    hs.push_back({n, c + box.half_extents[axis]});
    hs.push_back({-n, -(c - box.half_extents[axis])});
  }
  return hs;
}

Polygon clip_polygon(const Polygon& poly, const HalfSpace& hs, Polygon* cut_points) {
  Polygon out;
  const std::size_t n = poly.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Eigen::Vector3d& cur = poly[i];
    const Eigen::Vector3d& nxt = poly[(i + 1) % n];
    const double dc = hs.signed_dist(cur);
    const double dn = hs.signed_dist(nxt);
    if (dc <= 0.0) {
      out.push_back(cur);
      if (dc == 0.0) cut_points->push_back(cur);
    }
    if ((dc < 0.0 && dn > 0.0) || (dc > 0.0 && dn < 0.0)) {
      const double t = dc / (dc - dn);
      const Eigen::Vector3d x = cur + t * (nxt - cur);
      out.push_back(x);
      cut_points->push_back(x);
    }
  }
  return out;
}

void dedupe(Polygon* pts, double tol) {
  Polygon kept;
  for (const auto& p : *pts) {
    bool dup = false;
    for (const auto& q : kept) {
      if ((p - q).norm() < tol) {
        dup = true;
        break;
      }
    }
    if (!dup) kept.push_back(p);
  }
  *pts = std::move(kept);
}

// Clip every face, then seal the opening with a cap polygon on the cutting
// plane, ordered counterclockwise around the outward normal.
std::vector<Polygon> clip_polyhedron(const std::vector<Polygon>& faces,
                                     const HalfSpace& hs, double scale) {
  std::vector<Polygon> out;
  Polygon cut;
  for (const auto& face : faces) {
    Polygon kept = clip_polygon(face, hs, &cut);
    if (kept.size() >= 3) {
      out.push_back(std::move(kept));
    }
  }
  dedupe(&cut, 1e-12 * scale);
  if (cut.size() >= 3) {
    Eigen::Vector3d centroid = Eigen::Vector3d::Zero();
    for (const auto& p : cut) centroid += p;
    centroid /= static_cast<double>(cut.size());
    const Eigen::Vector3d e1 = (cut[0] - centroid).normalized();
    const Eigen::Vector3d e2 = hs.normal.cross(e1).normalized();
    std::sort(cut.begin(), cut.end(), [&](const auto& p, const auto& q) {
      const Eigen::Vector3d dp = p - centroid;
      const Eigen::Vector3d dq = q - centroid;
      return std::atan2(dp.dot(e2), dp.dot(e1)) < std::atan2(dq.dot(e2), dq.dot(e1));
    });
    out.push_back(std::move(cut));
  }
  return out;
}

double polyhedron_volume(const std::vector<Polygon>& faces) {
  double six_v = 0.0;
  for (const auto& face : faces) {
    for (std::size_t i = 1; i + 1 < face.size(); ++i) {
      six_v += face[0].dot(face[i].cross(face[i + 1]));
    }
  }
  return std::max(0.0, six_v / 6.0);
}

bool point_in_box(const OrientedBox3D& box, const Eigen::Vector3d& p) {
  const Eigen::Vector3d local = box.pose.rotation.transpose() * (p - box.pose.translation);
  return (local.cwiseAbs().array() <= box.half_extents.array()).all();
}

}  // namespace

double iou3d(const OrientedBox3D& a, const OrientedBox3D& b) {
  if (!a.valid() || !b.valid()) {
    throw std::invalid_argument("iou3d: degenerate box");
  }
  const double scale = std::max(a.half_extents.maxCoeff(), b.half_extents.maxCoeff());
  std::vector<Polygon> poly = box_faces(a);
  for (const auto& hs : box_half_spaces(b)) {
    poly = clip_polyhedron(poly, hs, scale);
    if (poly.empty()) break;
  }
  const double inter = poly.empty() ? 0.0 : polyhedron_volume(poly);
  const double uni = a.volume() + b.volume() - inter;
  return uni > 0.0 ? inter / uni : 0.0;
}

double iou3d_montecarlo(const OrientedBox3D& a, const OrientedBox3D& b,
                        std::int64_t n_samples, std::uint64_t seed) {
  if (n_samples < 10000) {
    throw std::invalid_argument("iou3d_montecarlo: need at least 1e4 samples");
  }
  Eigen::Vector3d lo = Eigen::Vector3d::Constant(std::numeric_limits<double>::max());
  Eigen::Vector3d hi = -lo;
  for (const auto& box : {a, b}) {
    for (const auto& c : box.corners()) {
      lo = lo.cwiseMin(c);
      hi = hi.cwiseMax(c);
    }
  }
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::int64_t in_union = 0, in_inter = 0;
  for (std::int64_t i = 0; i < n_samples; ++i) {
    Eigen::Vector3d p;
    for (int k = 0; k < 3; ++k) {
      p[k] = lo[k] + (hi[k] - lo[k]) * u(rng);
    }
    const bool ia = point_in_box(a, p);
    const bool ib = point_in_box(b, p);
    in_union += (ia || ib) ? 1 : 0;
    in_inter += (ia && ib) ? 1 : 0;
  }
  return in_union > 0 ? static_cast<double>(in_inter) / static_cast<double>(in_union)
                      : 0.0;
}

}  // namespace eval
}  // namespace sqmap
