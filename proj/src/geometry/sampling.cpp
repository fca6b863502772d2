#include "sqmap/geometry/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace sqmap {
namespace geom {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Chord-length table of the first-quadrant superellipse
// (a cos^eps t, b sin^eps t), t in [0, pi/2]. The grid is warped toward both
// endpoints so that the fast parameter sweep near the corners at small eps is
// resolved: theta = pi/2 * s^p / (s^p + (1-s)^p) with p = max(1, 1/eps).
class ArcTable {
 public:
  ArcTable(double a, double b, double eps, int cells = 1024) {
    const double p = std::max(1.0, 1.0 / eps);
    theta_.resize(cells + 1);
    arclen_.resize(cells + 1);
    Eigen::Vector2d prev(a, 0.0);
    theta_[0] = 0.0;
    arclen_[0] = 0.0;
    for (int k = 1; k <= cells; ++k) {
      const double s = static_cast<double>(k) / cells;
      const double sp = std::pow(s, p);
      const double qp = std::pow(1.0 - s, p);
      const double t = (k == cells) ? kPi / 2.0 : kPi / 2.0 * sp / (sp + qp);
      const Eigen::Vector2d pt(a * std::pow(std::cos(t), eps),
                               b * std::pow(std::sin(t), eps));
      theta_[k] = t;
      arclen_[k] = arclen_[k - 1] + (pt - prev).norm();
      prev = pt;
    }
  }

  double total() const { return arclen_.back(); }

  // Angle at a given arc length from t=0, linear within a cell.
  double invert(double len) const {
    if (len <= 0.0) return 0.0;
    if (len >= total()) return kPi / 2.0;
    const auto it = std::upper_bound(arclen_.begin(), arclen_.end(), len);
    const std::size_t hi = static_cast<std::size_t>(it - arclen_.begin());
    const double seg = arclen_[hi] - arclen_[hi - 1];
    const double f = seg > 0.0 ? (len - arclen_[hi - 1]) / seg : 0.0;
    return theta_[hi - 1] + f * (theta_[hi] - theta_[hi - 1]);
  }

 private:
  std::vector<double> theta_;
  std::vector<double> arclen_;
};

// One ring of 4*kq omega values covering [-pi, pi), mirrored from kq+1
// first-quadrant values at equal arc spacing. Contains 0, +-pi/2 and -pi.
void append_ring(const ArcTable& ring, int kq, double eta, SampleGrid* grid) {
  std::vector<double> quarter(kq + 1);
  for (int j = 0; j <= kq; ++j) {
    quarter[j] = ring.invert(ring.total() * j / kq);
  }
  std::vector<double> half(2 * kq + 1);
  for (int j = 0; j <= kq; ++j) half[j] = quarter[j];
  for (int j = 1; j <= kq; ++j) half[kq + j] = kPi - quarter[kq - j];
  for (int j = 2 * kq; j >= 1; --j) {
    grid->eta.push_back(eta);
    grid->omega.push_back(-half[j]);
  }
  for (int j = 0; j <= 2 * kq - 1; ++j) {
    grid->eta.push_back(eta);
    grid->omega.push_back(half[j]);
  }
}

SampleGrid generate(const ArcTable& meridian, const ArcTable& ring, double eps1,
                    double spacing) {
  SampleGrid grid;
  const int bands = std::max(1, static_cast<int>(std::lround(meridian.total() / spacing)));
  grid.eta.push_back(kPi / 2.0);
  grid.omega.push_back(0.0);
  grid.eta.push_back(-kPi / 2.0);
  grid.omega.push_back(0.0);
  for (int i = 0; i < bands; ++i) {
    const double eta = i == 0 ? 0.0 : meridian.invert(meridian.total() * i / bands);
    const double scale = std::pow(std::cos(eta), eps1);
    const int kq =
        std::max(1, static_cast<int>(std::lround(ring.total() * scale / spacing)));
    append_ring(ring, kq, eta, &grid);
    if (i > 0) {
      append_ring(ring, kq, -eta, &grid);
    }
  }
  return grid;
}

}  // namespace

SampleGrid sample_angles(const ShapeParams& shape, int count) {
  if (count < 26) {
    throw std::invalid_argument("sample_angles: count must be at least 26");
  }
  if (!shape.valid()) {
    throw std::invalid_argument("sample_angles: invalid shape parameters");
  }
  const double a_m = 0.5 * (shape.alpha.x() + shape.alpha.y());
  const ArcTable meridian(a_m, shape.alpha.z(), shape.eps1);
  const ArcTable ring(shape.alpha.x(), shape.alpha.y(), shape.eps2);

  double spacing = std::sqrt(8.0 * meridian.total() * ring.total() / count);
  SampleGrid grid = generate(meridian, ring, shape.eps1, spacing);
  for (int pass = 0; pass < 3; ++pass) {
    const double n = static_cast<double>(grid.size());
    if (std::abs(n - count) <= 0.02 * count) break;
    spacing *= std::sqrt(n / count);
    grid = generate(meridian, ring, shape.eps1, spacing);
  }
  return grid;
}

std::vector<Eigen::Vector3d> surface_points(const ShapeParams& shape,
                                            const SampleGrid& grid) {
  std::vector<Eigen::Vector3d> pts(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    pts[i] = surface_point(shape, grid.eta[i], grid.omega[i]);
  }
  return pts;
}

std::vector<Eigen::Vector3d> sample_surface(const ShapeParams& shape, int count) {
  return surface_points(shape, sample_angles(shape, count));
}

}  // namespace geom
}  // namespace sqmap
