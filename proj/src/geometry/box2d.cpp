#include "sqmap/geometry/box2d.hpp"

#include <algorithm>
#include <stdexcept>

namespace sqmap {
namespace geom {

Box2D box_of_points(std::span<const Eigen::Vector2d> pts) {
  if (pts.empty()) {
    throw std::invalid_argument("box_of_points: empty point set");
  }
  Box2D b{pts[0].x(), pts[0].x(), pts[0].y(), pts[0].y()};
  for (const auto& p : pts) {
    b.xmin = std::min(b.xmin, p.x());
    b.xmax = std::max(b.xmax, p.x());
    b.ymin = std::min(b.ymin, p.y());
    b.ymax = std::max(b.ymax, p.y());
  }
  return b;
}

double iou2d(const Box2D& a, const Box2D& b) {
  const double iw = std::min(a.xmax, b.xmax) - std::max(a.xmin, b.xmin);
  const double ih = std::min(a.ymax, b.ymax) - std::max(a.ymin, b.ymin);
  if (iw <= 0.0 || ih <= 0.0) {
    return 0.0;
  }
  const double inter = iw * ih;
  const double uni = a.area() + b.area() - inter;
  return uni > 0.0 ? inter / uni : 0.0;
}

bool boxes_overlap(const Box2D& a, const Box2D& b) {
  return std::min(a.xmax, b.xmax) >= std::max(a.xmin, b.xmin) &&
         std::min(a.ymax, b.ymax) >= std::max(a.ymin, b.ymin);
}

}  // namespace geom
}  // namespace sqmap
