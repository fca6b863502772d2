#pragma once

#include <Eigen/Core>
#include <span>
#include <vector>

namespace sqmap {
namespace geom {

struct Box2D {
  double xmin = 0, xmax = 0, ymin = 0, ymax = 0;

  bool valid() const { return xmin <= xmax && ymin <= ymax; }
  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  double area() const { return width() * height(); }
};

// Componentwise min/max over a non-empty point set.
Box2D box_of_points(std::span<const Eigen::Vector2d> pts);

double iou2d(const Box2D& a, const Box2D& b);

bool boxes_overlap(const Box2D& a, const Box2D& b);

}  // namespace geom
}  // namespace sqmap
