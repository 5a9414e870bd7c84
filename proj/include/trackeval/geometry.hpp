#pragma once

#include <array>

#include "trackeval/errors.hpp"

namespace trackeval {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

// Axis-aligned box, top-left corner plus size, in pixels.
// w and h are never negative; a box with w == 0 or h == 0 has area 0.
struct BoundingBox {
  double x = 0.0;
  double y = 0.0;
  double w = 0.0;
  double h = 0.0;

  double area() const { return w * h; }
  double right() const { return x + w; }
  double bottom() const { return y + h; }
  Point center() const { return {x + w / 2.0, y + h / 2.0}; }
};

// Four-corner polygon annotation (VOT 2015/2016 style rotated boxes).
// Construction rejects self-intersecting and zero-area input and
// normalizes winding to counter-clockwise, so area() is positive.
class QuadAnnotation {
 public:
  explicit QuadAnnotation(const std::array<Point, 4>& corners);

  // Promotes a positive-area box to its four corners (CCW).
  static QuadAnnotation from_rect(const BoundingBox& box);

  const std::array<Point, 4>& corners() const { return corners_; }
  double area() const;
  bool is_convex() const;

 private:
  std::array<Point, 4> corners_;
};

// Intersection area over union area. 0 when the union is degenerate.
double rect_iou(const BoundingBox& a, const BoundingBox& b);

// IoU of two convex quads via Sutherland-Hodgman clipping and shoelace
// areas. Throws NonConvexPolygon for non-convex input; the caller picks
// the fallback (e.g. quad_to_rect + rect_iou).
double quad_iou(const QuadAnnotation& a, const QuadAnnotation& b);

// Minimal axis-aligned rectangle containing all four corners.
BoundingBox quad_to_rect(const QuadAnnotation& q);

// Euclidean distance between box centers, in pixels.
double center_error(const BoundingBox& a, const BoundingBox& b);

}  // namespace trackeval
