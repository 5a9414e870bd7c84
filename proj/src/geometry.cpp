#include "trackeval/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace trackeval {

namespace {

double cross(const Point& o, const Point& a, const Point& b) {
  return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double signed_area(const std::array<Point, 4>& pts) {
  double acc = 0.0;
  for (int i = 0; i < 4; ++i) {
    const Point& p = pts[i];
    const Point& q = pts[(i + 1) % 4];
    acc += p.x * q.y - q.x * p.y;
  }
  return acc / 2.0;
}

double shoelace_area(const std::vector<Point>& pts) {
  if (pts.size() < 3) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point& p = pts[i];
    const Point& q = pts[(i + 1) % pts.size()];
    acc += p.x * q.y - q.x * p.y;
  }
  return std::abs(acc) / 2.0;
}

bool segments_cross(const Point& a, const Point& b, const Point& c, const Point& d) {
  const double d1 = cross(c, d, a);
  const double d2 = cross(c, d, b);
  const double d3 = cross(a, b, c);
  const double d4 = cross(a, b, d);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
         ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

// Clip a CCW subject polygon against one CCW clip edge (c1 -> c2),
// keeping the left/on side.
void clip_by_edge(std::vector<Point>& subject, const Point& c1, const Point& c2,
                  std::vector<Point>& scratch) {
  scratch.clear();
  const std::size_t n = subject.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& s = subject[i];
    const Point& e = subject[(i + 1) % n];
    const bool s_in = cross(c1, c2, s) >= 0.0;
    const bool e_in = cross(c1, c2, e) >= 0.0;
    if (s_in != e_in) {
      const double dx = e.x - s.x;
      const double dy = e.y - s.y;
      const double den = (c2.x - c1.x) * dy - (c2.y - c1.y) * dx;
      if (den != 0.0) {
        const double t =
            ((c1.x - s.x) * (c2.y - c1.y) - (c1.y - s.y) * (c2.x - c1.x)) / -den;
        scratch.push_back({s.x + t * dx, s.y + t * dy});
      } else {
        scratch.push_back(e);
      }
    }
    if (e_in) scratch.push_back(e);
  }
  subject.swap(scratch);
}

}  // namespace

QuadAnnotation::QuadAnnotation(const std::array<Point, 4>& corners)
    : corners_(corners) {
  for (const Point& p : corners_) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
      throw GeometryError("quad corner is not finite");
  }
  // Opposite edges of a simple quadrilateral never cross.
  if (segments_cross(corners_[0], corners_[1], corners_[2], corners_[3]) ||
      segments_cross(corners_[1], corners_[2], corners_[3], corners_[0]))
    throw GeometryError("quad is self-intersecting");
  const double a = signed_area(corners_);
  if (a == 0.0) throw GeometryError("quad has zero area");
  if (a < 0.0) std::swap(corners_[1], corners_[3]);  // normalize to CCW
}

QuadAnnotation QuadAnnotation::from_rect(const BoundingBox& box) {
  if (box.area() <= 0.0)
    throw GeometryError("cannot promote a zero-area box to a quad");
  return QuadAnnotation({{{box.x, box.y},
                          {box.right(), box.y},
                          {box.right(), box.bottom()},
                          {box.x, box.bottom()}}});
}

double QuadAnnotation::area() const { return signed_area(corners_); }

bool QuadAnnotation::is_convex() const {
  // CCW winding: every turn must be a left turn (collinear allowed).
  double scale = 0.0;
  for (const Point& p : corners_)
    scale = std::max({scale, std::abs(p.x), std::abs(p.y)});
  const double tol = -1e-9 * scale * scale;
  for (int i = 0; i < 4; ++i) {
    if (cross(corners_[i], corners_[(i + 1) % 4], corners_[(i + 2) % 4]) < tol)
      return false;
  }
  return true;
}

double rect_iou(const BoundingBox& a, const BoundingBox& b) {
  const double iw = std::min(a.right(), b.right()) - std::max(a.x, b.x);
  const double ih = std::min(a.bottom(), b.bottom()) - std::max(a.y, b.y);
  const double inter = (iw > 0.0 && ih > 0.0) ? iw * ih : 0.0;
  const double uni = a.area() + b.area() - inter;
  if (uni <= 0.0) return 0.0;
  return std::clamp(inter / uni, 0.0, 1.0);
}

double quad_iou(const QuadAnnotation& a, const QuadAnnotation& b) {
  if (!a.is_convex() || !b.is_convex())
    throw NonConvexPolygon("quad_iou requires convex quads");
  std::vector<Point> poly(a.corners().begin(), a.corners().end());
  std::vector<Point> scratch;
  scratch.reserve(8);
  const auto& clip = b.corners();
  for (int i = 0; i < 4 && !poly.empty(); ++i)
    clip_by_edge(poly, clip[i], clip[(i + 1) % 4], scratch);
  const double inter = shoelace_area(poly);
  const double uni = a.area() + b.area() - inter;
  if (uni <= 0.0) return 0.0;
  return std::clamp(inter / uni, 0.0, 1.0);
}

BoundingBox quad_to_rect(const QuadAnnotation& q) {
  const auto& c = q.corners();
  double xmin = c[0].x, xmax = c[0].x, ymin = c[0].y, ymax = c[0].y;
  for (int i = 1; i < 4; ++i) {
    xmin = std::min(xmin, c[i].x);
    xmax = std::max(xmax, c[i].x);
    ymin = std::min(ymin, c[i].y);
    ymax = std::max(ymax, c[i].y);
  }
  return {xmin, ymin, xmax - xmin, ymax - ymin};
}

double center_error(const BoundingBox& a, const BoundingBox& b) {
  const Point ca = a.center();
  const Point cb = b.center();
  return std::hypot(ca.x - cb.x, ca.y - cb.y);
}

}  // namespace trackeval
