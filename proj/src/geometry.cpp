#include "ll/geometry.hpp"

#include <algorithm>
#include <limits>

namespace ll {

double normalize_angle(double a) {
  double r = std::fmod(a + kPi, kTwoPi);
  if (r < 0.0) {
    r += kTwoPi;
  }
  return r - kPi;
}

Polygon rect_polygon(const Rect& r) {
  return Polygon{{{r.xmin, r.ymin}, {r.xmax, r.ymin}, {r.xmax, r.ymax}, {r.xmin, r.ymax}}};
}

Rect bounding_box(const Polygon& poly) {
  Rect box{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity(),
           -std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (const Vec2& p : poly.pts) {
    box.xmin = std::min(box.xmin, p.x);
    box.ymin = std::min(box.ymin, p.y);
    box.xmax = std::max(box.xmax, p.x);
    box.ymax = std::max(box.ymax, p.y);
  }
  return box;
}

Polygon transformed(const Polygon& poly, Vec2 t, double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Polygon out;
  out.pts.reserve(poly.pts.size());
  for (const Vec2& p : poly.pts) {
    out.pts.push_back({c * p.x - s * p.y + t.x, s * p.x + c * p.y + t.y});
  }
  return out;
}

namespace {

int orientation(Vec2 a, Vec2 b, Vec2 c) {
  const double v = cross(b - a, c - a);
  if (v > 0.0) return 1;
  if (v < 0.0) return -1;
  return 0;
}

bool on_segment(Vec2 p, Vec2 a, Vec2 b) {
  return std::min(a.x, b.x) <= p.x && p.x <= std::max(a.x, b.x) &&
         std::min(a.y, b.y) <= p.y && p.y <= std::max(a.y, b.y);
}

}  // namespace

bool segments_intersect(Vec2 a1, Vec2 a2, Vec2 b1, Vec2 b2) {
  const int o1 = orientation(a1, a2, b1);
  const int o2 = orientation(a1, a2, b2);
  const int o3 = orientation(b1, b2, a1);
  const int o4 = orientation(b1, b2, a2);
  if (o1 != o2 && o3 != o4) return true;
  if (o1 == 0 && on_segment(b1, a1, a2)) return true;
  if (o2 == 0 && on_segment(b2, a1, a2)) return true;
  if (o3 == 0 && on_segment(a1, b1, b2)) return true;
  if (o4 == 0 && on_segment(a2, b1, b2)) return true;
  return false;
}

bool polygon_is_simple(const Polygon& poly) {
  const std::size_t n = poly.pts.size();
  if (n < 3) return false;
  for (std::size_t i = 0; i < n; ++i) {
    const Vec2 a1 = poly.pts[i];
    const Vec2 a2 = poly.pts[(i + 1) % n];
    for (std::size_t j = i + 1; j < n; ++j) {
      // Skip adjacent edges (they share a vertex by construction).
      if (j == i || (j + 1) % n == i || (i + 1) % n == j) continue;
      const Vec2 b1 = poly.pts[j];
      const Vec2 b2 = poly.pts[(j + 1) % n];
      if (segments_intersect(a1, a2, b1, b2)) return false;
    }
  }
  return true;
}

bool point_in_polygon(Vec2 p, const Polygon& poly) {
  // Even-odd ray casting toward +x.
  bool inside = false;
  const std::size_t n = poly.pts.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    const Vec2 a = poly.pts[i];
    const Vec2 b = poly.pts[j];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x_at = a.x + (p.y - a.y) / (b.y - a.y) * (b.x - a.x);
      if (p.x < x_at) inside = !inside;
    }
  }
  return inside;
}

double point_segment_distance(Vec2 p, Vec2 a, Vec2 b) {
  const Vec2 ab = b - a;
  const double len2 = squared_norm(ab);
  if (len2 == 0.0) return norm(p - a);
  const double t = std::clamp(dot(p - a, ab) / len2, 0.0, 1.0);
  return norm(p - (a + t * ab));
}

double point_polygon_edge_distance(Vec2 p, const Polygon& poly) {
  double best = std::numeric_limits<double>::infinity();
  const std::size_t n = poly.pts.size();
  for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
    best = std::min(best, point_segment_distance(p, poly.pts[j], poly.pts[i]));
  }
  return best;
}

double point_polygon_signed_distance(Vec2 p, const Polygon& poly) {
  const double d = point_polygon_edge_distance(p, poly);
  return point_in_polygon(p, poly) ? -d : d;
}

bool polygons_intersect(const Polygon& a, const Polygon& b) {
  const std::size_t na = a.pts.size();
  const std::size_t nb = b.pts.size();
  for (std::size_t i = 0; i < na; ++i) {
    const Vec2 a1 = a.pts[i];
    const Vec2 a2 = a.pts[(i + 1) % na];
    for (std::size_t j = 0; j < nb; ++j) {
      if (segments_intersect(a1, a2, b.pts[j], b.pts[(j + 1) % nb])) return true;
    }
  }
  // No edge crossing: overlap only if one contains the other.
  return point_in_polygon(a.pts[0], b) || point_in_polygon(b.pts[0], a);
}

bool circle_intersects_rect(Vec2 c, double r, const Rect& rect) {
  const Vec2 q = rect.clamp(c);
  return squared_norm(c - q) < r * r;
}

bool circle_intersects_polygon(Vec2 c, double r, const Polygon& poly) {
  if (point_in_polygon(c, poly)) return true;
  return point_polygon_edge_distance(c, poly) < r;
}

}  // namespace ll
