#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace ll {

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kTwoPi = 2.0 * kPi;

/// Normalizes an angle to [-pi, pi).
double normalize_angle(double a);

struct Vec2 {
  double x = 0.0;
  double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 a) { return {s * a.x, s * a.y}; }
inline bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double squared_norm(Vec2 a) { return dot(a, a); }
inline double norm(Vec2 a) { return std::sqrt(squared_norm(a)); }

/// Axis-aligned rectangle, min corner inclusive.
struct Rect {
  double xmin = 0.0;
  double ymin = 0.0;
  double xmax = 0.0;
  double ymax = 0.0;

  double width() const { return xmax - xmin; }
  double height() const { return ymax - ymin; }
  bool valid() const { return xmin < xmax && ymin < ymax; }
  bool contains(Vec2 p) const {
    return p.x >= xmin && p.x <= xmax && p.y >= ymin && p.y <= ymax;
  }
  bool contains(const Rect& r) const {
    return r.xmin >= xmin && r.xmax <= xmax && r.ymin >= ymin && r.ymax <= ymax;
  }
  bool intersects(const Rect& r) const {
    return r.xmin <= xmax && xmin <= r.xmax && r.ymin <= ymax && ymin <= r.ymax;
  }
  Vec2 clamp(Vec2 p) const {
    return {std::fmin(std::fmax(p.x, xmin), xmax), std::fmin(std::fmax(p.y, ymin), ymax)};
  }
};

/// Simple polygon (non-self-intersecting), any winding, no repeated closing vertex.
struct Polygon {
  std::vector<Vec2> pts;
};

Polygon rect_polygon(const Rect& r);
Rect bounding_box(const Polygon& poly);

/// Rotates by `angle` about the origin, then translates by `t`.
Polygon transformed(const Polygon& poly, Vec2 t, double angle);

/// Checks that no two non-adjacent edges intersect.
bool polygon_is_simple(const Polygon& poly);

bool point_in_polygon(Vec2 p, const Polygon& poly);
double point_segment_distance(Vec2 p, Vec2 a, Vec2 b);

/// Minimum distance from p to the polygon boundary (0 on the boundary).
double point_polygon_edge_distance(Vec2 p, const Polygon& poly);

/// Signed distance to the polygon boundary: negative inside.
double point_polygon_signed_distance(Vec2 p, const Polygon& poly);

/// Segment intersection test, touching endpoints and collinear overlap included.
bool segments_intersect(Vec2 a1, Vec2 a2, Vec2 b1, Vec2 b2);

/// Exact overlap test for simple polygons (edge crossing or containment).
bool polygons_intersect(const Polygon& a, const Polygon& b);

/// Circle overlaps rectangle (strict: touching boundaries do not collide).
bool circle_intersects_rect(Vec2 c, double r, const Rect& rect);
bool circle_intersects_polygon(Vec2 c, double r, const Polygon& poly);

}  // namespace ll
