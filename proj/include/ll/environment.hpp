#pragma once

#include <string>
#include <variant>
#include <vector>

#include "ll/cspace.hpp"
#include "ll/geometry.hpp"

namespace ll {

struct DiscRobot {
  double radius = 0.0;
};

/// Footprint vertices in the body frame; the configuration is (x, y, theta).
struct PolygonRobot {
  Polygon footprint;
};

/// Planar chain on a translating base: configuration is (x, y, j1..jk).
/// Link i is a rectangle of length link_lengths[i] and width link_widths[i],
/// its heading the cumulative sum of joint angles, anchored at the base.
struct ChainRobot {
  Polygon base_footprint;  // body frame, translated only
  std::vector<double> link_lengths;
  std::vector<double> link_widths;
};

using Robot = std::variant<DiscRobot, PolygonRobot, ChainRobot>;

struct Obstacle {
  Polygon poly;
  Rect bbox;
  bool axis_rect = false;
};

Obstacle make_rect_obstacle(const Rect& r);
Obstacle make_polygon_obstacle(Polygon poly);

/// Immutable after construction; safe for unlimited concurrent readers.
class Environment {
 public:
  Environment(Rect workspace, std::vector<Obstacle> obstacles, Robot robot);

  const Rect& workspace() const { return workspace_; }
  const std::vector<Obstacle>& obstacles() const { return obstacles_; }
  const Robot& robot() const { return robot_; }
  const CSpace& space() const { return space_; }

  /// Smallest robot cross-section, used to derive the default edge resolution.
  double robot_min_dimension() const;

 private:
  Rect workspace_;
  std::vector<Obstacle> obstacles_;
  Robot robot_;
  CSpace space_;
};

/// Metric weight applied to every angular dimension.
inline constexpr double kAngularWeight = 0.5;

/// Builds the configuration space implied by a workspace/robot pair:
/// disc -> (x, y); polygon -> (x, y, theta); chain -> (x, y, j1..jk).
CSpace make_cspace(const Rect& workspace, const Robot& robot);

/// Link rectangles for a chain robot at configuration q (base excluded).
std::vector<Polygon> chain_forward_kinematics(const ChainRobot& robot, const Configuration& q);

/// All footprint polygons at q (disc approximated by its bounding box is NOT
/// used here; discs are tested exactly, so this is only for polygonal robots).
std::vector<Polygon> robot_polygons(const Robot& robot, const Configuration& q);

bool is_collision_free(const Configuration& q, const Environment& env);

/// Validates interpolated points spaced at most `delta` apart in metric
/// distance, endpoints included.
bool edge_collision_free(const Configuration& a, const Configuration& b,
                         const Environment& env, double delta);

/// Default steering step: 1/20 of the workspace diagonal.
double default_epsilon(const Environment& env);

/// Default edge validation resolution: a quarter of the robot's smallest
/// cross-section.
double default_delta(const Environment& env);

}  // namespace ll
