#include "ll/environment.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace ll {

Obstacle make_rect_obstacle(const Rect& r) {
  if (!r.valid()) throw std::invalid_argument("obstacle rectangle has empty extent");
  return Obstacle{rect_polygon(r), r, true};
}

Obstacle make_polygon_obstacle(Polygon poly) {
  if (!polygon_is_simple(poly)) {
    throw std::invalid_argument("polygon obstacle must be simple (non-self-intersecting)");
  }
  Rect box = bounding_box(poly);
  return Obstacle{std::move(poly), box, false};
}

namespace {

void validate_robot(const Robot& robot) {
  if (const auto* disc = std::get_if<DiscRobot>(&robot)) {
    if (!(disc->radius > 0.0)) throw std::invalid_argument("disc robot radius must be positive");
  } else if (const auto* poly = std::get_if<PolygonRobot>(&robot)) {
    if (!polygon_is_simple(poly->footprint)) {
      throw std::invalid_argument("polygon robot footprint must be simple");
    }
  } else {
    const auto& chain = std::get<ChainRobot>(robot);
    if (!polygon_is_simple(chain.base_footprint)) {
      throw std::invalid_argument("chain robot base footprint must be simple");
    }
    if (chain.link_lengths.empty() || chain.link_lengths.size() != chain.link_widths.size()) {
      throw std::invalid_argument("chain robot needs matching link length/width lists");
    }
    for (std::size_t i = 0; i < chain.link_lengths.size(); ++i) {
      if (!(chain.link_lengths[i] > 0.0) || !(chain.link_widths[i] > 0.0)) {
        throw std::invalid_argument("chain link lengths and widths must be positive");
      }
    }
  }
}

}  // namespace

CSpace make_cspace(const Rect& workspace, const Robot& robot) {
  std::vector<double> lower{workspace.xmin, workspace.ymin};
  std::vector<double> upper{workspace.xmax, workspace.ymax};
  std::vector<bool> wraps{false, false};
  std::vector<double> weights{1.0, 1.0};
  std::size_t angular = 0;
  if (std::holds_alternative<PolygonRobot>(robot)) {
    angular = 1;
  } else if (const auto* chain = std::get_if<ChainRobot>(&robot)) {
    angular = chain->link_lengths.size();
  }
  for (std::size_t i = 0; i < angular; ++i) {
    lower.push_back(-kPi);
    upper.push_back(kPi);
    wraps.push_back(true);
    weights.push_back(kAngularWeight);
  }
  return CSpace(std::move(lower), std::move(upper), std::move(wraps), std::move(weights));
}

Environment::Environment(Rect workspace, std::vector<Obstacle> obstacles, Robot robot)
    : workspace_(workspace),
      obstacles_(std::move(obstacles)),
      robot_(std::move(robot)),
      space_(make_cspace(workspace, robot_)) {
  if (!workspace_.valid()) throw std::invalid_argument("workspace rectangle has empty extent");
  validate_robot(robot_);
  for (std::size_t i = 0; i < obstacles_.size(); ++i) {
    if (!workspace_.contains(obstacles_[i].bbox)) {
      throw std::invalid_argument("obstacle " + std::to_string(i) + " extends outside the workspace");
    }
    if (!polygon_is_simple(obstacles_[i].poly)) {
      throw std::invalid_argument("obstacle " + std::to_string(i) + " is not a simple polygon");
    }
  }
}

double Environment::robot_min_dimension() const {
  if (const auto* disc = std::get_if<DiscRobot>(&robot_)) {
    return disc->radius;
  }
  if (const auto* poly = std::get_if<PolygonRobot>(&robot_)) {
    const Rect box = bounding_box(poly->footprint);
    return 0.5 * std::min(box.width(), box.height());
  }
  const auto& chain = std::get<ChainRobot>(robot_);
  const Rect box = bounding_box(chain.base_footprint);
  double m = 0.5 * std::min(box.width(), box.height());
  for (double w : chain.link_widths) m = std::min(m, 0.5 * w);
  return m;
}

std::vector<Polygon> chain_forward_kinematics(const ChainRobot& robot, const Configuration& q) {
  const std::size_t k = robot.link_lengths.size();
  if (q.size() != 2 + k) {
    throw std::invalid_argument("chain configuration must have 2 + k dimensions");
  }
  std::vector<Polygon> links;
  links.reserve(k);
  Vec2 anchor{q[0], q[1]};
  double heading = 0.0;
  for (std::size_t i = 0; i < k; ++i) {
    heading += q[2 + i];
    const Vec2 dir{std::cos(heading), std::sin(heading)};
    const Vec2 nrm{-dir.y, dir.x};
    const double l = robot.link_lengths[i];
    const double h = 0.5 * robot.link_widths[i];
    Polygon link;
    link.pts = {anchor + (-h) * nrm, anchor + l * dir + (-h) * nrm,
                anchor + l * dir + h * nrm, anchor + h * nrm};
    links.push_back(std::move(link));
    anchor = anchor + l * dir;
  }
  return links;
}

std::vector<Polygon> robot_polygons(const Robot& robot, const Configuration& q) {
  if (const auto* poly = std::get_if<PolygonRobot>(&robot)) {
    return {transformed(poly->footprint, {q[0], q[1]}, q[2])};
  }
  if (const auto* chain = std::get_if<ChainRobot>(&robot)) {
    std::vector<Polygon> polys = chain_forward_kinematics(*chain, q);
    polys.insert(polys.begin(), transformed(chain->base_footprint, {q[0], q[1]}, 0.0));
    return polys;
  }
  throw std::invalid_argument("robot_polygons: disc robots have no polygon footprint");
}

namespace {

bool polygon_inside_workspace(const Polygon& poly, const Rect& ws) {
  // The workspace is convex, so vertex containment implies polygon containment.
  return std::all_of(poly.pts.begin(), poly.pts.end(),
                     [&](Vec2 p) { return ws.contains(p); });
}

bool polygon_hits_obstacle(const Polygon& poly, const Rect& poly_box, const Obstacle& obs) {
  if (!poly_box.intersects(obs.bbox)) return false;
  return polygons_intersect(poly, obs.poly);
}

}  // namespace

bool is_collision_free(const Configuration& q, const Environment& env) {
  if (q.size() != env.space().dims()) {
    throw std::invalid_argument("configuration dimension mismatch");
  }
  if (const auto* disc = std::get_if<DiscRobot>(&env.robot())) {
    const Vec2 c{q[0], q[1]};
    const double r = disc->radius;
    const Rect& ws = env.workspace();
    if (c.x - r < ws.xmin || c.x + r > ws.xmax || c.y - r < ws.ymin || c.y + r > ws.ymax) {
      return false;
    }
    for (const Obstacle& obs : env.obstacles()) {
      if (obs.axis_rect) {
        if (circle_intersects_rect(c, r, obs.bbox)) return false;
      } else if (circle_intersects_polygon(c, r, obs.poly)) {
        return false;
      }
    }
    return true;
  }
  const std::vector<Polygon> polys = robot_polygons(env.robot(), q);
  for (const Polygon& poly : polys) {
    if (!polygon_inside_workspace(poly, env.workspace())) return false;
    const Rect box = bounding_box(poly);
    for (const Obstacle& obs : env.obstacles()) {
      if (polygon_hits_obstacle(poly, box, obs)) return false;
    }
  }
  return true;
}

bool edge_collision_free(const Configuration& a, const Configuration& b,
                         const Environment& env, double delta) {
  if (!(delta > 0.0)) throw std::invalid_argument("edge resolution delta must be positive");
  const double d = distance(a, b, env.space());
  const int steps = std::max(1, static_cast<int>(std::ceil(d / delta)));
  for (int i = 0; i <= steps; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(steps);
    if (!is_collision_free(interpolate(a, b, t, env.space()), env)) return false;
  }
  return true;
}

double default_epsilon(const Environment& env) {
  const Rect& ws = env.workspace();
  return 0.05 * std::hypot(ws.width(), ws.height());
}

double default_delta(const Environment& env) {
  return 0.25 * env.robot_min_dimension();
}

}  // namespace ll
