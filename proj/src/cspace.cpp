#include "ll/cspace.hpp"

#include <cmath>
#include <stdexcept>

namespace ll {

CSpace::CSpace(std::vector<double> lower, std::vector<double> upper,
               std::vector<bool> wraps, std::vector<double> weights)
    : lower_(std::move(lower)),
      upper_(std::move(upper)),
      wraps_(std::move(wraps)),
      weights_(std::move(weights)) {
  const std::size_t n = lower_.size();
  if (n == 0 || upper_.size() != n || wraps_.size() != n || weights_.size() != n) {
    throw std::invalid_argument("CSpace: mismatched bound/wrap/weight sizes");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!(lower_[i] < upper_[i])) {
      throw std::invalid_argument("CSpace: lower bound must be below upper bound");
    }
    if (!(weights_[i] > 0.0)) {
      throw std::invalid_argument("CSpace: weights must be positive");
    }
    if (wraps_[i] && std::abs((upper_[i] - lower_[i]) - kTwoPi) > 1e-9) {
      throw std::invalid_argument("CSpace: wrapped dimensions must span exactly 2*pi");
    }
  }
}

bool CSpace::contains(const Configuration& q) const {
  if (q.size() != dims()) return false;
  for (std::size_t i = 0; i < dims(); ++i) {
    if (wraps_[i]) continue;  // any angle is valid modulo wrap
    if (q[i] < lower_[i] || q[i] > upper_[i]) return false;
  }
  return true;
}

void CSpace::normalize(Configuration& q) const {
  for (std::size_t i = 0; i < dims(); ++i) {
    if (wraps_[i]) q[i] = normalize_angle(q[i]);
  }
}

double CSpace::metric_diagonal() const {
  double sum = 0.0;
  for (std::size_t i = 0; i < dims(); ++i) {
    const double span = wraps_[i] ? kPi : (upper_[i] - lower_[i]);
    const double w = weights_[i] * span;
    sum += w * w;
  }
  return std::sqrt(sum);
}

Configuration sample_uniform(const CSpace& space, Rng& rng) {
  std::vector<double> v(space.dims());
  for (std::size_t i = 0; i < space.dims(); ++i) {
    v[i] = rng.uniform(space.lower(i), space.upper(i));
  }
  Configuration q(std::move(v));
  space.normalize(q);
  return q;
}

namespace {

void check_dims(const Configuration& a, const Configuration& b, const CSpace& space) {
  if (a.size() != space.dims() || b.size() != space.dims()) {
    throw std::invalid_argument("configuration dimension mismatch");
  }
}

double coord_delta(double from, double to, bool wrap) {
  const double d = to - from;
  return wrap ? normalize_angle(d) : d;
}

}  // namespace

double distance(const Configuration& a, const Configuration& b, const CSpace& space) {
  check_dims(a, b, space);
  double sum = 0.0;
  for (std::size_t i = 0; i < space.dims(); ++i) {
    const double d = space.weight(i) * coord_delta(a[i], b[i], space.wraps(i));
    sum += d * d;
  }
  return std::sqrt(sum);
}

Configuration interpolate(const Configuration& a, const Configuration& b, double t,
                          const CSpace& space) {
  check_dims(a, b, space);
  if (t < 0.0 || t > 1.0) {
    throw std::invalid_argument("interpolate: t outside [0, 1]");
  }
  std::vector<double> v(space.dims());
  for (std::size_t i = 0; i < space.dims(); ++i) {
    v[i] = a[i] + t * coord_delta(a[i], b[i], space.wraps(i));
  }
  Configuration q(std::move(v));
  space.normalize(q);
  return q;
}

}  // namespace ll
