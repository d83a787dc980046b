#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "ll/geometry.hpp"

namespace ll {

/// A point in configuration space. Wrapped (angular) coordinates are kept
/// normalized to [-pi, pi) by the operations that produce configurations.
class Configuration {
 public:
  Configuration() = default;
  explicit Configuration(std::vector<double> values) : values_(std::move(values)) {}
  Configuration(std::initializer_list<double> values) : values_(values) {}

  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }
  const std::vector<double>& values() const { return values_; }

  Vec2 base_position() const { return {values_[0], values_[1]}; }

  friend bool operator==(const Configuration& a, const Configuration& b) {
    return a.values_ == b.values_;
  }

 private:
  std::vector<double> values_;
};

/// Bounded n-dimensional configuration space with per-dimension metric
/// weights and optional angular wrap (identified modulo 2*pi).
class CSpace {
 public:
  CSpace(std::vector<double> lower, std::vector<double> upper,
         std::vector<bool> wraps, std::vector<double> weights);

  std::size_t dims() const { return lower_.size(); }
  double lower(std::size_t i) const { return lower_[i]; }
  double upper(std::size_t i) const { return upper_[i]; }
  bool wraps(std::size_t i) const { return wraps_[i]; }
  double weight(std::size_t i) const { return weights_[i]; }

  bool contains(const Configuration& q) const;

  /// Normalizes wrapped coordinates to [-pi, pi) in place.
  void normalize(Configuration& q) const;

  /// Diagonal of the bounds box in metric units (wrapped dims span pi).
  double metric_diagonal() const;

 private:
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<bool> wraps_;
  std::vector<double> weights_;
};

/// Deterministic random source: identical seeds give identical streams.
/// Single-owner mutable state; never share one instance across tasks.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed), seed_(seed) {}

  std::uint64_t seed() const { return seed_; }

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform01() {
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) { return lo + uniform01() * (hi - lo); }

  /// Uniform integer in [0, n).
  std::size_t uniform_index(std::size_t n) {
    return static_cast<std::size_t>(uniform01() * static_cast<double>(n));
  }

 private:
  std::mt19937_64 gen_;
  std::uint64_t seed_;
};

/// Each coordinate i.i.d. uniform over [lower, upper); wrapped dims normalized.
Configuration sample_uniform(const CSpace& space, Rng& rng);

/// Weighted Euclidean metric; wrapped dims use the shortest angular difference.
double distance(const Configuration& a, const Configuration& b, const CSpace& space);

/// Linear interpolation, shortest arc on wrapped dims. Requires t in [0, 1].
Configuration interpolate(const Configuration& a, const Configuration& b, double t,
                          const CSpace& space);

}  // namespace ll
