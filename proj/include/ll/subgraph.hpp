#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

#include "ll/cspace.hpp"

namespace ll {

enum class VertexOrigin : std::uint8_t { kCritical = 0, kUniform = 1, kSteering = 2, kQuery = 3 };

struct Vertex {
  std::uint64_t id = 0;  // globally unique, stable across merges
  Configuration q;
  VertexOrigin origin = VertexOrigin::kSteering;
};

struct EdgeTo {
  std::uint32_t to = 0;  // local vertex index
  double length = 0.0;
};

/// Vertex/edge graph with metric edge lengths. The container itself does not
/// enforce connectivity; the Learn-and-Link operations keep each live
/// subgraph connected by construction, while PRM uses it as a plain roadmap
/// graph that may have several components.
class Subgraph {
 public:
  explicit Subgraph(int id) : id_(id) {}
  Subgraph(int id, Vertex root);

  int id() const { return id_; }
  std::size_t vertex_count() const { return vertices_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  std::uint64_t root_id() const { return root_id_; }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<EdgeTo>& edges_from(std::uint32_t local) const { return adj_[local]; }

  bool contains(std::uint64_t vertex_id) const { return index_.count(vertex_id) != 0; }
  std::uint32_t local_index(std::uint64_t vertex_id) const;
  const Vertex& vertex(std::uint64_t vertex_id) const { return vertices_[local_index(vertex_id)]; }

  std::uint32_t add_vertex(Vertex v);
  void add_edge(std::uint64_t a, std::uint64_t b, double length);

  /// Nearest vertex by the space metric; exact ties resolved to the lowest id.
  const Vertex& nearest(const Configuration& q, const CSpace& space) const;

  /// Up to k nearest vertices, ascending distance, ties by lowest id.
  std::vector<std::uint64_t> nearest_k(const Configuration& q, std::size_t k,
                                       const CSpace& space) const;

  /// Vertex whose configuration equals q exactly, if present (lowest id wins).
  std::optional<std::uint64_t> find_exact(const Configuration& q) const;

  /// Dijkstra over stored edge lengths; ties broken toward lower vertex ids.
  /// Returns the id sequence from u to v, empty when disconnected.
  std::vector<std::uint64_t> shortest_path_ids(std::uint64_t u, std::uint64_t v) const;
  std::vector<Configuration> shortest_path(std::uint64_t u, std::uint64_t v) const;

  bool is_connected() const;

  /// Moves all vertices and edges of `other` into this graph. Bridging edges
  /// are the caller's responsibility.
  void absorb(Subgraph&& other);

  /// Removes the most recently added vertex and its incident edges. Only
  /// valid for vertices added by this graph's own add_vertex (used by PRM
  /// query attachment rollback).
  void pop_vertex();

 private:
  int id_ = 0;
  std::vector<Vertex> vertices_;
  std::vector<std::vector<EdgeTo>> adj_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;
  std::uint64_t root_id_ = 0;
  std::size_t edge_count_ = 0;
};

}  // namespace ll
