#include "ll/subgraph.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <stdexcept>

namespace ll {

Subgraph::Subgraph(int id, Vertex root) : id_(id) {
  root_id_ = root.id;
  add_vertex(std::move(root));
}

std::uint32_t Subgraph::local_index(std::uint64_t vertex_id) const {
  auto it = index_.find(vertex_id);
  if (it == index_.end()) {
    throw std::invalid_argument("vertex id " + std::to_string(vertex_id) + " not in subgraph");
  }
  return it->second;
}

std::uint32_t Subgraph::add_vertex(Vertex v) {
  if (index_.count(v.id)) {
    throw std::invalid_argument("duplicate vertex id in subgraph");
  }
  const auto local = static_cast<std::uint32_t>(vertices_.size());
  index_.emplace(v.id, local);
  vertices_.push_back(std::move(v));
  adj_.emplace_back();
  return local;
}

void Subgraph::add_edge(std::uint64_t a, std::uint64_t b, double length) {
  const std::uint32_t la = local_index(a);
  const std::uint32_t lb = local_index(b);
  adj_[la].push_back({lb, length});
  adj_[lb].push_back({la, length});
  ++edge_count_;
}

const Vertex& Subgraph::nearest(const Configuration& q, const CSpace& space) const {
  if (vertices_.empty()) throw std::logic_error("nearest on empty subgraph");
  const Vertex* best = &vertices_[0];
  double best_d = distance(best->q, q, space);
  for (std::size_t i = 1; i < vertices_.size(); ++i) {
    const double d = distance(vertices_[i].q, q, space);
    if (d < best_d || (d == best_d && vertices_[i].id < best->id)) {
      best = &vertices_[i];
      best_d = d;
    }
  }
  return *best;
}

std::vector<std::uint64_t> Subgraph::nearest_k(const Configuration& q, std::size_t k,
                                               const CSpace& space) const {
  std::vector<std::pair<double, std::uint64_t>> scored;
  scored.reserve(vertices_.size());
  for (const Vertex& v : vertices_) {
    scored.emplace_back(distance(v.q, q, space), v.id);
  }
  const std::size_t take = std::min(k, scored.size());
  std::partial_sort(scored.begin(), scored.begin() + static_cast<std::ptrdiff_t>(take),
                    scored.end());
  std::vector<std::uint64_t> out;
  out.reserve(take);
  for (std::size_t i = 0; i < take; ++i) out.push_back(scored[i].second);
  return out;
}

std::optional<std::uint64_t> Subgraph::find_exact(const Configuration& q) const {
  std::optional<std::uint64_t> best;
  for (const Vertex& v : vertices_) {
    if (v.q == q && (!best || v.id < *best)) best = v.id;
  }
  return best;
}

std::vector<std::uint64_t> Subgraph::shortest_path_ids(std::uint64_t u, std::uint64_t v) const {
  const std::uint32_t src = local_index(u);
  const std::uint32_t dst = local_index(v);
  const std::size_t n = vertices_.size();
  std::vector<double> dist(n, std::numeric_limits<double>::infinity());
  std::vector<std::uint32_t> prev(n, std::numeric_limits<std::uint32_t>::max());
  std::vector<bool> done(n, false);

  // Min-heap on (distance, vertex id) so equal-length alternatives resolve
  // toward lower ids and runs stay reproducible.
  using Entry = std::pair<std::pair<double, std::uint64_t>, std::uint32_t>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  dist[src] = 0.0;
  heap.push({{0.0, vertices_[src].id}, src});
  while (!heap.empty()) {
    const auto [key, cur] = heap.top();
    heap.pop();
    if (done[cur]) continue;
    done[cur] = true;
    if (cur == dst) break;
    for (const EdgeTo& e : adj_[cur]) {
      const double nd = dist[cur] + e.length;
      if (nd < dist[e.to]) {
        dist[e.to] = nd;
        prev[e.to] = cur;
        heap.push({{nd, vertices_[e.to].id}, e.to});
      }
    }
  }
  if (!done[dst]) return {};
  std::vector<std::uint64_t> path;
  for (std::uint32_t cur = dst;; cur = prev[cur]) {
    path.push_back(vertices_[cur].id);
    if (cur == src) break;
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<Configuration> Subgraph::shortest_path(std::uint64_t u, std::uint64_t v) const {
  std::vector<Configuration> out;
  for (std::uint64_t id : shortest_path_ids(u, v)) {
    out.push_back(vertex(id).q);
  }
  return out;
}

bool Subgraph::is_connected() const {
  if (vertices_.empty()) return true;
  std::vector<bool> seen(vertices_.size(), false);
  std::vector<std::uint32_t> stack{0};
  seen[0] = true;
  std::size_t visited = 1;
  while (!stack.empty()) {
    const std::uint32_t cur = stack.back();
    stack.pop_back();
    for (const EdgeTo& e : adj_[cur]) {
      if (!seen[e.to]) {
        seen[e.to] = true;
        ++visited;
        stack.push_back(e.to);
      }
    }
  }
  return visited == vertices_.size();
}

void Subgraph::absorb(Subgraph&& other) {
  const auto offset = static_cast<std::uint32_t>(vertices_.size());
  for (const Vertex& v : other.vertices_) {
    index_.emplace(v.id, static_cast<std::uint32_t>(vertices_.size()));
    vertices_.push_back(v);
  }
  for (std::vector<EdgeTo>& edges : other.adj_) {
    for (EdgeTo& e : edges) e.to += offset;
    adj_.push_back(std::move(edges));
  }
  edge_count_ += other.edge_count_;
  other.vertices_.clear();
  other.adj_.clear();
  other.index_.clear();
  other.edge_count_ = 0;
}

void Subgraph::pop_vertex() {
  if (vertices_.empty()) throw std::logic_error("pop_vertex on empty subgraph");
  const auto last = static_cast<std::uint32_t>(vertices_.size() - 1);
  for (const EdgeTo& e : adj_[last]) {
    auto& back_edges = adj_[e.to];
    std::erase_if(back_edges, [last](const EdgeTo& be) { return be.to == last; });
    --edge_count_;
  }
  index_.erase(vertices_.back().id);
  adj_.pop_back();
  vertices_.pop_back();
}

}  // namespace ll
