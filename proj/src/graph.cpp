#include "cactus/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "cactus/errors.hpp"

namespace cactus {

Graph::Graph(std::size_t n) : adjacency_(n) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : adjacency_(n) {
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InvalidGraph("edge (" + std::to_string(u) + "," + std::to_string(v) +
                         ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
    }
    if (u == v) throw InvalidGraph("self-loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& list : adjacency_) {
    std::sort(list.begin(), list.end());
    if (std::adjacent_find(list.begin(), list.end()) != list.end()) {
      throw InvalidGraph("repeated edge");
    }
  }
  edge_count_ = edges.size();
}

Graph::Graph(std::size_t n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

bool Graph::has_edge(Vertex u, Vertex v) const {
  if (u >= order() || v >= order()) return false;
  const auto& list = adjacency_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u) {
    for (Vertex v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::with_edges_added(std::span<const Edge> extra) const {
  auto all = edges();
  all.insert(all.end(), extra.begin(), extra.end());
  return Graph(order(), all);
}

Graph Graph::with_edges_removed(std::span<const Edge> gone) const {
  auto all = edges();
  for (auto [u, v] : gone) {
    if (u > v) std::swap(u, v);
    auto it = std::find(all.begin(), all.end(), Edge{u, v});
    if (it == all.end()) throw InvalidGraph("cannot remove a missing edge");
    all.erase(it);
  }
  return Graph(order(), all);
}

Graph Graph::relabeled(std::span<const Vertex> image) const {
  if (image.size() != order()) throw InvalidGraph("relabeling has the wrong length");
  std::vector<Edge> mapped;
  mapped.reserve(edge_count_);
  for (const auto& [u, v] : edges()) mapped.emplace_back(image[u], image[v]);
  return Graph(order(), mapped);
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<std::size_t> position(order(), order());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    require_vertex(*this, keep[i]);
    position[keep[i]] = i;
  }
  std::vector<Edge> sub;
  for (const auto& [u, v] : edges()) {
    if (position[u] != order() && position[v] != order()) sub.emplace_back(position[u], position[v]);
  }
  return Graph(keep.size(), sub);
}

void require_vertex(const Graph& g, Vertex v) {
  if (v >= g.order()) {
    throw InvalidVertex("vertex " + std::to_string(v) + " out of range for a graph on " +
                        std::to_string(g.order()) + " vertices");
  }
}

std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source) {
  require_vertex(g, source);
  const std::size_t n = g.order();
  std::vector<std::size_t> dist(n, n);
  std::queue<Vertex> frontier;
  dist[source] = 0;
  frontier.push(source);
  while (!frontier.empty()) {
    const Vertex u = frontier.front();
    frontier.pop();
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == n) {
        dist[w] = dist[u] + 1;
        frontier.push(w);
      }
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  const auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [&](std::size_t d) { return d == g.order(); });
}

std::vector<std::vector<std::size_t>> distance_matrix(const Graph& g) {
  std::vector<std::vector<std::size_t>> out;
  out.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) out.push_back(bfs_distances(g, v));
  return out;
}

std::vector<std::vector<Vertex>> components_without(const Graph& g, Vertex removed) {
  require_vertex(g, removed);
  std::vector<bool> seen(g.order(), false);
  seen[removed] = true;
  std::vector<std::vector<Vertex>> out;
  for (Vertex start = 0; start < g.order(); ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> comp{start};
    seen[start] = true;
    for (std::size_t i = 0; i < comp.size(); ++i) {
      for (Vertex w : g.neighbors(comp[i])) {
        if (!seen[w]) {
          seen[w] = true;
          comp.push_back(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_leaf(const Graph& g, Vertex v) { return g.degree(v) == 1; }

}  // namespace cactus
