#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace cactus {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
///
/// Construction rejects self-loops, repeated edges and out-of-range endpoints,
/// so every Graph value is simple with symmetric adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edge_count_; }

  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_.at(v); }
  bool has_edge(Vertex u, Vertex v) const;

  /// Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  Graph with_edges_added(std::span<const Edge> extra) const;
  Graph with_edges_removed(std::span<const Edge> gone) const;

  /// Graph on vertex_count new vertices with u mapped to image[u].
  Graph relabeled(std::span<const Vertex> image) const;

  /// Subgraph induced by `keep`; vertex keep[i] becomes i.
  Graph induced(std::span<const Vertex> keep) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Throws InvalidVertex unless v < g.order().
void require_vertex(const Graph& g, Vertex v);

bool is_connected(const Graph& g);

/// Hop distances from `source`; unreachable vertices get g.order().
std::vector<std::size_t> bfs_distances(const Graph& g, Vertex source);

/// All-pairs hop distances (row-major n x n).
std::vector<std::vector<std::size_t>> distance_matrix(const Graph& g);

/// Connected components of g minus `removed`, each sorted; `removed` itself excluded.
std::vector<std::vector<Vertex>> components_without(const Graph& g, Vertex removed);

bool is_leaf(const Graph& g, Vertex v);

}  // namespace cactus
