#pragma once

#include <vector>

#include "cactus/graph.hpp"

namespace cactus {

struct Block {
  std::vector<Edge> edges;       // (u, v) with u < v, sorted
  std::vector<Vertex> vertices;  // sorted

  bool is_bridge() const { return edges.size() == 1; }
  bool is_cycle() const { return edges.size() >= 3 && edges.size() == vertices.size(); }
};

struct BlockDecomposition {
  std::vector<Vertex> cut_vertices;  // sorted
  std::vector<Block> blocks;         // ordered by smallest vertex, then vertex list
};

/// Biconnected components of a connected graph. Throws DisconnectedGraph.
BlockDecomposition block_decomposition(const Graph& g);

/// Number of cycle blocks. Throws NotCactus if some block is neither a single
/// edge nor a cycle; the message names the offending block.
std::size_t cactus_check(const Graph& g);

/// Cycle blocks of a cactus, each listed in cyclic order starting at its
/// smallest vertex.
std::vector<std::vector<Vertex>> cactus_cycles(const Graph& g);

/// Vertices of a cycle block in cyclic order starting at `start`.
std::vector<Vertex> cycle_order(const Graph& g, const Block& block, Vertex start);

}  // namespace cactus
