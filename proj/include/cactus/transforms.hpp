#pragma once

#include <vector>

#include "cactus/graph.hpp"

namespace cactus {

/// Moves every pendant edge at v to v's unique non-pendant neighbor u.
///
/// v must have degree p + 1 with p >= 1 pendant neighbors. When all of v's
/// neighbors are pendant (v is a star center) the smallest neighbor plays u.
/// Throws MissingPendants if v has no pendant neighbor to move, and
/// AmbiguousNeighbor if v has two or more non-pendant neighbors.
Graph sigma_transform(const Graph& g, Vertex v);

/// A cycle with exactly one vertex (the anchor) adjacent to the rest of the graph.
struct EndCycle {
  std::vector<Vertex> cycle_vertices;  // cyclic order, anchor first
  Vertex anchor = 0;

  friend bool operator==(const EndCycle&, const EndCycle&) = default;
};

/// End cycles of a cactus with at least two cycles, in block order.
/// Throws DefinitionDomain when the cactus has fewer than two cycles.
std::vector<EndCycle> find_end_cycles(const Graph& g);

enum class CycleDirection { Forward, Backward };

/// Shortens an end cycle u v w ... by deleting vw and adding uw, which leaves
/// v as a pendant at the anchor u. Forward takes v = cycle_vertices[1];
/// Backward walks the cycle the other way.
///
/// Throws NotEndCycle if `cycle` does not describe an end cycle of g, and
/// CycleTooShort for triangles.
Graph lemma7_transform(const Graph& g, const EndCycle& cycle, CycleDirection direction = CycleDirection::Forward);

/// Graph with `count` new pendant vertices attached at v (appended after n-1).
Graph attach_pendants(const Graph& g, Vertex v, std::size_t count);

}  // namespace cactus
