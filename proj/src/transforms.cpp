#include "cactus/transforms.hpp"

#include <algorithm>
#include <string>

#include "cactus/blocks.hpp"
#include "cactus/errors.hpp"

namespace cactus {

Graph sigma_transform(const Graph& g, Vertex v) {
  require_vertex(g, v);
  std::vector<Vertex> pendants;
  std::vector<Vertex> others;
  for (Vertex w : g.neighbors(v)) (is_leaf(g, w) ? pendants : others).push_back(w);
  if (pendants.empty()) throw MissingPendants("vertex " + std::to_string(v) + " has no pendant neighbors");
  if (others.size() >= 2) {
    throw AmbiguousNeighbor("vertex " + std::to_string(v) + " has " + std::to_string(others.size()) +
                            " non-pendant neighbors");
  }
  Vertex u = 0;
  if (others.size() == 1) {
    u = others.front();
  } else {
    // Star centered at v: any leaf can take the role of u.
    u = pendants.front();
    pendants.erase(pendants.begin());
  }
  if (pendants.empty()) {
    throw MissingPendants("vertex " + std::to_string(v) + " has no pendant edges to move");
  }
  std::vector<Edge> removed;
  std::vector<Edge> added;
  for (Vertex p : pendants) {
    removed.emplace_back(v, p);
    added.emplace_back(u, p);
  }
  return g.with_edges_removed(removed).with_edges_added(added);
}

std::vector<EndCycle> find_end_cycles(const Graph& g) {
  const std::size_t t = cactus_check(g);
  if (t < 2) {
    throw DefinitionDomain("end cycles are defined for cacti with at least two cycles, got t = " +
                           std::to_string(t));
  }
  std::vector<EndCycle> out;
  for (const Block& block : block_decomposition(g).blocks) {
    if (!block.is_cycle()) continue;
    std::vector<Vertex> attached;
    for (Vertex v : block.vertices) {
      const bool outside = std::any_of(g.neighbors(v).begin(), g.neighbors(v).end(), [&](Vertex w) {
        return !std::binary_search(block.vertices.begin(), block.vertices.end(), w);
      });
      if (outside) attached.push_back(v);
    }
    if (attached.size() == 1) out.push_back(EndCycle{cycle_order(g, block, attached.front()), attached.front()});
  }
  return out;
}

namespace {

void validate_end_cycle(const Graph& g, const EndCycle& c) {
  const auto& cyc = c.cycle_vertices;
  const std::size_t h = cyc.size();
  auto fail = [](const std::string& why) { throw NotEndCycle("not an end cycle: " + why); };
  if (h < 3) fail("fewer than three vertices");
  if (cyc.front() != c.anchor) fail("anchor must be listed first");
  for (Vertex v : cyc) require_vertex(g, v);
  std::vector<Vertex> sorted = cyc;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail("repeated vertex");
  for (std::size_t i = 0; i < h; ++i) {
    if (!g.has_edge(cyc[i], cyc[(i + 1) % h])) fail("consecutive vertices are not adjacent");
  }
  for (std::size_t i = 1; i < h; ++i) {
    if (g.degree(cyc[i]) != 2) fail("vertex " + std::to_string(cyc[i]) + " has neighbors off the cycle");
  }
  if (g.degree(c.anchor) <= 2) fail("the anchor has no neighbor outside the cycle");
}

}  // namespace

Graph lemma7_transform(const Graph& g, const EndCycle& cycle, CycleDirection direction) {
  validate_end_cycle(g, cycle);
  const auto& cyc = cycle.cycle_vertices;
  const std::size_t h = cyc.size();
  if (h < 4) throw CycleTooShort("the cycle-shortening transform needs a cycle of length >= 4");
  const Vertex u = cycle.anchor;
  const Vertex v = direction == CycleDirection::Forward ? cyc[1] : cyc[h - 1];
  const Vertex w = direction == CycleDirection::Forward ? cyc[2] : cyc[h - 2];
  const Edge removed[] = {{v, w}};
  const Edge added[] = {{u, w}};
  return g.with_edges_removed(removed).with_edges_added(added);
}

Graph attach_pendants(const Graph& g, Vertex v, std::size_t count) {
  require_vertex(g, v);
  auto edges = g.edges();
  for (std::size_t i = 0; i < count; ++i) edges.emplace_back(v, g.order() + i);
  return Graph(g.order() + count, edges);
}

}  // namespace cactus
