#include "cactus/blocks.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "cactus/errors.hpp"

namespace cactus {

namespace {

// Iterative Hopcroft-Tarjan with an explicit edge stack.
class BlockFinder {
 public:
  explicit BlockFinder(const Graph& g)
      : g_(g), disc_(g.order(), kUnvisited), low_(g.order(), 0), is_cut_(g.order(), false) {}

  BlockDecomposition run() {
    dfs(0);
    BlockDecomposition out;
    for (Vertex v = 0; v < g_.order(); ++v) {
      if (is_cut_[v]) out.cut_vertices.push_back(v);
    }
    std::sort(blocks_.begin(), blocks_.end(),
              [](const Block& a, const Block& b) { return a.vertices < b.vertices; });
    out.blocks = std::move(blocks_);
    return out;
  }

 private:
  static constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);

  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;  // index into neighbors(v)
  };

  void dfs(Vertex root) {
    std::vector<Frame> stack;
    disc_[root] = low_[root] = timer_++;
    stack.push_back({root, root, 0});
    std::size_t root_children = 0;
    while (!stack.empty()) {
      Frame& f = stack.back();
      const auto nbrs = g_.neighbors(f.v);
      if (f.next < nbrs.size()) {
        const Vertex w = nbrs[f.next++];
        if (disc_[w] == kUnvisited) {
          edge_stack_.emplace_back(f.v, w);
          disc_[w] = low_[w] = timer_++;
          if (f.v == root) ++root_children;
          stack.push_back({w, f.v, 0});
        } else if (w != f.parent && disc_[w] < disc_[f.v]) {
          edge_stack_.emplace_back(f.v, w);
          low_[f.v] = std::min(low_[f.v], disc_[w]);
        }
        continue;
      }
      const Vertex v = f.v;
      const Vertex parent = f.parent;
      stack.pop_back();
      if (stack.empty()) break;
      low_[parent] = std::min(low_[parent], low_[v]);
      if (low_[v] >= disc_[parent]) {
        if (parent != root) is_cut_[parent] = true;
        pop_block(parent, v);
      }
    }
    if (root_children > 1) is_cut_[root] = true;
  }

  void pop_block(Vertex parent, Vertex child) {
    Block block;
    std::set<Vertex> verts;
    while (!edge_stack_.empty()) {
      Edge e = edge_stack_.back();
      edge_stack_.pop_back();
      verts.insert(e.first);
      verts.insert(e.second);
      const bool last = (e.first == parent && e.second == child);
      if (e.first > e.second) std::swap(e.first, e.second);
      block.edges.push_back(e);
      if (last) break;
    }
    std::sort(block.edges.begin(), block.edges.end());
    block.vertices.assign(verts.begin(), verts.end());
    blocks_.push_back(std::move(block));
  }

  const Graph& g_;
  std::vector<std::size_t> disc_;
  std::vector<std::size_t> low_;
  std::vector<bool> is_cut_;
  std::vector<Edge> edge_stack_;
  std::vector<Block> blocks_;
  std::size_t timer_ = 0;
};

std::string describe(const Block& b) {
  std::string s = "{";
  for (std::size_t i = 0; i < b.vertices.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(b.vertices[i]);
  }
  return s + "}";
}

}  // namespace

BlockDecomposition block_decomposition(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraph();
  return BlockFinder(g).run();
}

std::size_t cactus_check(const Graph& g) {
  const auto decomposition = block_decomposition(g);
  std::size_t cycles = 0;
  for (std::size_t i = 0; i < decomposition.blocks.size(); ++i) {
    const Block& b = decomposition.blocks[i];
    if (b.is_bridge()) continue;
    if (b.is_cycle()) {
      ++cycles;
      continue;
    }
    throw NotCactus("block " + std::to_string(i) + " on vertices " + describe(b) + " has " +
                    std::to_string(b.edges.size()) + " edges on " + std::to_string(b.vertices.size()) +
                    " vertices; it is neither an edge nor a cycle");
  }
  return cycles;
}

std::vector<Vertex> cycle_order(const Graph& g, const Block& block, Vertex start) {
  auto in_block = [&](Vertex a, Vertex b) {
    const Edge e{std::min(a, b), std::max(a, b)};
    return std::binary_search(block.edges.begin(), block.edges.end(), e);
  };
  if (!std::binary_search(block.vertices.begin(), block.vertices.end(), start)) {
    throw InvalidVertex("start vertex is not on the cycle");
  }
  // Walk from start towards its smaller block neighbor, never stepping back.
  std::vector<Vertex> order{start};
  Vertex previous = start;
  Vertex current = start;
  while (order.size() < block.vertices.size()) {
    Vertex next = current;
    for (Vertex w : g.neighbors(current)) {
      if (w != previous && w != start && in_block(current, w)) {
        next = w;
        break;
      }
    }
    if (next == current) throw NotCactus("block is not a simple cycle");
    previous = current;
    current = next;
    order.push_back(current);
  }
  return order;
}

std::vector<std::vector<Vertex>> cactus_cycles(const Graph& g) {
  cactus_check(g);
  std::vector<std::vector<Vertex>> out;
  for (const Block& b : block_decomposition(g).blocks) {
    if (b.is_cycle()) out.push_back(cycle_order(g, b, b.vertices.front()));
  }
  return out;
}

}  // namespace cactus
