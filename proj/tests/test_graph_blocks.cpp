#include <gtest/gtest.h>

#include "cactus/blocks.hpp"
#include "cactus/errors.hpp"
#include "oracles.hpp"

using namespace cactus;

TEST(Graph, RejectsBadEdges) {
  EXPECT_THROW(Graph(3, {{0, 0}}), InvalidGraph);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), InvalidGraph);
  EXPECT_THROW(Graph(3, {{0, 3}}), InvalidGraph);
}

TEST(Graph, BasicQueries) {
  const Graph g = oracle::bowtie();
  EXPECT_EQ(g.degree(0), 4u);
  EXPECT_TRUE(g.has_edge(3, 0));
  EXPECT_FALSE(g.has_edge(1, 3));
  EXPECT_TRUE(is_connected(g));
  EXPECT_FALSE(is_connected(Graph(2)));
  EXPECT_EQ(bfs_distances(oracle::path(4), 0), (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(components_without(g, 0).size(), 2u);
  EXPECT_THROW(require_vertex(g, 5), InvalidVertex);
}

TEST(Graph, RelabelPreservesStructure) {
  const Graph g = oracle::path(4);
  const std::vector<Vertex> image{3, 2, 1, 0};
  EXPECT_EQ(g.relabeled(image), g);
  const std::vector<Vertex> swap{1, 0, 2, 3};
  EXPECT_EQ(g.relabeled(swap).edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {2, 3}}));
}

TEST(Blocks, Bowtie) {
  const auto d = block_decomposition(oracle::bowtie());
  EXPECT_EQ(d.cut_vertices, std::vector<Vertex>{0});
  ASSERT_EQ(d.blocks.size(), 2u);
  EXPECT_TRUE(d.blocks[0].is_cycle());
  EXPECT_TRUE(d.blocks[1].is_cycle());
  EXPECT_EQ(cactus_check(oracle::bowtie()), 2u);
}

TEST(Blocks, PathIsAllBridges) {
  const auto d = block_decomposition(oracle::path(4));
  EXPECT_EQ(d.cut_vertices, (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(d.blocks.size(), 3u);
  for (const auto& b : d.blocks) EXPECT_TRUE(b.is_bridge());
}

TEST(Blocks, CycleIsOneBlock) {
  const auto d = block_decomposition(oracle::cycle(5));
  EXPECT_TRUE(d.cut_vertices.empty());
  ASSERT_EQ(d.blocks.size(), 1u);
  EXPECT_EQ(d.blocks[0].vertices.size(), 5u);
  EXPECT_EQ(cactus_check(oracle::cycle(5)), 1u);
  EXPECT_EQ(cactus_cycles(oracle::cycle(5)).size(), 1u);
}

TEST(Blocks, NonCactusAndDisconnected) {
  const Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_THROW(cactus_check(k4), NotCactus);
  // Two 4-cycles sharing an edge.
  const Graph theta(6, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {4, 5}, {5, 3}});
  EXPECT_THROW(cactus_check(theta), NotCactus);
  EXPECT_THROW(block_decomposition(Graph(3, {{0, 1}})), DisconnectedGraph);
}

TEST(BlocksProperty, TreesHaveNoCycles) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + trial % 15;
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
    const Graph tree(n, edges);
    EXPECT_EQ(cactus_check(tree), 0u);
    EXPECT_EQ(block_decomposition(tree).blocks.size(), n - 1);
  }
}

// Edges of all blocks partition the edge set.
TEST(BlocksProperty, BlocksPartitionEdges) {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(3 + trial % 10, 0.4, rng);
    if (!is_connected(g)) continue;
    std::vector<Edge> all;
    for (const auto& b : block_decomposition(g).blocks) all.insert(all.end(), b.edges.begin(), b.edges.end());
    std::sort(all.begin(), all.end());
    EXPECT_EQ(all, g.edges());
  }
}

TEST(Blocks, CycleOrderWalksTheCycle) {
  const Graph g = oracle::cycle(5);
  const auto order = cycle_order(g, block_decomposition(g).blocks[0], 2);
  ASSERT_EQ(order.size(), 5u);
  EXPECT_EQ(order[0], 2u);
  for (std::size_t i = 0; i < 5; ++i) EXPECT_TRUE(g.has_edge(order[i], order[(i + 1) % 5]));
}
