#include <gtest/gtest.h>

#include "cactus/canonical.hpp"
#include "cactus/errors.hpp"
#include "cactus/families.hpp"
#include "cactus/invariants.hpp"
#include "cactus/transforms.hpp"
#include "oracles.hpp"

using namespace cactus;

TEST(Sigma, StarCenterKeepsValue) {
  const Graph p3 = oracle::path(3);
  const Graph after = sigma_transform(p3, 1);
  EXPECT_TRUE(are_isomorphic(after, oracle::star(3)));
  EXPECT_EQ(degree_resistance_distance(after), Rational(10));
  EXPECT_EQ(degree_resistance_distance(p3), Rational(10));
}

TEST(Sigma, PathBecomesStar) {
  const Graph after = sigma_transform(oracle::path(4), 1);
  EXPECT_TRUE(are_isomorphic(after, oracle::star(4)));
  EXPECT_EQ(degree_resistance_distance(oracle::path(4)), Rational(28));
  EXPECT_EQ(degree_resistance_distance(after), Rational(24));
}

TEST(Sigma, Errors) {
  EXPECT_THROW(sigma_transform(oracle::cycle(4), 0), MissingPendants);
  // Vertex 2 has a pendant (5) and two non-pendant neighbours.
  const Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}});
  EXPECT_THROW(sigma_transform(g, 2), AmbiguousNeighbor);
  EXPECT_THROW(sigma_transform(g, 9), InvalidVertex);
}

TEST(EndCycles, Examples) {
  const auto bowtie = find_end_cycles(oracle::bowtie());
  ASSERT_EQ(bowtie.size(), 2u);
  for (const auto& c : bowtie) {
    EXPECT_EQ(c.anchor, 0u);
    EXPECT_EQ(c.cycle_vertices.front(), 0u);
  }

  const Graph chain(7, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}, {4, 5}, {5, 6}, {4, 6}});
  const auto ends = find_end_cycles(chain);
  ASSERT_EQ(ends.size(), 2u);
  std::vector<Vertex> anchors{ends[0].anchor, ends[1].anchor};
  std::sort(anchors.begin(), anchors.end());
  EXPECT_EQ(anchors, (std::vector<Vertex>{2, 4}));

  EXPECT_EQ(find_end_cycles(build_g0(9, 2)).size(), 2u);
  EXPECT_THROW(find_end_cycles(oracle::cycle(5)), DefinitionDomain);
}

TEST(CycleShortening, BoundaryCase) {
  const Graph g = build_cycle_pendant(5);
  const Graph shortened = lemma7_transform(g, {{0, 1, 2, 3}, 0});
  EXPECT_TRUE(are_isomorphic(shortened, build_g0(5, 1)));
  EXPECT_EQ(degree_resistance_distance(g) - degree_resistance_distance(shortened), Rational(-5, 3));
  const Graph backward = lemma7_transform(g, {{0, 1, 2, 3}, 0}, CycleDirection::Backward);
  EXPECT_TRUE(are_isomorphic(backward, shortened));
}

TEST(CycleShortening, Errors) {
  const Graph bowtie = oracle::bowtie();
  EXPECT_THROW(lemma7_transform(bowtie, {{0, 1, 2}, 0}), CycleTooShort);
  EXPECT_THROW(lemma7_transform(bowtie, {{1, 0, 2}, 1}), NotEndCycle);
  EXPECT_THROW(lemma7_transform(oracle::cycle(5), {{0, 1, 2, 3, 4}, 0}), NotEndCycle);
}

TEST(AttachPendants, AddsLeaves) {
  const Graph g = attach_pendants(oracle::cycle(4), 2, 3);
  EXPECT_EQ(g.order(), 7u);
  EXPECT_EQ(g.degree(2), 5u);
  EXPECT_EQ(attach_pendants(g, 0, 0), g);
}
