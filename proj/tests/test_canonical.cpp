#include <gtest/gtest.h>

#include "cactus/canonical.hpp"
#include "cactus/errors.hpp"
#include "cactus/families.hpp"
#include "cactus/graph_io.hpp"
#include "oracles.hpp"

using namespace cactus;

TEST(Canonical, AllTriangleLabelingsAgree) {
  const CanonicalForm a = canonical_form(Graph(3, {{0, 1}, {1, 2}, {0, 2}}));
  const CanonicalForm b = canonical_form(Graph(3, {{2, 1}, {0, 2}, {1, 0}}));
  EXPECT_EQ(a, b);
}

TEST(Canonical, DistinguishesSameDegreeCounts) {
  // C4 and a triangle with a pendant both have 4 vertices and 4 edges.
  EXPECT_FALSE(are_isomorphic(oracle::cycle(4), build_cycle_pendant(4)));
  // Same degree sequence, different structure.
  const Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {2, 3}});
  const Graph c6_chord(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
  EXPECT_FALSE(are_isomorphic(two_triangles, c6_chord));
  EXPECT_FALSE(are_isomorphic(oracle::cycle(3), oracle::path(3)));
  EXPECT_FALSE(are_isomorphic(oracle::cycle(5), oracle::bowtie()));
}

TEST(Canonical, PathLabelings) {
  EXPECT_TRUE(are_isomorphic(Graph(3, {{0, 1}, {1, 2}}), Graph(3, {{0, 2}, {2, 1}})));
}

TEST(Canonical, OrderLimit) {
  EXPECT_THROW(canonical_form(oracle::path(17)), UnsupportedSize);
  EXPECT_NO_THROW(canonical_form(oracle::path(16)));
}

TEST(CanonicalProperty, InvariantUnderRandomRelabeling) {
  std::mt19937_64 rng(41);
  std::vector<Graph> graphs{oracle::bowtie(), oracle::cycle(6), build_g0(9, 3), build_g5(10, 3), build_g8(11, 3),
                            build_g10(11, 2)};
  for (int i = 0; i < 6; ++i) graphs.push_back(oracle::random_graph(6 + 2 * i, 0.35, rng));
  for (const Graph& g : graphs) {
    const CanonicalForm form = canonical_form(g);
    for (int trial = 0; trial < 100; ++trial) {
      const auto perm = oracle::random_permutation(g.order(), rng);
      EXPECT_EQ(canonical_form(g.relabeled(perm)), form);
    }
  }
}

TEST(CanonicalProperty, CertificateIsTheRelabeledGraph) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(2 + trial % 12, 0.4, rng);
    const CanonicalForm form = canonical_form(g);
    EXPECT_EQ(emit_graph6(g.relabeled(canonical_labeling(g))), form.certificate);
  }
}

// Non-isomorphic graphs get different certificates: compare with an
// exhaustive permutation search on small random pairs.
TEST(CanonicalProperty, AgreesWithPermutationSearch) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 4 + trial % 3;
    const Graph a = oracle::random_graph(n, 0.5, rng);
    const Graph b = oracle::random_graph(n, 0.5, rng);
    if (a.size() != b.size()) continue;
    std::vector<Vertex> p(n);
    std::iota(p.begin(), p.end(), Vertex{0});
    bool iso = false;
    do {
      if (a.relabeled(p) == b) iso = true;
    } while (!iso && std::next_permutation(p.begin(), p.end()));
    EXPECT_EQ(are_isomorphic(a, b), iso);
  }
}
