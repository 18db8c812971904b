#include <gtest/gtest.h>

#include <random>

#include "cactus/errors.hpp"
#include "cactus/graph_io.hpp"
#include "oracles.hpp"

using namespace cactus;

namespace {

ParseErrorKind graph6_error(std::string_view text) {
  try {
    parse_graph6(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for '" << text << "'";
  return ParseErrorKind::BadSyntax;
}

ParseErrorKind edge_list_error(std::string_view text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error for '" << text << "'";
  return ParseErrorKind::BadSyntax;
}

}  // namespace

TEST(Graph6, KnownStrings) {
  const Graph triangle = parse_graph6("Bw");
  EXPECT_EQ(triangle.order(), 3u);
  EXPECT_EQ(triangle.size(), 3u);

  const Graph path = parse_graph6("Bg");
  EXPECT_EQ(path.order(), 3u);
  EXPECT_EQ(path.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));

  EXPECT_EQ(parse_graph6("@").order(), 1u);
  EXPECT_EQ(parse_graph6("?").order(), 0u);
  EXPECT_EQ(emit_graph6(oracle::cycle(3)), "Bw");
  EXPECT_EQ(emit_graph6(Graph(3, {{1, 2}, {0, 1}})), "Bg");
  EXPECT_EQ(emit_graph6(Graph(3, {{0, 2}, {1, 2}})), "BW");
}

TEST(Graph6, ToleratesLineTerminator) {
  EXPECT_EQ(parse_graph6("Bw\n").size(), 3u);
  EXPECT_EQ(parse_graph6("Bw\r\n").size(), 3u);
}

TEST(Graph6, ErrorKinds) {
  EXPECT_EQ(graph6_error(""), ParseErrorKind::MalformedHeader);
  EXPECT_EQ(graph6_error("~?@?"), ParseErrorKind::MalformedHeader);
  EXPECT_EQ(graph6_error("D"), ParseErrorKind::TruncatedBits);
  EXPECT_EQ(graph6_error("Bww"), ParseErrorKind::TrailingData);
  EXPECT_EQ(graph6_error("B "), ParseErrorKind::BadCharacter);
  // Padding bits after the triangle must be zero.
  EXPECT_EQ(graph6_error("Bx"), ParseErrorKind::TrailingData);
}

TEST(Graph6, TooLargeToEmit) { EXPECT_THROW(emit_graph6(Graph(63)), UnsupportedSize); }

TEST(Graph6Property, RoundTripsRandomGraphs) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = trial % 63;
    const Graph g = oracle::random_graph(n, 0.3, rng);
    const std::string text = emit_graph6(g);
    EXPECT_EQ(parse_graph6(text), g) << text;
    EXPECT_EQ(emit_graph6(parse_graph6(text)), text);
  }
}

TEST(EdgeList, ParsesCommentsAndHeader) {
  const Graph g = parse_edge_list("# bowtie\nn 5\n0 1\n1 2\n\n0 2\n0 3\n3 4\n0 4\n");
  EXPECT_EQ(g, oracle::bowtie());
  EXPECT_EQ(parse_edge_list("0 1\n1 2\n").order(), 3u);
  EXPECT_EQ(parse_edge_list("n 4\n0 1\n").order(), 4u);
}

TEST(EdgeList, ErrorKinds) {
  EXPECT_EQ(edge_list_error("0 0\n"), ParseErrorKind::SelfLoop);
  EXPECT_EQ(edge_list_error("0 1\n1 0\n"), ParseErrorKind::DuplicateEdge);
  EXPECT_EQ(edge_list_error("-1 2\n"), ParseErrorKind::NegativeIndex);
  EXPECT_EQ(edge_list_error("n 3\n0 3\n"), ParseErrorKind::IndexOutOfRange);
  EXPECT_EQ(edge_list_error("0 x\n"), ParseErrorKind::BadSyntax);
  EXPECT_EQ(edge_list_error(""), ParseErrorKind::BadSyntax);
}

TEST(EdgeListProperty, RoundTrips) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 20, 0.25, rng);
    EXPECT_EQ(parse_edge_list(emit_edge_list(g)), g);
  }
}
