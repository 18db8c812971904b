#pragma once

#include <span>
#include <vector>

#include "cactus/graph.hpp"
#include "cactus/rational.hpp"
#include "cactus/resistance.hpp"

namespace cactus {

struct VertexInvariants {
  Vertex vertex = 0;
  Rational kf_v;  // sum of R(u, v) over u
  Rational d_v;   // sum of deg(u) * R(u, v) over u
};

struct InvariantReport {
  Rational wiener;
  Rational degree_distance;
  Rational kirchhoff;
  Rational degree_resistance;
  std::vector<VertexInvariants> per_vertex;
};

// Shortest-path invariants. All throw DisconnectedGraph on disconnected input.
Rational wiener(const Graph& g);
Rational degree_distance(const Graph& g);

// Resistance invariants, each from one all-pairs resistance solve.
Rational kirchhoff_index(const Graph& g);
Rational kf_v(const Graph& g, Vertex v);
Rational d_v(const Graph& g, Vertex v);
Rational degree_resistance_distance(const Graph& g);

// Same quantities from a precomputed matrix, for callers that need several.
Rational kirchhoff_index(const ResistanceMatrix& r);
Rational kf_v(const ResistanceMatrix& r, Vertex v);
Rational d_v(const Graph& g, const ResistanceMatrix& r, Vertex v);
Rational degree_resistance_distance(const Graph& g, const ResistanceMatrix& r);

InvariantReport invariant_report(const Graph& g);

/// What the cut-vertex gluing needs to know about one side, seen from the
/// gluing vertex: order, size, D_R, Kf_v and D_v.
struct RootedFragment {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  Rational dr;
  Rational kf;
  Rational d;
};

RootedFragment rooted_fragment(const Graph& g, Vertex root);

/// D_R of two fragments glued at their roots:
/// D_R(G1) + D_R(G2) + 2 m2 Kf(G1) + 2 m1 Kf(G2) + (n2 - 1) D(G1) + (n1 - 1) D(G2).
Rational glue_degree_resistance(const RootedFragment& first, const RootedFragment& second);

/// Splits g at cut vertex v into G1 = v + first_side and G2 = v + the rest,
/// and evaluates D_R(g) from the two halves. first_side may be empty
/// (then G1 is the single vertex v) or hold every other vertex.
///
/// Throws NotCutVertex if v is not a cut vertex of g, and
/// InconsistentPartition if first_side contains v, repeats a vertex, or
/// some edge joins the two sides.
Rational dr_via_cut_decomposition(const Graph& g, Vertex v, std::span<const Vertex> first_side);

}  // namespace cactus
