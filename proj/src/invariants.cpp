#include "cactus/invariants.hpp"

#include <algorithm>
#include <string>

#include "cactus/errors.hpp"

namespace cactus {

namespace {

void require_connected(const Graph& g) {
  if (!is_connected(g)) throw DisconnectedGraph();
}

Rational deg(const Graph& g, Vertex v) { return Rational(static_cast<std::int64_t>(g.degree(v))); }

}  // namespace

Rational wiener(const Graph& g) {
  require_connected(g);
  const auto dist = distance_matrix(g);
  std::int64_t total = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) total += static_cast<std::int64_t>(dist[u][v]);
  }
  return Rational(total);
}

Rational degree_distance(const Graph& g) {
  require_connected(g);
  const auto dist = distance_matrix(g);
  std::int64_t total = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      total += static_cast<std::int64_t>((g.degree(u) + g.degree(v)) * dist[u][v]);
    }
  }
  return Rational(total);
}

Rational kirchhoff_index(const ResistanceMatrix& r) {
  Rational total;
  for (Vertex u = 0; u < r.order(); ++u) {
    for (Vertex v = u + 1; v < r.order(); ++v) total += r(u, v);
  }
  return total;
}

Rational kf_v(const ResistanceMatrix& r, Vertex v) {
  if (v >= r.order()) throw InvalidVertex("vertex " + std::to_string(v) + " out of range");
  Rational total;
  for (Vertex u = 0; u < r.order(); ++u) total += r(u, v);
  return total;
}

Rational d_v(const Graph& g, const ResistanceMatrix& r, Vertex v) {
  require_vertex(g, v);
  Rational total;
  for (Vertex u = 0; u < r.order(); ++u) {
    if (u != v) total += deg(g, u) * r(u, v);
  }
  return total;
}

Rational degree_resistance_distance(const Graph& g, const ResistanceMatrix& r) {
  Rational total;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      total += Rational(static_cast<std::int64_t>(g.degree(u) + g.degree(v))) * r(u, v);
    }
  }
  return total;
}

Rational kirchhoff_index(const Graph& g) {
  require_connected(g);
  return kirchhoff_index(resistance_matrix(g));
}

Rational kf_v(const Graph& g, Vertex v) {
  require_vertex(g, v);
  require_connected(g);
  return kf_v(resistance_matrix(g), v);
}

Rational d_v(const Graph& g, Vertex v) {
  require_vertex(g, v);
  require_connected(g);
  return d_v(g, resistance_matrix(g), v);
}

Rational degree_resistance_distance(const Graph& g) {
  require_connected(g);
  return degree_resistance_distance(g, resistance_matrix(g));
}

InvariantReport invariant_report(const Graph& g) {
  require_connected(g);
  const ResistanceMatrix r = resistance_matrix(g);
  InvariantReport report;
  report.wiener = wiener(g);
  report.degree_distance = degree_distance(g);
  report.kirchhoff = kirchhoff_index(r);
  report.degree_resistance = degree_resistance_distance(g, r);
  report.per_vertex.reserve(g.order());
  for (Vertex v = 0; v < g.order(); ++v) report.per_vertex.push_back({v, kf_v(r, v), d_v(g, r, v)});
  return report;
}

RootedFragment rooted_fragment(const Graph& g, Vertex root) {
  require_vertex(g, root);
  require_connected(g);
  const ResistanceMatrix r = resistance_matrix(g);
  return RootedFragment{g.order(), g.size(), degree_resistance_distance(g, r), kf_v(r, root),
                        d_v(g, r, root)};
}

Rational glue_degree_resistance(const RootedFragment& first, const RootedFragment& second) {
  auto count = [](std::size_t x) { return Rational(static_cast<std::int64_t>(x)); };
  return first.dr + second.dr + Rational(2) * count(second.edges) * first.kf +
         Rational(2) * count(first.edges) * second.kf + count(second.vertices - 1) * first.d +
         count(first.vertices - 1) * second.d;
}

Rational dr_via_cut_decomposition(const Graph& g, Vertex v, std::span<const Vertex> first_side) {
  require_vertex(g, v);
  require_connected(g);
  if (components_without(g, v).size() < 2) {
    throw NotCutVertex("vertex " + std::to_string(v) + " is not a cut vertex");
  }
  std::vector<bool> in_first(g.order(), false);
  for (Vertex u : first_side) {
    require_vertex(g, u);
    if (u == v) throw InconsistentPartition("the cut vertex cannot belong to a side");
    if (in_first[u]) throw InconsistentPartition("vertex " + std::to_string(u) + " listed twice");
    in_first[u] = true;
  }
  for (const auto& [a, b] : g.edges()) {
    if (a == v || b == v) continue;
    if (in_first[a] != in_first[b]) {
      throw InconsistentPartition("edge " + std::to_string(a) + "-" + std::to_string(b) +
                                  " crosses the two sides");
    }
  }
  // Root (the cut vertex) goes first in both halves.
  std::vector<Vertex> first{v};
  std::vector<Vertex> second{v};
  for (Vertex u = 0; u < g.order(); ++u) {
    if (u == v) continue;
    (in_first[u] ? first : second).push_back(u);
  }
  return glue_degree_resistance(rooted_fragment(g.induced(first), 0),
                                rooted_fragment(g.induced(second), 0));
}

}  // namespace cactus
