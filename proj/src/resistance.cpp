#include "cactus/resistance.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <array>

#include "cactus/errors.hpp"

namespace cactus {

ResistanceMatrix::ResistanceMatrix(std::size_t n, std::vector<Rational> values)
    : n_(n), values_(std::move(values)) {
  if (values_.size() != n * n) throw DimensionError("resistance matrix must be n x n");
}

RationalMatrix laplacian(const Graph& g) {
  const std::size_t n = g.order();
  RationalMatrix l(n, n);
  for (Vertex v = 0; v < n; ++v) {
    l(v, v) = static_cast<std::int64_t>(g.degree(v));
    for (Vertex w : g.neighbors(v)) l(v, w) = -1;
  }
  return l;
}

Rational spanning_tree_count(const Graph& g) {
  if (g.order() == 0) throw DisconnectedGraph();
  const std::array<std::size_t, 1> ground{0};
  Rational count = determinant_exact(laplacian(g).without(ground));
  if (count.is_zero()) throw DisconnectedGraph();
  return count;
}

Rational effective_resistance(const Graph& g, Vertex u, Vertex v) {
  require_vertex(g, u);
  require_vertex(g, v);
  const RationalMatrix l = laplacian(g);
  const std::array<std::size_t, 1> one{v};
  const Rational trees = determinant_exact(l.without(one));
  if (trees.is_zero()) throw DisconnectedGraph();
  if (u == v) return Rational(0);
  const std::array<std::size_t, 2> two{u, v};
  return determinant_exact(l.without(two)) / trees;
}

ResistanceMatrix resistance_matrix(const Graph& g, Vertex ground) {
  require_vertex(g, ground);
  const std::size_t n = g.order();
  const std::array<std::size_t, 1> drop{ground};
  RationalMatrix inverse;
  try {
    inverse = inverse_exact(laplacian(g).without(drop));
  } catch (const SingularMatrix&) {
    throw DisconnectedGraph();
  }
  // Position of each vertex inside the grounded matrix; ground maps to none.
  auto slot = [&](Vertex v) { return v < ground ? v : v - 1; };
  auto padded = [&](Vertex a, Vertex b) -> Rational {
    if (a == ground || b == ground) return Rational(0);
    return inverse(slot(a), slot(b));
  };
  std::vector<Rational> values(n * n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      Rational r = padded(u, u) + padded(v, v) - Rational(2) * padded(u, v);
      values[v * n + u] = r;
      values[u * n + v] = std::move(r);
    }
  }
  return ResistanceMatrix(n, std::move(values));
}

double kirchhoff_spectral_estimate(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 2) throw InvalidGraph("spectral estimate needs at least two vertices");
  if (!is_connected(g)) throw DisconnectedGraph();
  Eigen::MatrixXd l = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (Vertex v = 0; v < n; ++v) {
    const auto i = static_cast<Eigen::Index>(v);
    l(i, i) = static_cast<double>(g.degree(v));
    for (Vertex w : g.neighbors(v)) l(i, static_cast<Eigen::Index>(w)) = -1.0;
  }
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(l, Eigen::EigenvaluesOnly);
  // Eigenvalues come back ascending; the first is the zero eigenvalue.
  const auto& mu = solver.eigenvalues();
  double sum = 0.0;
  for (Eigen::Index i = 1; i < mu.size(); ++i) sum += 1.0 / mu(i);
  return static_cast<double>(n) * sum;
}

}  // namespace cactus
