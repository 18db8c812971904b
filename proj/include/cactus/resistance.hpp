#pragma once

#include <vector>

#include "cactus/graph.hpp"
#include "cactus/rational.hpp"
#include "cactus/rational_matrix.hpp"

namespace cactus {

/// Symmetric matrix of exact effective resistances between all vertex pairs.
class ResistanceMatrix {
 public:
  ResistanceMatrix() = default;
  ResistanceMatrix(std::size_t n, std::vector<Rational> values);

  std::size_t order() const { return n_; }
  const Rational& operator()(Vertex u, Vertex v) const { return values_[u * n_ + v]; }

  /// Row-major values.
  const std::vector<Rational>& values() const { return values_; }

  friend bool operator==(const ResistanceMatrix&, const ResistanceMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<Rational> values_;
};

/// Degree matrix minus adjacency matrix.
RationalMatrix laplacian(const Graph& g);

/// Number of spanning trees (matrix-tree theorem, row/column 0 removed).
/// Throws DisconnectedGraph when the count is zero.
Rational spanning_tree_count(const Graph& g);

/// R(u,v) as the ratio det(L minus {u,v}) / det(L minus {v}).
Rational effective_resistance(const Graph& g, Vertex u, Vertex v);

/// All-pairs resistances from one exact inversion of the Laplacian grounded
/// at vertex `ground`: R(u,v) = M[u][u] + M[v][v] - 2 M[u][v], where M is the
/// inverse padded with zeros at the ground.
ResistanceMatrix resistance_matrix(const Graph& g, Vertex ground = 0);

/// Floating-point n * sum(1 / mu_i) over the nonzero Laplacian eigenvalues.
/// Approximate; only used to cross-check the exact Kirchhoff index.
double kirchhoff_spectral_estimate(const Graph& g);

}  // namespace cactus
