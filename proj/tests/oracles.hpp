#pragma once

// Brute-force reference computations used only by the tests. None of them
// touch the elimination or grounded-solve code they are checking.

#include <functional>
#include <numeric>
#include <random>
#include <vector>

#include "cactus/graph.hpp"
#include "cactus/rational.hpp"
#include "cactus/rational_matrix.hpp"

namespace cactus::oracle {

// Laplace expansion along the first row.
inline Rational cofactor_determinant(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational total;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    RationalMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != c) minor(r - 1, cc++) = m(r, k);
      }
    }
    const Rational term = m(0, c) * cofactor_determinant(minor);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) { return parent_[x] == x ? x : parent_[x] = find(parent_[x]); }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

// Calls visit(subset) for every k-subset of edge indices.
inline void for_each_subset(std::size_t m, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& visit) {
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() == k) {
      visit(pick);
      return;
    }
    for (std::size_t i = start; i + (k - pick.size()) <= m; ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
}

// Spanning trees counted by trying every (n-1)-edge subset.
inline std::size_t spanning_trees(const Graph& g) {
  const auto edges = g.edges();
  const std::size_t n = g.order();
  if (n <= 1) return 1;
  std::size_t count = 0;
  for_each_subset(edges.size(), n - 1, [&](const std::vector<std::size_t>& pick) {
    UnionFind uf(n);
    for (std::size_t i : pick) {
      if (!uf.unite(edges[i].first, edges[i].second)) return;
    }
    ++count;
  });
  return count;
}

// Resistance as (spanning 2-forests separating u and v) / (spanning trees).
inline Rational forest_resistance(const Graph& g, Vertex u, Vertex v) {
  if (u == v) return Rational(0);
  const auto edges = g.edges();
  const std::size_t n = g.order();
  std::size_t forests = 0;
  for_each_subset(edges.size(), n - 2, [&](const std::vector<std::size_t>& pick) {
    UnionFind uf(n);
    for (std::size_t i : pick) {
      if (!uf.unite(edges[i].first, edges[i].second)) return;
    }
    if (uf.find(u) != uf.find(v)) ++forests;
  });
  return Rational(static_cast<std::int64_t>(forests), static_cast<std::int64_t>(spanning_trees(g)));
}

// D_R straight from the pair-sum definition over forest-count resistances.
inline Rational pair_sum_degree_resistance(const Graph& g) {
  Rational total;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) {
      total += Rational(static_cast<std::int64_t>(g.degree(u) + g.degree(v))) * forest_resistance(g, u, v);
    }
  }
  return total;
}

inline Rational pair_sum_kirchhoff(const Graph& g) {
  Rational total;
  for (Vertex u = 0; u < g.order(); ++u) {
    for (Vertex v = u + 1; v < g.order(); ++v) total += forest_resistance(g, u, v);
  }
  return total;
}

inline Graph cycle(std::size_t k) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return Graph(k, edges);
}

inline Graph path(std::size_t k) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
  return Graph(k, edges);
}

inline Graph star(std::size_t k) {
  std::vector<Edge> edges;
  for (Vertex i = 1; i < k; ++i) edges.emplace_back(0, i);
  return Graph(k, edges);
}

inline Graph bowtie() { return Graph(5, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {3, 4}, {0, 4}}); }

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      if (coin(rng)) edges.emplace_back(i, j);
    }
  }
  return Graph(n, edges);
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> p(n);
  std::iota(p.begin(), p.end(), Vertex{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace cactus::oracle
