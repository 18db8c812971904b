#include "cactus/canonical.hpp"

#include <algorithm>

#include "cactus/errors.hpp"
#include "cactus/graph_io.hpp"

namespace cactus {

namespace {

using Coloring = std::vector<std::size_t>;

std::size_t cell_count(const Coloring& col) {
  return col.empty() ? 0 : *std::max_element(col.begin(), col.end()) + 1;
}

// Replaces arbitrary keys by their rank among the distinct keys.
template <typename Key>
Coloring rank_keys(const std::vector<Key>& keys) {
  std::vector<Key> distinct = keys;
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  Coloring col(keys.size());
  for (std::size_t v = 0; v < keys.size(); ++v) {
    col[v] = static_cast<std::size_t>(std::lower_bound(distinct.begin(), distinct.end(), keys[v]) -
                                      distinct.begin());
  }
  return col;
}

class CanonicalSearch {
 public:
  explicit CanonicalSearch(const Graph& g) : g_(g), n_(g.order()), twin_(n_, std::vector<bool>(n_)) {
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex w = u + 1; w < n_; ++w) twin_[u][w] = twin_[w][u] = twins(u, w);
    }
  }

  std::vector<Vertex> run() {
    if (n_ == 0) return {};
    search(refine(initial_coloring()));
    return best_labeling_;
  }

 private:
  bool twins(Vertex u, Vertex w) const {
    std::vector<Vertex> a;
    std::vector<Vertex> b;
    for (Vertex x : g_.neighbors(u)) {
      if (x != w) a.push_back(x);
    }
    for (Vertex x : g_.neighbors(w)) {
      if (x != u) b.push_back(x);
    }
    return a == b;
  }

  Coloring initial_coloring() const {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> keys;
    keys.reserve(n_);
    for (Vertex v = 0; v < n_; ++v) {
      auto profile = bfs_distances(g_, v);
      std::sort(profile.begin(), profile.end());
      keys.emplace_back(g_.degree(v), std::move(profile));
    }
    return rank_keys(keys);
  }

  Coloring refine(Coloring col) const {
    std::size_t cells = cell_count(col);
    while (true) {
      std::vector<std::pair<std::size_t, std::vector<std::size_t>>> keys(n_);
      for (Vertex v = 0; v < n_; ++v) {
        std::vector<std::size_t> counts(cells, 0);
        for (Vertex w : g_.neighbors(v)) ++counts[col[w]];
        keys[v] = {col[v], std::move(counts)};
      }
      Coloring next = rank_keys(keys);
      const std::size_t next_cells = cell_count(next);
      col = std::move(next);
      if (next_cells == cells) return col;
      cells = next_cells;
    }
  }

  static Coloring individualize(const Coloring& col, Vertex v) {
    Coloring out(col.size());
    const std::size_t c = col[v];
    for (Vertex w = 0; w < col.size(); ++w) {
      if (w == v) {
        out[w] = c;
      } else if (col[w] >= c) {
        out[w] = col[w] + 1;
      } else {
        out[w] = col[w];
      }
    }
    return out;
  }

  std::string adjacency_string(const Coloring& col) const {
    std::vector<Vertex> at(n_);
    for (Vertex v = 0; v < n_; ++v) at[col[v]] = v;
    std::string bits;
    bits.reserve(n_ * (n_ - 1) / 2);
    for (std::size_t j = 1; j < n_; ++j) {
      for (std::size_t i = 0; i < j; ++i) bits.push_back(g_.has_edge(at[i], at[j]) ? '1' : '0');
    }
    return bits;
  }

  void search(const Coloring& col) {
    if (cell_count(col) == n_) {
      std::string bits = adjacency_string(col);
      if (best_labeling_.empty() || bits < best_bits_) {
        best_bits_ = std::move(bits);
        best_labeling_.assign(col.begin(), col.end());
      }
      return;
    }
    std::vector<std::size_t> sizes(n_, 0);
    for (std::size_t c : col) ++sizes[c];
    std::size_t target = 0;
    while (sizes[target] < 2) ++target;

    std::vector<Vertex> tried;
    for (Vertex v = 0; v < n_; ++v) {
      if (col[v] != target) continue;
      const bool redundant = std::any_of(tried.begin(), tried.end(), [&](Vertex u) { return twin_[u][v]; });
      if (redundant) continue;
      tried.push_back(v);
      search(refine(individualize(col, v)));
    }
  }

  const Graph& g_;
  std::size_t n_;
  std::vector<std::vector<bool>> twin_;
  std::string best_bits_;
  std::vector<Vertex> best_labeling_;
};

}  // namespace

std::vector<Vertex> canonical_labeling(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw UnsupportedSize("canonical form is limited to " + std::to_string(kMaxCanonicalOrder) + " vertices");
  }
  return CanonicalSearch(g).run();
}

CanonicalForm canonical_form(const Graph& g) {
  const auto image = canonical_labeling(g);
  return CanonicalForm{emit_graph6(g.relabeled(image))};
}

bool are_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() > kMaxCanonicalOrder || b.order() > kMaxCanonicalOrder) {
    throw UnsupportedSize("isomorphism test is limited to " + std::to_string(kMaxCanonicalOrder) + " vertices");
  }
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return canonical_form(a) == canonical_form(b);
}

}  // namespace cactus
