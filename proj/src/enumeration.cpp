#include "cactus/enumeration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "cactus/blocks.hpp"
#include "cactus/errors.hpp"

namespace cactus {

namespace {

struct Grown {
  Graph graph;
  std::size_t cycles = 0;
};

Graph attach_cycle(const Graph& g, Vertex at, std::size_t length) {
  auto edges = g.edges();
  Vertex previous = at;
  for (std::size_t i = 1; i < length; ++i) {
    const Vertex v = g.order() + i - 1;
    edges.emplace_back(previous, v);
    previous = v;
  }
  edges.emplace_back(previous, at);
  return Graph(g.order() + length - 1, edges);
}

Graph attach_pendant(const Graph& g, Vertex at) {
  auto edges = g.edges();
  edges.emplace_back(at, g.order());
  return Graph(g.order() + 1, edges);
}

}  // namespace

void validate_params(const CactusParams& params) {
  if (params.n < 1 || params.t > (params.n - 1) / 2) {
    throw InfeasibleParameters("Cact(n, t) is empty for n = " + std::to_string(params.n) +
                               ", t = " + std::to_string(params.t));
  }
}

CactusCorpus enumerate_cacti(std::size_t n, std::size_t t) {
  validate_params({n, t});
  if (n > kMaxEnumerationOrder) {
    throw UnsupportedSize("enumeration is limited to n <= " + std::to_string(kMaxEnumerationOrder));
  }
  // levels[m] holds every reachable cactus on m vertices, keyed by certificate.
  std::vector<std::map<CanonicalForm, Grown>> levels(n + 1);
  levels[1].emplace(canonical_form(Graph(1)), Grown{Graph(1), 0});

  auto keep = [&](Graph child, std::size_t cycles) {
    // Remaining vertices must be able to host the missing cycles.
    const std::size_t m = child.order();
    if (cycles > t || n - m < 2 * (t - cycles)) return;
    CanonicalForm form = canonical_form(child);
    auto& level = levels[m];
    if (level.count(form) == 0) {
      Graph canonical = child.relabeled(canonical_labeling(child));
      level.emplace(std::move(form), Grown{std::move(canonical), cycles});
    }
  };

  for (std::size_t m = 1; m < n; ++m) {
    for (const auto& [form, parent] : levels[m]) {
      for (Vertex v = 0; v < m; ++v) {
        keep(attach_pendant(parent.graph, v), parent.cycles);
        for (std::size_t length = 3; m + length - 1 <= n; ++length) {
          keep(attach_cycle(parent.graph, v, length), parent.cycles + 1);
        }
      }
    }
    levels[m].clear();
  }

  CactusCorpus corpus{{n, t}, {}};
  for (auto& [form, grown] : levels[n]) {
    if (grown.cycles == t) corpus.members.push_back({std::move(grown.graph), form});
  }
  return corpus;
}

std::vector<CorpusMember> enumerate_all_cacti(std::size_t n) {
  std::vector<CorpusMember> all;
  for (std::size_t t = 0; 2 * t + 1 <= n; ++t) {
    auto corpus = enumerate_cacti(n, t);
    std::move(corpus.members.begin(), corpus.members.end(), std::back_inserter(all));
  }
  return all;
}

OracleResult brute_force_cacti_oracle(std::size_t n, std::size_t t) {
  validate_params({n, t});
  if (n > kMaxOracleOrder) {
    throw UnsupportedSize("the subset oracle is limited to n <= " + std::to_string(kMaxOracleOrder));
  }
  std::vector<Edge> pairs;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  const std::size_t k = n - 1 + t;
  OracleResult result;
  if (k > pairs.size()) return result;

  // Walk all k-subsets of the pair list via a selection mask.
  std::vector<bool> mask(pairs.size(), false);
  std::fill(mask.end() - static_cast<std::ptrdiff_t>(k), mask.end(), true);
  std::vector<Edge> chosen;
  do {
    chosen.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask[i]) chosen.push_back(pairs[i]);
    }
    const Graph g(n, chosen);
    if (!is_connected(g)) continue;
    try {
      if (cactus_check(g) != t) continue;
    } catch (const NotCactus&) {
      continue;
    }
    result.certificates.insert(canonical_form(g));
  } while (std::next_permutation(mask.begin(), mask.end()));
  result.count = result.certificates.size();
  return result;
}

Graph random_cactus(std::size_t n, std::size_t t, std::mt19937_64& rng) {
  validate_params({n, t});
  Graph g(1);
  std::size_t cycles = 0;
  while (g.order() < n) {
    const std::size_t room = n - g.order();
    const std::size_t missing = t - cycles;
    std::uniform_int_distribution<Vertex> pick_vertex(0, g.order() - 1);
    const Vertex at = pick_vertex(rng);
    // Pendant only if the leftover room still fits the missing cycles.
    const bool pendant_ok = room - 1 >= 2 * missing;
    bool add_cycle = missing > 0 && (!pendant_ok || std::bernoulli_distribution(0.5)(rng));
    if (add_cycle) {
      // A cycle of length L uses L - 1 new vertices; keep 2 per later cycle.
      const std::size_t max_len = room - 2 * (missing - 1) + 1;
      std::uniform_int_distribution<std::size_t> pick_len(3, max_len);
      g = attach_cycle(g, at, pick_len(rng));
      ++cycles;
    } else {
      g = attach_pendant(g, at);
    }
  }
  std::vector<Vertex> image(n);
  std::iota(image.begin(), image.end(), Vertex{0});
  std::shuffle(image.begin(), image.end(), rng);
  return g.relabeled(image);
}

}  // namespace cactus
