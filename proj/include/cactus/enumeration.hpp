#pragma once

#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "cactus/canonical.hpp"
#include "cactus/graph.hpp"

namespace cactus {

inline constexpr std::size_t kMaxEnumerationOrder = 11;
inline constexpr std::size_t kMaxOracleOrder = 7;

struct CactusParams {
  std::size_t n = 1;
  std::size_t t = 0;
};

/// Throws InfeasibleParameters unless n >= 1 and t <= (n - 1) / 2.
void validate_params(const CactusParams& params);

struct CorpusMember {
  Graph graph;  // canonically labeled
  CanonicalForm form;
};

/// Cact(n, t) up to isomorphism, sorted by certificate.
struct CactusCorpus {
  CactusParams params;
  std::vector<CorpusMember> members;
};

/// Every connected cactus with n vertices and t cycles, one per isomorphism
/// class. Graphs are grown from a single vertex by attaching either a pendant
/// edge or a whole cycle at an existing vertex, deduplicating by canonical
/// form after each step. Requires 1 <= n <= 11.
CactusCorpus enumerate_cacti(std::size_t n, std::size_t t);

/// Union of Cact(n, t) over every feasible t.
std::vector<CorpusMember> enumerate_all_cacti(std::size_t n);

struct OracleResult {
  std::size_t count = 0;
  std::set<CanonicalForm> certificates;
};

/// Independent check of enumerate_cacti: tries every (n - 1 + t)-edge subset
/// of K_n and keeps the connected cacti with t cycles. Requires n <= 7.
OracleResult brute_force_cacti_oracle(std::size_t n, std::size_t t);

/// Random member of Cact(n, t) (labels shuffled), grown block by block.
Graph random_cactus(std::size_t n, std::size_t t, std::mt19937_64& rng);

}  // namespace cactus
