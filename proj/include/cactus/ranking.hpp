#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cactus/canonical.hpp"
#include "cactus/families.hpp"
#include "cactus/rational.hpp"

namespace cactus {

struct RankedEntry {
  std::size_t rank = 0;  // 1-based
  std::string graph6;
  CanonicalForm certificate;
  Rational dr;
  std::optional<FamilyId> family_match;
  bool tied = false;  // another member of the corpus has exactly the same D_R
};

/// Every member of Cact(n, t) ordered by (D_R, certificate).
std::vector<RankedEntry> rank_corpus(std::size_t n, std::size_t t);

/// The k smallest entries of rank_corpus, each matched against the family
/// constructors feasible at (n, t) by isomorphism.
std::vector<RankedEntry> rank_extremal(std::size_t n, std::size_t t, std::size_t k);

/// First family (in declaration order) whose constructor at (n, t) is
/// isomorphic to g, if any.
std::optional<FamilyId> match_family(const Graph& g, std::size_t n, std::size_t t);

}  // namespace cactus
