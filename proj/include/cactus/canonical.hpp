#pragma once

#include <compare>
#include <string>
#include <vector>

#include "cactus/graph.hpp"

namespace cactus {

inline constexpr std::size_t kMaxCanonicalOrder = 16;

/// Isomorphism-class certificate: the graph6 string of the graph under its
/// canonical labeling. Equal certificates iff isomorphic graphs.
struct CanonicalForm {
  std::string certificate;

  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Canonical labeling: image[v] is the position of v in the canonical order.
///
/// Vertices are first partitioned by degree and sorted distance profile, the
/// partition is refined to an equitable one, and the remaining ambiguity is
/// resolved by individualizing each vertex of the first non-singleton cell in
/// turn. Among all discrete leaves the labeling with the lexicographically
/// smallest upper-triangle adjacency string wins. Twin vertices (same
/// neighborhood apart from each other) are interchangeable, so only one per
/// twin class is individualized.
std::vector<Vertex> canonical_labeling(const Graph& g);

/// Throws UnsupportedSize above 16 vertices.
CanonicalForm canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace cactus
