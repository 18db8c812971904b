#include "cactus/ranking.hpp"

#include <algorithm>

#include "cactus/enumeration.hpp"
#include "cactus/graph_io.hpp"
#include "cactus/invariants.hpp"

namespace cactus {

std::vector<RankedEntry> rank_corpus(std::size_t n, std::size_t t) {
  const CactusCorpus corpus = enumerate_cacti(n, t);
  std::vector<RankedEntry> entries;
  entries.reserve(corpus.members.size());
  for (const auto& member : corpus.members) {
    entries.push_back(RankedEntry{0, emit_graph6(member.graph), member.form,
                                  degree_resistance_distance(member.graph), std::nullopt, false});
  }
  std::sort(entries.begin(), entries.end(), [](const RankedEntry& a, const RankedEntry& b) {
    if (a.dr != b.dr) return a.dr < b.dr;
    return a.certificate < b.certificate;
  });
  for (std::size_t i = 0; i < entries.size(); ++i) {
    entries[i].rank = i + 1;
    const bool same_as_prev = i > 0 && entries[i - 1].dr == entries[i].dr;
    const bool same_as_next = i + 1 < entries.size() && entries[i + 1].dr == entries[i].dr;
    entries[i].tied = same_as_prev || same_as_next;
  }
  return entries;
}

std::optional<FamilyId> match_family(const Graph& g, std::size_t n, std::size_t t) {
  for (FamilyId id : {FamilyId::G0, FamilyId::G3, FamilyId::G4, FamilyId::G5, FamilyId::G8, FamilyId::G10}) {
    if (!family_feasible(id, n, t)) continue;
    if (are_isomorphic(g, build_family(id, n, t))) return id;
  }
  return std::nullopt;
}

std::vector<RankedEntry> rank_extremal(std::size_t n, std::size_t t, std::size_t k) {
  auto entries = rank_corpus(n, t);
  if (entries.size() > k) entries.resize(k);
  for (auto& entry : entries) entry.family_match = match_family(parse_graph6(entry.graph6), n, t);
  return entries;
}

}  // namespace cactus
