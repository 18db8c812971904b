#pragma once

#include <json.hpp>

#include "cactus/invariants.hpp"
#include "cactus/ranking.hpp"
#include "cactus/resistance.hpp"
#include "cactus/suites.hpp"

namespace cactus {

// Every exact value is written as its "p/q" string.
nlohmann::json to_json(const InvariantReport& report);
nlohmann::json to_json(const ResistanceMatrix& matrix);
nlohmann::json to_json(const RankedEntry& entry);
nlohmann::json to_json(const VerificationOutcome& outcome);

/// Header plus one line per entry: rank,graph6,certificate,dr,family,inferred,tied.
std::string ranking_csv(const std::vector<RankedEntry>& entries);

}  // namespace cactus
