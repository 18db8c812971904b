#include "cactus/json.hpp"

namespace cactus {

using nlohmann::json;

json to_json(const InvariantReport& report) {
  json per_vertex = json::array();
  for (const auto& pv : report.per_vertex) {
    per_vertex.push_back({{"vertex", pv.vertex}, {"kf_v", pv.kf_v.to_string()}, {"d_v", pv.d_v.to_string()}});
  }
  return json{{"wiener", report.wiener.to_string()},
              {"degree_distance", report.degree_distance.to_string()},
              {"kirchhoff", report.kirchhoff.to_string()},
              {"degree_resistance", report.degree_resistance.to_string()},
              {"per_vertex", std::move(per_vertex)}};
}

json to_json(const ResistanceMatrix& matrix) {
  json rows = json::array();
  for (Vertex u = 0; u < matrix.order(); ++u) {
    json row = json::array();
    for (Vertex v = 0; v < matrix.order(); ++v) row.push_back(matrix(u, v).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const RankedEntry& entry) {
  json out{{"rank", entry.rank},
           {"graph6", entry.graph6},
           {"certificate", entry.certificate.certificate},
           {"dr", entry.dr.to_string()},
           {"tied", entry.tied}};
  if (entry.family_match) {
    out["family_match"] = std::string(family_name(*entry.family_match));
    out["inferred"] = is_inferred(*entry.family_match);
  } else {
    out["family_match"] = nullptr;
  }
  return out;
}

json to_json(const VerificationOutcome& outcome) {
  auto checks = [](const std::vector<Check>& list) {
    json arr = json::array();
    for (const auto& c : list) {
      arr.push_back({{"description", c.description}, {"expected", c.expected}, {"actual", c.actual}, {"pass", c.pass}});
    }
    return arr;
  };
  return json{{"suite", outcome.suite},
              {"overall", outcome.overall() ? "pass" : "fail"},
              {"checks", checks(outcome.checks)},
              {"diagnostics", checks(outcome.diagnostics)}};
}

std::string ranking_csv(const std::vector<RankedEntry>& entries) {
  // graph6 uses no commas or quotes, so fields need no escaping.
  std::string out = "rank,graph6,certificate,dr,family,inferred,tied\n";
  for (const auto& e : entries) {
    const std::string family = e.family_match ? std::string(family_name(*e.family_match)) : "";
    const bool inferred = e.family_match && is_inferred(*e.family_match);
    out += std::to_string(e.rank) + "," + e.graph6 + "," + e.certificate.certificate + "," + e.dr.to_string() + "," +
           family + "," + (inferred ? "true" : "false") + "," + (e.tied ? "true" : "false") + "\n";
  }
  return out;
}

}  // namespace cactus
