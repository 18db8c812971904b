// Command-line front end: invariant reports, exact resistances, family
// construction, enumeration, extremal ranking and verification suites.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "cactus/enumeration.hpp"
#include "cactus/errors.hpp"
#include "cactus/families.hpp"
#include "cactus/graph_io.hpp"
#include "cactus/invariants.hpp"
#include "cactus/json.hpp"
#include "cactus/ranking.hpp"
#include "cactus/resistance.hpp"
#include "cactus/suites.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

using cactus::Graph;

std::string read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  }
  std::ifstream in(path);
  if (!in) throw cactus::ParseError(cactus::ParseErrorKind::BadSyntax, "cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

struct InputLine {
  std::size_t line_no;
  std::string text;
};

std::vector<InputLine> content_lines(const std::string& text) {
  std::vector<InputLine> out;
  std::istringstream in(text);
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    out.push_back({no, line});
  }
  return out;
}

// graph6 corpora have one token per line; anything else is an edge list.
bool looks_like_graph6(const std::vector<InputLine>& lines) {
  if (lines.empty()) return false;
  for (const auto& l : lines) {
    if (l.text.find_first_of(" \t") != std::string::npos) return false;
  }
  return true;
}

struct LoadedGraph {
  std::size_t line_no;
  Graph graph;
};

// Returns parsed graphs; parse failures are printed and flagged via `failed`.
std::vector<LoadedGraph> load_graphs(const std::string& path, const std::string& format, bool& failed) {
  const std::string text = read_input(path);
  const auto lines = content_lines(text);
  const bool g6 = format == "graph6" || (format == "auto" && looks_like_graph6(lines));
  std::vector<LoadedGraph> graphs;
  if (!g6) {
    try {
      graphs.push_back({1, cactus::parse_edge_list(text)});
    } catch (const cactus::Error& e) {
      std::cerr << path << ": " << e.what() << "\n";
      failed = true;
    }
    return graphs;
  }
  for (const auto& l : lines) {
    try {
      graphs.push_back({l.line_no, cactus::parse_graph6(l.text)});
    } catch (const cactus::Error& e) {
      std::cerr << "line " << l.line_no << ": " << e.what() << "\n";
      failed = true;
    }
  }
  return graphs;
}

int cmd_invariants(const std::string& path, const std::string& format) {
  bool parse_failed = false;
  bool graph_failed = false;
  for (const auto& [line_no, g] : load_graphs(path, format, parse_failed)) {
    try {
      std::cout << cactus::to_json(cactus::invariant_report(g)).dump() << "\n";
    } catch (const cactus::Error& e) {
      std::cerr << "line " << line_no << ": " << e.what() << "\n";
      graph_failed = true;
    }
  }
  if (parse_failed) return kExitUsage;
  return graph_failed ? kExitFailure : kExitOk;
}

int cmd_resistance(const std::string& path, const std::string& format, const std::vector<std::size_t>& pair,
                   bool all) {
  bool parse_failed = false;
  const auto graphs = load_graphs(path, format, parse_failed);
  if (parse_failed) return kExitUsage;
  if (graphs.size() != 1) {
    std::cerr << "resistance expects exactly one graph, found " << graphs.size() << "\n";
    return kExitUsage;
  }
  const Graph& g = graphs.front().graph;
  if (!pair.empty()) {
    const auto r = cactus::effective_resistance(g, pair[0], pair[1]);
    std::cout << nlohmann::json{{"u", pair[0]}, {"v", pair[1]}, {"resistance", r.to_string()}}.dump() << "\n";
  }
  if (all) {
    std::cout << nlohmann::json{{"n", g.order()}, {"matrix", cactus::to_json(cactus::resistance_matrix(g))}}.dump()
              << "\n";
  }
  return kExitOk;
}

int cmd_construct(const std::string& family, std::size_t n, std::size_t t, std::size_t h) {
  const auto id = cactus::parse_family(family);
  if (!id) {
    std::cerr << "unknown family '" << family << "'\n";
    return kExitUsage;
  }
  const Graph g = cactus::build_family(*id, n, t, h);
  if (cactus::is_inferred(*id)) {
    std::cerr << "note: the " << family << " shape is inferred from its difference formula\n";
  }
  std::cout << cactus::emit_graph6(g) << "\n";
  return kExitOk;
}

int cmd_enumerate(std::size_t n, std::size_t t, const std::string& out_path, const std::string& manifest_path) {
  const auto corpus = cactus::enumerate_cacti(n, t);
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "cannot write " << out_path << "\n";
      return kExitUsage;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file;
  for (const auto& m : corpus.members) out << cactus::emit_graph6(m.graph) << "\n";
  if (!manifest_path.empty()) {
    std::ofstream manifest(manifest_path);
    manifest << nlohmann::json{{"n", n}, {"t", t}, {"count", corpus.members.size()}}.dump(2) << "\n";
  }
  return kExitOk;
}

int cmd_rank(std::size_t n, std::size_t t, std::size_t top, bool csv) {
  const auto entries = cactus::rank_extremal(n, t, top);
  if (csv) {
    std::cout << cactus::ranking_csv(entries);
    return kExitOk;
  }
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : entries) arr.push_back(cactus::to_json(e));
  std::cout << arr.dump(2) << "\n";
  return kExitOk;
}

void print_outcome(const cactus::VerificationOutcome& outcome, bool verbose) {
  std::cout << (outcome.overall() ? "PASS " : "FAIL ") << outcome.suite << " (" << outcome.checks.size()
            << " checks)\n";
  for (const auto& c : outcome.checks) {
    if (!verbose && c.pass) continue;
    std::cout << "  [" << (c.pass ? "ok" : "FAIL") << "] " << c.description << ": expected " << c.expected
              << ", got " << c.actual << "\n";
  }
  for (const auto& d : outcome.diagnostics) {
    std::cout << "  [note] " << d.description << ": expected " << d.expected << ", observed " << d.actual << "\n";
  }
}

int cmd_verify(const std::string& suite, bool json, bool verbose) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = cactus::suite_names();
  } else {
    names.push_back(suite);
  }
  bool all_pass = true;
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& name : names) {
    const auto outcome = cactus::run_suite(name);
    all_pass = all_pass && outcome.overall();
    if (json) {
      arr.push_back(cactus::to_json(outcome));
    } else {
      print_outcome(outcome, verbose);
    }
  }
  if (json) std::cout << arr.dump(2) << "\n";
  return all_pass ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact resistance-distance invariants and extremal search for cactus graphs"};
  app.require_subcommand(1);

  std::string path;
  std::string format = "auto";

  auto* invariants = app.add_subcommand("invariants", "JSON invariant report per input graph");
  invariants->add_option("input", path, "graph6 corpus or edge-list file, '-' for stdin")->required();
  invariants->add_option("--format", format, "auto | graph6 | edges")
      ->check(CLI::IsMember({"auto", "graph6", "edges"}));

  std::vector<std::size_t> pair;
  bool all_pairs = false;
  auto* resistance = app.add_subcommand("resistance", "exact effective resistances");
  resistance->add_option("input", path, "file holding one graph, '-' for stdin")->required();
  resistance->add_option("--format", format, "auto | graph6 | edges")
      ->check(CLI::IsMember({"auto", "graph6", "edges"}));
  auto* pair_opt = resistance->add_option("--pair", pair, "two vertices u v")->expected(2);
  auto* all_opt = resistance->add_flag("--all", all_pairs, "full resistance matrix");
  pair_opt->excludes(all_opt);

  std::string family;
  std::size_t n = 0;
  std::size_t t = 0;
  std::size_t h = 0;
  auto* construct = app.add_subcommand("construct", "emit a family member as graph6");
  construct->set_help_flag("--help", "print this help message and exit");  // frees -h for --h
  construct->add_option("--family", family, "g0 | g3 | g4 | g5 | g8 | g10 | cycle-pendant")->required();
  construct->add_option("--n", n, "vertex count");
  construct->add_option("--t", t, "cycle count");
  construct->add_option("--h", h, "cycle-pendant size");

  std::string out_path;
  std::string manifest_path;
  auto* enumerate = app.add_subcommand("enumerate", "stream Cact(n,t) as graph6 lines");
  enumerate->add_option("--n", n, "vertex count")->required();
  enumerate->add_option("--t", t, "cycle count")->required();
  enumerate->add_option("--out", out_path, "write graph6 lines to FILE");
  enumerate->add_option("--manifest", manifest_path, "write a JSON manifest to FILE");

  std::size_t top = 3;
  bool csv = false;
  auto* rank = app.add_subcommand("rank", "smallest D_R members of Cact(n,t)");
  rank->add_option("--n", n, "vertex count")->required();
  rank->add_option("--t", t, "cycle count")->required();
  rank->add_option("--top", top, "number of entries");
  rank->add_flag("--csv", csv, "CSV instead of JSON");

  std::string suite;
  bool json_out = false;
  bool verbose = false;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("--suite", suite, "suite name or 'all'")->required();
  verify->add_flag("--json", json_out, "JSON outcome");
  verify->add_flag("--verbose", verbose, "list passing checks too");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*invariants) return cmd_invariants(path, format);
    if (*resistance) {
      if (pair.empty() && !all_pairs) {
        std::cerr << "resistance needs --pair u v or --all\n";
        return kExitUsage;
      }
      return cmd_resistance(path, format, pair, all_pairs);
    }
    if (*construct) return cmd_construct(family, n, t, h);
    if (*enumerate) return cmd_enumerate(n, t, out_path, manifest_path);
    if (*rank) return cmd_rank(n, t, top, csv);
    if (*verify) return cmd_verify(suite, json_out, verbose);
  } catch (const cactus::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cactus::UnknownSuite& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cactus::InfeasibleParameters& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cactus::UnsupportedSize& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cactus::InvalidVertex& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cactus::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
