#include "cactus/graph_io.hpp"

#include <charconv>
#include <set>
#include <vector>

#include "cactus/errors.hpp"

namespace cactus {

namespace {

constexpr int kBias = 63;

std::size_t bit_count(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

}  // namespace

Graph parse_graph6(std::string_view text) {
  // One line terminator is allowed so corpus lines can be passed unstripped.
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);
  if (text.empty()) throw ParseError(ParseErrorKind::MalformedHeader, "graph6: empty string");
  const int header = static_cast<unsigned char>(text[0]);
  if (header == 126) {
    throw ParseError(ParseErrorKind::MalformedHeader, "graph6: extended size headers are not supported");
  }
  if (header < kBias || header > 126) {
    throw ParseError(ParseErrorKind::MalformedHeader, "graph6: invalid size byte");
  }
  const std::size_t n = static_cast<std::size_t>(header - kBias);
  const std::size_t bits = bit_count(n);
  const std::size_t needed = (bits + 5) / 6;
  const std::string_view body = text.substr(1);
  for (std::size_t i = 0; i < body.size(); ++i) {
    const int c = static_cast<unsigned char>(body[i]);
    if (c < kBias || c > 126) {
      throw ParseError(ParseErrorKind::BadCharacter,
                       "graph6: character " + std::to_string(i + 1) + " outside the range 63..126");
    }
  }
  if (body.size() < needed) {
    throw ParseError(ParseErrorKind::TruncatedBits, "graph6: expected " + std::to_string(needed) +
                                                        " data bytes, found " + std::to_string(body.size()));
  }
  if (body.size() > needed) {
    throw ParseError(ParseErrorKind::TrailingData, "graph6: unexpected bytes after the adjacency data");
  }

  std::vector<Edge> edges;
  std::size_t k = 0;
  auto bit = [&](std::size_t index) {
    const int chunk = static_cast<unsigned char>(body[index / 6]) - kBias;
    return (chunk >> (5 - index % 6)) & 1;
  };
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i, ++k) {
      if (bit(k)) edges.emplace_back(i, j);
    }
  }
  for (std::size_t pad = bits; pad < needed * 6; ++pad) {
    if (bit(pad)) throw ParseError(ParseErrorKind::TrailingData, "graph6: nonzero padding bits");
  }
  return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n > kMaxGraph6Order) {
    throw UnsupportedSize("graph6: graphs above 62 vertices need extended headers");
  }
  std::string out(1, static_cast<char>(n + kBias));
  int chunk = 0;
  int filled = 0;
  for (std::size_t j = 1; j < n; ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(chunk + kBias));
        chunk = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
  return out;
}

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

long long to_integer(std::string_view token, std::size_t line_no) {
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(ParseErrorKind::BadSyntax,
                     "line " + std::to_string(line_no) + ": '" + std::string(token) + "' is not an integer");
  }
  return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::set<Edge> seen;
  long long declared = -1;
  std::size_t max_index_plus_one = 0;
  bool any_content = false;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto tok = tokens(line);
    if (tok.empty() || tok[0].front() == '#') continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (tok[0] == "n") {
      if (any_content || tok.size() != 2) {
        throw ParseError(ParseErrorKind::BadSyntax, where + "'n <count>' must be the first line");
      }
      declared = to_integer(tok[1], line_no);
      if (declared < 0) throw ParseError(ParseErrorKind::NegativeIndex, where + "negative vertex count");
      any_content = true;
      continue;
    }
    any_content = true;
    if (tok.size() != 2) throw ParseError(ParseErrorKind::BadSyntax, where + "expected 'u v'");
    const long long a = to_integer(tok[0], line_no);
    const long long b = to_integer(tok[1], line_no);
    if (a < 0 || b < 0) throw ParseError(ParseErrorKind::NegativeIndex, where + "negative vertex index");
    if (a == b) throw ParseError(ParseErrorKind::SelfLoop, where + "self-loop at " + std::to_string(a));
    if (declared >= 0 && (a >= declared || b >= declared)) {
      throw ParseError(ParseErrorKind::IndexOutOfRange, where + "vertex index exceeds declared count");
    }
    Edge e{static_cast<Vertex>(std::min(a, b)), static_cast<Vertex>(std::max(a, b))};
    if (!seen.insert(e).second) {
      throw ParseError(ParseErrorKind::DuplicateEdge, where + "duplicate edge " + std::to_string(e.first) +
                                                          " " + std::to_string(e.second));
    }
    edges.push_back(e);
    max_index_plus_one = std::max(max_index_plus_one, e.second + 1);
  }
  if (!any_content) throw ParseError(ParseErrorKind::BadSyntax, "edge list is empty");
  const std::size_t n = declared >= 0 ? static_cast<std::size_t>(declared) : max_index_plus_one;
  return Graph(n, edges);
}

std::string emit_edge_list(const Graph& g) {
  std::string out = "n " + std::to_string(g.order()) + "\n";
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace cactus
