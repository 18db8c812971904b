#pragma once

#include <string>
#include <string_view>

#include "cactus/graph.hpp"

namespace cactus {

inline constexpr std::size_t kMaxGraph6Order = 62;

/// Decodes a graph6 string with the single-byte size header (n <= 62).
/// Throws ParseError whose kind() distinguishes header, length and
/// character problems.
Graph parse_graph6(std::string_view text);

/// graph6 encoding of g under its current labeling. Throws UnsupportedSize
/// when g has more than 62 vertices.
std::string emit_graph6(const Graph& g);

/// Parses "u v" lines with 0-based endpoints. An optional first line
/// "n <count>" fixes the vertex count; otherwise it is max index + 1.
/// Blank lines and lines starting with '#' are ignored.
Graph parse_edge_list(std::string_view text);

/// One "u v" line per edge, preceded by "n <count>".
std::string emit_edge_list(const Graph& g);

}  // namespace cactus
