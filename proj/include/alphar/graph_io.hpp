#pragma once

#include <string>
#include <string_view>

#include "alphar/graph.hpp"

namespace alphar {

/// graph6: order in 1 or 4 bytes (offset 63, '~' prefix for n >= 63), then the
/// upper triangle column by column, x(0,1) x(0,2) x(1,2) x(0,3) ..., six bits per
/// byte, offset 63, zero padded. An optional ">>graph6<<" header is accepted.
/// Throws ParseError with a kind identifying the defect.
Graph graph6_decode(std::string_view text);
std::string graph6_encode(const Graph& g);

/// "u v" per line, 0-indexed. '#' starts a comment; a "# vertices N" comment fixes
/// the order, otherwise n = 1 + largest endpoint.
Graph edge_list_decode(std::string_view text);
std::string edge_list_encode(const Graph& g);

/// graph6 unless the first non-blank byte is a digit or '#'.
Graph parse_graph(std::string_view text);
Graph read_graph_file(const std::string& path);

}  // namespace alphar
