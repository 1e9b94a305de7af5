#include "alphar/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "alphar/errors.hpp"

namespace alphar {
namespace {

using Kind = ParseError::Kind;

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

int sextet(char c) {
  const int v = static_cast<unsigned char>(c) - 63;
  if (v < 0 || v > 63) throw ParseError(Kind::kBadCharacter, "graph6: byte outside 63..126");
  return v;
}

}  // namespace

Graph graph6_decode(std::string_view text) {
  text = trim(text);
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw ParseError(Kind::kEmpty, "graph6: empty input");

  std::size_t pos = 0;
  long long n = 0;
  if (text[0] == '~') {
    if (text.size() >= 2 && text[1] == '~') throw ParseError(Kind::kTooLarge, "graph6: order exceeds 512");
    if (text.size() < 4) throw ParseError(Kind::kBadHeader, "graph6: truncated order field");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text[i]);
    if (n < 63) throw ParseError(Kind::kBadHeader, "graph6: non-canonical long order field");
    pos = 4;
  } else {
    n = sextet(text[0]);
    pos = 1;
  }
  if (n > kMaxVertices) throw ParseError(Kind::kTooLarge, "graph6: order exceeds 512");

  const std::size_t bits = static_cast<std::size_t>(n * (n - 1) / 2);
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos != bytes) {
    throw ParseError(Kind::kBadLength, "graph6: expected " + std::to_string(bytes) + " data bytes, got " +
                                           std::to_string(text.size() - pos));
  }

  Graph g(static_cast<int>(n));
  std::size_t k = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++k) {
      const int byte = sextet(text[pos + k / 6]);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(u, v);
    }
  }
  for (; k < bytes * 6; ++k) {
    if ((sextet(text[pos + k / 6]) >> (5 - k % 6)) & 1)
      throw ParseError(Kind::kTrailingBits, "graph6: nonzero padding bits");
  }
  return g;
}

std::string graph6_encode(const Graph& g) {
  std::string out;
  const int n = g.n();
  if (n < 63) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0;
  int filled = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      acc = (acc << 1) | (g.has_edge(u, v) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

Graph edge_list_decode(std::string_view text) {
  std::vector<Edge> edges;
  int n = 0;
  int declared = -1;
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (view.empty()) continue;
    if (view.front() == '#') {
      std::istringstream comment{std::string(view.substr(1))};
      std::string word;
      int value = 0;
      if (comment >> word >> value && word == "vertices") declared = value;
      continue;
    }
    view = trim(view.substr(0, view.find('#')));
    std::istringstream fields{std::string(view)};
    long long u = -1;
    long long v = -1;
    std::string extra;
    if (!(fields >> u >> v) || (fields >> extra) || u < 0 || v < 0 || u == v) {
      throw ParseError(Kind::kBadEdgeList, "edge list: malformed line " + std::to_string(line_no));
    }
    if (u >= kMaxVertices || v >= kMaxVertices) throw ParseError(Kind::kTooLarge, "edge list: vertex >= 512");
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    n = std::max(n, static_cast<int>(std::max(u, v)) + 1);
  }
  if (declared >= 0) {
    if (declared > kMaxVertices) throw ParseError(Kind::kTooLarge, "edge list: order exceeds 512");
    if (declared < n) throw ParseError(Kind::kBadEdgeList, "edge list: endpoint beyond declared order");
    n = declared;
  }
  return Graph::from_edges(n, edges);
}

std::string edge_list_encode(const Graph& g) {
  std::ostringstream out;
  out << "# vertices " << g.n() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

Graph parse_graph(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) throw ParseError(Kind::kEmpty, "empty graph input");
  const char c = body.front();
  if (std::isdigit(static_cast<unsigned char>(c)) || c == '#') return edge_list_decode(body);
  return graph6_decode(body);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RangeError("cannot open graph file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph(buf.str());
}

}  // namespace alphar
