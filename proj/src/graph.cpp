#include "alphar/graph.hpp"

#include <string>

#include "alphar/errors.hpp"
#include "alphar/rng.hpp"

namespace alphar {

VertexSet VertexSet::range(int n) {
  VertexSet s;
  for (int i = 0; i < kWords && n > 0; ++i, n -= 64) {
    s.words_[static_cast<std::size_t>(i)] = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  }
  return s;
}

int VertexSet::next(int v) const {
  int start = v + 1;
  if (start >= kMaxVertices) return -1;
  int i = start >> 6;
  std::uint64_t w = words_[static_cast<std::size_t>(i)] & (~std::uint64_t{0} << (start & 63));
  while (true) {
    if (w) return i * 64 + std::countr_zero(w);
    if (++i == kWords) return -1;
    w = words_[static_cast<std::size_t>(i)];
  }
}

std::vector<int> VertexSet::members() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int v) { out.push_back(v); });
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) throw RangeError("graph order must lie in [0, 512], got " + std::to_string(n));
  rows_.resize(static_cast<std::size_t>(n));
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    g.rows_[static_cast<std::size_t>(u)] = VertexSet::range(n);
    g.rows_[static_cast<std::size_t>(u)].erase(u);
  }
  return g;
}

Graph Graph::cycle(int n) {
  Graph g(n);
  if (n >= 3)
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph Graph::petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);          // outer cycle
    g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    g.add_edge(i, 5 + i);                // spokes
  }
  return g;
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const auto& [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) throw RangeError("vertex " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw RangeError("self-loops are not allowed");
  rows_[static_cast<std::size_t>(u)].insert(v);
  rows_[static_cast<std::size_t>(v)].insert(u);
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  rows_[static_cast<std::size_t>(u)].erase(v);
  rows_[static_cast<std::size_t>(v)].erase(u);
}

std::int64_t Graph::edge_count() const {
  std::int64_t twice = 0;
  for (const auto& r : rows_) twice += r.size();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const { return edges_within_list(vertices()); }

std::vector<Edge> Graph::edges_within_list(const VertexSet& s) const {
  std::vector<Edge> out;
  s.for_each([&](int u) {
    const VertexSet later = row(u) & s;
    later.for_each([&](int v) {
      if (v > u) out.emplace_back(u, v);
    });
  });
  return out;
}

int Graph::add_vertex(const VertexSet& neighbours) {
  if (n_ == kMaxVertices) throw RangeError("graph order would exceed 512");
  const int v = n_++;
  rows_.emplace_back();
  neighbours.for_each([&](int u) {
    check_vertex(u);
    if (u != v) add_edge(u, v);
  });
  return v;
}

Graph Graph::complement() const {
  Graph g(n_);
  const VertexSet all = vertices();
  for (int v = 0; v < n_; ++v) {
    g.rows_[static_cast<std::size_t>(v)] = all - row(v);
    g.rows_[static_cast<std::size_t>(v)].erase(v);
  }
  return g;
}

Graph Graph::induced(const VertexSet& s) const {
  const std::vector<int> keep = s.members();
  Graph g(static_cast<int>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = a + 1; b < keep.size(); ++b)
      if (has_edge(keep[a], keep[b])) g.add_edge(static_cast<int>(a), static_cast<int>(b));
  return g;
}

Graph Graph::relabelled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != n_) throw RangeError("permutation size mismatch");
  Graph g(n_);
  for (const auto& [u, v] : edges()) g.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
  return g;
}

std::int64_t edges_within(const Graph& g, const VertexSet& s) {
  std::int64_t twice = 0;
  s.for_each([&](int v) { twice += g.row(v).intersection_size(s); });
  return twice / 2;
}

bool covers(const Graph& g, const VertexSet& t, Edge e) {
  const auto [u, v] = e;
  if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || !g.has_edge(u, v)) throw RangeError("covers: not an edge");
  if (t.contains(u) || t.contains(v)) throw RangeError("covers: T meets the edge");
  return !(g.row(u) & g.row(v)).intersects(t);
}

bool pair_coin(std::uint64_t seed, int u, int v) {
  const std::uint64_t idx = pair_index(u, v);
  return (splitmix64_at(seed, idx >> 6) >> (idx & 63)) & 1U;
}

Graph sample(int n, std::uint64_t seed) {
  if (n < 1 || n > kMaxVertices) throw RangeError("sample: n must lie in [1, 512]");
  Graph g(n);
  std::uint64_t word_index = ~std::uint64_t{0};
  std::uint64_t word = 0;
  // Pairs in canonical order, so each stream word is generated once.
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      const std::uint64_t idx = pair_index(u, v);
      if ((idx >> 6) != word_index) {
        word_index = idx >> 6;
        word = splitmix64_at(seed, word_index);
      }
      if ((word >> (idx & 63)) & 1U) g.add_edge(u, v);
    }
  }
  return g;
}

const Graph& VertexExposure::step() {
  const int v = graph_.n();
  if (v >= kMaxVertices) throw RangeError("vertex exposure: 512 vertices reached");
  VertexSet neighbours;
  for (int u = 0; u < v; ++u)
    if (pair_coin(seed_, u, v)) neighbours.insert(u);
  graph_.add_vertex(neighbours);
  return graph_;
}

}  // namespace alphar
