#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

namespace alphar {

inline constexpr int kMaxVertices = 512;

/// Packed membership over [0, 512).
class VertexSet {
 public:
  static constexpr int kWords = kMaxVertices / 64;

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  /// {0, ..., n-1}.
  static VertexSet range(int n);

  bool contains(int v) const { return (words_[static_cast<std::size_t>(v >> 6)] >> (v & 63)) & 1U; }
  void insert(int v) { words_[static_cast<std::size_t>(v >> 6)] |= std::uint64_t{1} << (v & 63); }
  void erase(int v) { words_[static_cast<std::size_t>(v >> 6)] &= ~(std::uint64_t{1} << (v & 63)); }

  int size() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  /// Smallest member, or -1.
  int first() const {
    for (int i = 0; i < kWords; ++i)
      if (words_[static_cast<std::size_t>(i)]) return i * 64 + std::countr_zero(words_[static_cast<std::size_t>(i)]);
    return -1;
  }
  /// Smallest member greater than v, or -1.
  int next(int v) const;

  std::vector<int> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (int i = 0; i < kWords; ++i) {
      std::uint64_t w = words_[static_cast<std::size_t>(i)];
      while (w) {
        f(i * 64 + std::countr_zero(w));
        w &= w - 1;
      }
    }
  }

  bool intersects(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[static_cast<std::size_t>(i)] & o.words_[static_cast<std::size_t>(i)]) return true;
    return false;
  }
  int intersection_size(const VertexSet& o) const {
    int c = 0;
    for (int i = 0; i < kWords; ++i)
      c += std::popcount(words_[static_cast<std::size_t>(i)] & o.words_[static_cast<std::size_t>(i)]);
    return c;
  }
  bool is_subset_of(const VertexSet& o) const {
    for (int i = 0; i < kWords; ++i)
      if (words_[static_cast<std::size_t>(i)] & ~o.words_[static_cast<std::size_t>(i)]) return false;
    return true;
  }

  VertexSet& operator&=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[static_cast<std::size_t>(i)] &= o.words_[static_cast<std::size_t>(i)];
    return *this;
  }
  VertexSet& operator|=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[static_cast<std::size_t>(i)] |= o.words_[static_cast<std::size_t>(i)];
    return *this;
  }
  VertexSet& operator-=(const VertexSet& o) {
    for (int i = 0; i < kWords; ++i) words_[static_cast<std::size_t>(i)] &= ~o.words_[static_cast<std::size_t>(i)];
    return *this;
  }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  /// Orders sets by their bit pattern read as a 512-bit unsigned integer.
  friend std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    for (int i = kWords - 1; i >= 0; --i) {
      const auto x = a.words_[static_cast<std::size_t>(i)];
      const auto y = b.words_[static_cast<std::size_t>(i)];
      if (x != y) return x <=> y;
    }
    return std::strong_ordering::equal;
  }

  std::uint64_t word(int i) const { return words_[static_cast<std::size_t>(i)]; }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

using Edge = std::pair<int, int>;

/// Simple undirected graph on [0, n), n <= 512, with both triangle halves of
/// the adjacency matrix stored.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  static Graph complete(int n);
  static Graph cycle(int n);
  static Graph petersen();
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int n() const { return n_; }
  const VertexSet& row(int v) const { return rows_[static_cast<std::size_t>(v)]; }
  bool has_edge(int u, int v) const { return row(u).contains(v); }
  int degree(int v) const { return row(v).size(); }
  VertexSet vertices() const { return VertexSet::range(n_); }

  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  std::int64_t edge_count() const;
  std::vector<Edge> edges() const;
  /// Edges with both ends in s, each as (min, max), lexicographic.
  std::vector<Edge> edges_within_list(const VertexSet& s) const;

  /// Adds one vertex adjacent to the given earlier vertices; returns its index.
  int add_vertex(const VertexSet& neighbours);

  Graph complement() const;
  /// G[s] relabelled to 0..|s|-1 in increasing vertex order.
  Graph induced(const VertexSet& s) const;
  /// Vertex v of this graph becomes perm[v].
  Graph relabelled(const std::vector<int>& perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::vector<VertexSet> rows_;
};

/// Number of edges of g with both endpoints in s.
std::int64_t edges_within(const Graph& g, const VertexSet& s);

/// True iff no vertex of t is adjacent to both ends of e. Throws RangeError if
/// e is not an edge of g or t meets e.
bool covers(const Graph& g, const VertexSet& t, Edge e);

/// Canonical index of the unordered pair {u, v}: C(max, 2) + min.
constexpr std::uint64_t pair_index(int u, int v) {
  const auto hi = static_cast<std::uint64_t>(u > v ? u : v);
  const auto lo = static_cast<std::uint64_t>(u > v ? v : u);
  return hi * (hi - 1) / 2 + lo;
}

/// The coin of pair {u, v} under `seed`: bit (idx mod 64) of stream word idx / 64.
bool pair_coin(std::uint64_t seed, int u, int v);

/// G(n, 1/2), deterministic in seed. Pair {u, v} is present iff pair_coin is set,
/// so sample(n, s) is the n-th state of VertexExposure(s).
Graph sample(int n, std::uint64_t seed);

/// Grows G(m, 1/2) one vertex at a time from the same coins as sample().
class VertexExposure {
 public:
  explicit VertexExposure(std::uint64_t seed) : seed_(seed) {}

  /// Adds vertex n with fresh coins to all earlier vertices. Throws RangeError past 512.
  const Graph& step();

  int n() const { return graph_.n(); }
  const Graph& graph() const { return graph_; }
  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  Graph graph_;
};

}  // namespace alphar
