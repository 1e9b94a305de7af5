#include "alphar/census.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "alphar/errors.hpp"

namespace alphar {

std::int64_t CensusResult::count(int i) const {
  const auto it = counts.find(i);
  return it == counts.end() ? 0 : it->second;
}

std::int64_t CensusResult::total() const {
  std::int64_t t = 0;
  for (const auto& [i, c] : counts) t += c;
  return t;
}

namespace {

class SparseSetSearch {
 public:
  SparseSetSearch(const Graph& g, int k, int budget, const VertexSet& allowed,
                  const std::function<void(const VertexSet&, int)>& visit, std::uint64_t node_limit)
      : g_(g), k_(k), budget_(budget), visit_(visit), node_limit_(node_limit) {
    allowed.for_each([&](int v) {
      if (v < g.n()) order_.push_back(v);
    });
    std::stable_sort(order_.begin(), order_.end(), [&](int a, int b) { return g.degree(a) < g.degree(b); });
  }

  std::uint64_t run() {
    if (k_ == 0) {
      visit_(VertexSet{}, 0);
      return 1;
    }
    VertexSet chosen;
    extend(chosen, 0, 0, 0);
    return nodes_;
  }

 private:
  void extend(VertexSet& chosen, int size, int edges, std::size_t from) {
    if (++nodes_ > node_limit_) {
      throw LimitExceeded("census node limit of " + std::to_string(node_limit_) + " exceeded");
    }
    const std::size_t need = static_cast<std::size_t>(k_ - size);
    for (std::size_t p = from; p + need <= order_.size(); ++p) {
      const int v = order_[p];
      const int added = g_.row(v).intersection_size(chosen);
      if (edges + added > budget_) continue;
      chosen.insert(v);
      if (need == 1) {
        ++nodes_;
        visit_(chosen, edges + added);
      } else {
        extend(chosen, size + 1, edges + added, p + 1);
      }
      chosen.erase(v);
    }
  }

  const Graph& g_;
  int k_;
  int budget_;
  const std::function<void(const VertexSet&, int)>& visit_;
  std::uint64_t node_limit_;
  std::vector<int> order_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

std::uint64_t for_each_sparse_set(const Graph& g, int k, int budget, const VertexSet& allowed,
                                  const std::function<void(const VertexSet&, int)>& visit,
                                  std::uint64_t node_limit) {
  if (k < 0) throw RangeError("set size must be nonnegative");
  if (budget < 0) throw RangeError("edge budget must be nonnegative");
  return SparseSetSearch(g, k, budget, allowed, visit, node_limit).run();
}

CensusResult census(const Graph& g, int k, int budget, const CensusOptions& options) {
  if (k < 1 || k > g.n()) throw RangeError("census needs 1 <= k <= n");
  if (budget < 0) throw RangeError("census budget must be nonnegative");
  CensusResult result;
  result.k = k;
  result.budget = budget;
  for (int i = 0; i <= budget; ++i) result.counts[i] = 0;
  result.nodes = for_each_sparse_set(
      g, k, budget, g.vertices(),
      [&](const VertexSet& s, int edges) {
        ++result.counts[edges];
        if (!options.collect_witnesses) return;
        if (result.witnesses.size() >= options.witness_cap) {
          result.truncated = true;
          return;
        }
        result.witnesses.push_back({s, g.edges_within_list(s)});
      },
      options.node_limit);
  std::sort(result.witnesses.begin(), result.witnesses.end(),
            [](const CensusWitness& a, const CensusWitness& b) { return a.set < b.set; });
  return result;
}

std::vector<VertexSet> independent_sets(const Graph& g, int k, std::uint64_t node_limit) {
  std::vector<VertexSet> out;
  for_each_sparse_set(g, k, 0, g.vertices(), [&](const VertexSet& s, int) { out.push_back(s); }, node_limit);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<VertexSet> cover_family(const Graph& g, Edge e, int k, std::uint64_t node_limit) {
  const auto [u, v] = e;
  if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || !g.has_edge(u, v)) {
    throw RangeError("cover_family: not an edge of the graph");
  }
  VertexSet allowed = g.vertices() - (g.row(u) & g.row(v));
  allowed.erase(u);
  allowed.erase(v);
  std::vector<VertexSet> out;
  for_each_sparse_set(g, k, 0, allowed, [&](const VertexSet& s, int) { out.push_back(s); }, node_limit);
  std::sort(out.begin(), out.end());
  return out;
}

bool is_light(const Graph& g, const VertexSet& s) {
  // m <= floor(k^{3/4})  <=>  m^4 <= k^3 for integers m, k >= 0.
  const std::int64_t m = edges_within(g, s);
  const std::int64_t k = s.size();
  if (m > k) return false;  // k^{3/4} <= k keeps the powers below in range
  return m * m * m * m <= k * k * k;
}

bool weakly_covers(const Graph& g, const VertexSet& a, Edge e, int k) {
  const auto [u, v] = e;
  if (u < 0 || v < 0 || u >= g.n() || v >= g.n() || !g.has_edge(u, v)) {
    throw RangeError("weakly_covers: not an edge of the graph");
  }
  if (a.contains(u) || a.contains(v)) throw RangeError("weakly_covers: set meets the edge");
  const std::int64_t kk = k < 0 ? a.size() : k;
  // c <= floor(k^{2/3})  <=>  c^3 <= k^2.
  const std::int64_t c = (g.row(u) & g.row(v) & a).size();
  return c * c * c <= kk * kk;
}

}  // namespace alphar
