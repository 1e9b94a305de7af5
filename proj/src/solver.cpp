#include "alphar/solver.hpp"

#include <algorithm>
#include <functional>
#include <vector>

#include "alphar/errors.hpp"

namespace alphar {

bool has_clique(const Graph& g, const VertexSet& s, int t) {
  if (t <= 0) return true;
  if (s.size() < t) return false;
  if (t == 1) return true;
  bool found = false;
  VertexSet rest = s;
  rest.for_each([&](int v) {
    if (found) return;
    rest.erase(v);
    if (has_clique(g, rest & g.row(v), t - 1)) found = true;
  });
  return found;
}

namespace {

// Include/exclude search for the largest set avoiding a forbidden pattern.
// `blocks(chosen, v)` says whether adding v to the admissible set `chosen`
// creates the pattern; `cap` bounds how many vertices of any clique an
// admissible set can hold.
class HereditarySearch {
 public:
  HereditarySearch(const Graph& g, int cap, std::function<bool(const VertexSet&, int)> blocks,
                   std::uint64_t node_limit)
      : g_(g), cap_(cap), blocks_(std::move(blocks)), node_limit_(node_limit) {}

  SolveResult run() {
    seed_greedy();
    try {
      branch(VertexSet{}, 0, g_.vertices());
    } catch (const LimitExceeded&) {
      best_.status = SolveStatus::kLimitExceeded;
    }
    best_.nodes = nodes_;
    return best_;
  }

 private:
  void seed_greedy() {
    std::vector<int> order(static_cast<std::size_t>(g_.n()));
    for (int v = 0; v < g_.n(); ++v) order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return g_.degree(a) < g_.degree(b); });
    VertexSet chosen;
    for (int v : order) {
      if (!blocks_(chosen, v)) chosen.insert(v);
    }
    best_.size = chosen.size();
    best_.witness = chosen;
  }

  // Greedy clique cover of p; each clique admits at most cap_ vertices.
  int cover_bound(VertexSet p) const {
    int bound = 0;
    while (!p.empty()) {
      const int v = p.first();
      p.erase(v);
      VertexSet clique_candidates = p & g_.row(v);
      int size = 1;
      while (!clique_candidates.empty() && size < cap_) {
        const int w = clique_candidates.first();
        clique_candidates.erase(w);
        clique_candidates &= g_.row(w);
        p.erase(w);
        ++size;
      }
      bound += std::min(size, cap_);
    }
    return bound;
  }

  void branch(VertexSet chosen, int size, VertexSet candidates) {
    if (++nodes_ > node_limit_) throw LimitExceeded("solver node limit exceeded");
    if (candidates.empty()) {
      if (size > best_.size || (size == best_.size && chosen < best_.witness)) {
        best_.size = size;
        best_.witness = chosen;
      }
      return;
    }
    if (size + std::min(candidates.size(), cover_bound(candidates)) <= best_.size) return;

    // Branch on the candidate with fewest neighbours among the candidates.
    int pick = -1;
    int pick_degree = 0;
    candidates.for_each([&](int v) {
      const int d = g_.row(v).intersection_size(candidates);
      if (pick < 0 || d < pick_degree) {
        pick = v;
        pick_degree = d;
      }
    });
    candidates.erase(pick);

    VertexSet with = chosen;
    with.insert(pick);
    VertexSet next = candidates;
    candidates.for_each([&](int w) {
      if (blocks_(with, w)) next.erase(w);
    });
    branch(with, size + 1, next);
    branch(chosen, size, candidates);
  }

  const Graph& g_;
  int cap_;
  std::function<bool(const VertexSet&, int)> blocks_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  SolveResult best_;
};

}  // namespace

SolveResult max_clique_free(const Graph& g, int q, std::uint64_t node_limit) {
  if (q < 2) throw RangeError("max_clique_free needs q >= 2");
  auto blocks = [&g, q](const VertexSet& chosen, int v) { return has_clique(g, chosen & g.row(v), q - 1); };
  return HereditarySearch(g, q - 1, blocks, node_limit).run();
}

namespace {

class Embedder {
 public:
  Embedder(const Graph& h, const Graph& f) : h_(h), f_(f) {
    // Place pattern vertices so that each one has as many placed neighbours as possible.
    const int nf = f.n();
    std::vector<bool> placed(static_cast<std::size_t>(nf), false);
    for (int step = 0; step < nf; ++step) {
      int best = -1;
      int best_links = -1;
      for (int v = 0; v < nf; ++v) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        int links = 0;
        for (int u : order_) links += f.has_edge(u, v) ? 1 : 0;
        if (best < 0 || links > best_links || (links == best_links && f.degree(v) > f.degree(best))) {
          best = v;
          best_links = links;
        }
      }
      placed[static_cast<std::size_t>(best)] = true;
      order_.push_back(best);
    }
    image_.assign(static_cast<std::size_t>(nf), -1);
  }

  bool run() { return place(0, VertexSet{}); }

 private:
  bool place(std::size_t depth, const VertexSet& used) {
    if (depth == order_.size()) return true;
    const int fv = order_[depth];
    VertexSet candidates = h_.vertices() - used;
    for (std::size_t d = 0; d < depth; ++d) {
      if (f_.has_edge(order_[d], fv)) candidates &= h_.row(image_[static_cast<std::size_t>(order_[d])]);
    }
    const int need_degree = f_.degree(fv);
    bool found = false;
    candidates.for_each([&](int hv) {
      if (found || h_.degree(hv) < need_degree) return;
      image_[static_cast<std::size_t>(fv)] = hv;
      VertexSet next = used;
      next.insert(hv);
      if (place(depth + 1, next)) found = true;
    });
    return found;
  }

  const Graph& h_;
  const Graph& f_;
  std::vector<int> order_;
  std::vector<int> image_;
};

}  // namespace

bool contains_subgraph(const Graph& h, const Graph& f) {
  if (f.n() > 8) throw RangeError("contains_subgraph supports patterns with at most 8 vertices");
  if (f.n() > h.n()) return false;
  if (f.edge_count() > h.edge_count()) return false;
  return Embedder(h, f).run();
}

SolveResult max_F_free(const Graph& g, const Graph& f, std::uint64_t node_limit) {
  if (f.n() > 6) throw RangeError("max_F_free supports patterns with at most 6 vertices");
  if (f.n() == 0) throw RangeError("max_F_free needs a nonempty pattern");
  auto blocks = [&g, &f](const VertexSet& chosen, int v) {
    VertexSet with = chosen;
    with.insert(v);
    if (with.size() < f.n()) return false;
    return contains_subgraph(g.induced(with), f);
  };
  // Any f.n() vertices of a clique contain f, so a clique holds at most f.n()-1.
  return HereditarySearch(g, std::max(1, f.n() - 1), blocks, node_limit).run();
}

}  // namespace alphar
