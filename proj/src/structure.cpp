#include "alphar/structure.hpp"

#include <algorithm>
#include <map>

#include "alphar/census.hpp"
#include "alphar/clique_structure.hpp"
#include "alphar/errors.hpp"
#include "alphar/solver.hpp"

namespace alphar {

VertexSet DefectStructure::vertex_union() const {
  VertexSet u;
  for (const auto& p : plus_parts) u |= p.set;
  for (const auto& c : cover_parts) u |= c.set;
  return u;
}

namespace {

struct StopSearch {};

class StructureSearch {
 public:
  StructureSearch(const Graph& g, std::int64_t r, std::int64_t j, int k, std::uint64_t node_limit)
      : g_(g), node_limit_(node_limit) {
    const MuXi mx = mu_xi(r, j);
    result_.r = r;
    result_.j = j;
    result_.k = k;
    need_low_ = mx.xi;
    need_high_ = j - mx.xi;
    low_ = sets_with_exactly(k + 1, static_cast<int>(mx.mu));
    if (need_high_ > 0) high_ = sets_with_exactly(k + 1, static_cast<int>(mx.mu) + 1);
  }

  BuildResult run() {
    BuildResult out;
    try {
      if (choose_parts(0, 0, VertexSet{})) {
        out.status = BuildStatus::kFound;
        out.structure = result_;
      }
    } catch (const StopSearch&) {
      out.status = BuildStatus::kLimitExceeded;
    }
    out.nodes = nodes_;
    return out;
  }

 private:
  std::vector<VertexSet> sets_with_exactly(int size, int edges) const {
    std::vector<VertexSet> out;
    if (size > g_.n() || edges < 0) return out;
    for_each_sparse_set(
        g_, size, edges, g_.vertices(),
        [&](const VertexSet& s, int e) {
          if (e == edges) out.push_back(s);
        },
        node_limit_);
    std::sort(out.begin(), out.end());
    return out;
  }

  void tick() {
    if (++nodes_ > node_limit_) throw StopSearch{};
  }

  // Picks the low parts (index < need_low_) from low_, then the high parts from
  // high_, each list walked in increasing order from `from`.
  bool choose_parts(std::int64_t placed, std::size_t from, const VertexSet& used) {
    tick();
    if (placed == need_low_ + need_high_) return choose_covers(used);
    const bool low = placed < need_low_;
    const auto& pool = low ? low_ : high_;
    for (std::size_t idx = from; idx < pool.size(); ++idx) {
      const VertexSet& s = pool[idx];
      if (s.intersects(used)) continue;
      result_.plus_parts.push_back({s, g_.edges_within_list(s)});
      const std::int64_t next_placed = placed + 1;
      const std::size_t next_from = next_placed == need_low_ ? 0 : idx + 1;
      if (choose_parts(next_placed, next_from, used | s)) return true;
      result_.plus_parts.pop_back();
    }
    return false;
  }

  bool choose_covers(const VertexSet& used) {
    defects_.clear();
    for (const auto& p : result_.plus_parts)
      for (const auto& e : p.defects) defects_.push_back(e);
    result_.cover_parts.clear();
    return cover_from(0, used);
  }

  const std::vector<VertexSet>& family(Edge e) {
    auto it = families_.find(e);
    if (it == families_.end()) it = families_.emplace(e, cover_family(g_, e, result_.k, node_limit_)).first;
    return it->second;
  }

  bool cover_from(std::size_t d, const VertexSet& used) {
    tick();
    if (d == defects_.size()) return true;
    const Edge e = defects_[d];
    for (const VertexSet& t : family(e)) {
      if (t.intersects(used)) continue;
      result_.cover_parts.push_back({t, e});
      if (cover_from(d + 1, used | t)) return true;
      result_.cover_parts.pop_back();
      tick();
    }
    return false;
  }

  const Graph& g_;
  std::uint64_t node_limit_;
  std::uint64_t nodes_ = 0;
  std::int64_t need_low_ = 0;
  std::int64_t need_high_ = 0;
  std::vector<VertexSet> low_;
  std::vector<VertexSet> high_;
  std::vector<Edge> defects_;
  std::map<Edge, std::vector<VertexSet>> families_;
  DefectStructure result_;
};

}  // namespace

BuildResult build_structure(const Graph& g, std::int64_t r, std::int64_t j, int k, std::uint64_t node_limit) {
  if (j < 1 || j > r) throw RangeError("build_structure needs 1 <= j <= r");
  if (k < 3) throw RangeError("build_structure needs k >= 3");
  try {
    return StructureSearch(g, r, j, k, node_limit).run();
  } catch (const LimitExceeded&) {
    BuildResult out;
    out.status = BuildStatus::kLimitExceeded;
    return out;
  }
}

bool verify_structure(const Graph& g, const DefectStructure& s) {
  if (s.j < 1 || s.j > s.r || s.k < 1) return false;
  const MuXi mx = mu_xi(s.r, s.j);
  const auto k = s.k;
  if (static_cast<std::int64_t>(s.plus_parts.size()) != s.j) return false;
  if (static_cast<std::int64_t>(s.cover_parts.size()) != s.r - s.j) return false;

  const VertexSet all = g.vertices();
  VertexSet seen;
  std::int64_t total_size = 0;
  auto take = [&](const VertexSet& part) {
    if (!part.is_subset_of(all) || part.intersects(seen)) return false;
    seen |= part;
    total_size += part.size();
    return true;
  };

  std::int64_t with_mu = 0;
  std::int64_t with_mu1 = 0;
  std::map<Edge, int> defect_uses;
  for (const auto& p : s.plus_parts) {
    if (p.set.size() != k + 1 || !take(p.set)) return false;
    auto listed = p.defects;
    std::sort(listed.begin(), listed.end());
    if (listed != g.edges_within_list(p.set)) return false;
    const auto d = static_cast<std::int64_t>(listed.size());
    if (d == mx.mu) {
      ++with_mu;
    } else if (d == mx.mu + 1) {
      ++with_mu1;
    } else {
      return false;
    }
    for (const auto& e : listed) defect_uses[e] = 0;
  }
  if (with_mu != mx.xi || with_mu1 != s.j - mx.xi) return false;

  for (const auto& c : s.cover_parts) {
    if (c.set.size() != k || !take(c.set)) return false;
    const Edge e{std::min(c.defect.first, c.defect.second), std::max(c.defect.first, c.defect.second)};
    const auto it = defect_uses.find(e);
    if (it == defect_uses.end() || it->second != 0) return false;
    it->second = 1;
    if (edges_within(g, c.set) != 0) return false;
    if (!covers(g, c.set, e)) return false;
  }
  for (const auto& [e, used] : defect_uses)
    if (used != 1) return false;

  if (total_size != k * s.r + s.j) return false;

  const VertexSet u = s.vertex_union();
  if (u.size() <= 30) {
    const SolveResult best = max_clique_free(g.induced(u), static_cast<int>(s.r) + 1);
    return best.exact() && best.size == u.size();
  }
  return !has_clique(g, u, static_cast<int>(s.r) + 1);
}

}  // namespace alphar
