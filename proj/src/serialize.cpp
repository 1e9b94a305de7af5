#include "alphar/serialize.hpp"

#include <cmath>
#include <sstream>

namespace alphar {
namespace {

Json histogram_json(const std::map<std::int64_t, std::int64_t>& h) {
  Json out = Json::object();
  for (const auto& [value, count] : h) out[std::to_string(value)] = count;
  return out;
}

Json edge_json(const Edge& e) { return Json::array({e.first, e.second}); }

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const auto& e : edges) out.push_back(edge_json(e));
  return out;
}

Json options_json(const RunOptions& o) {
  return Json{{"reps", o.reps}, {"seed", o.seed}, {"threads", o.threads}};
}

Json finite_or_null(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

std::string csv_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "";
  return v.dump();
}

}  // namespace

Json to_json(const LogValue& v) {
  return Json{{"sign", v.sign()}, {"log", finite_or_null(v.log())}, {"value", finite_or_null(v.to_double())}};
}

Json to_json(const VertexSet& s) { return Json(s.members()); }

Json to_json(const JProfile& p) {
  Json rows = Json::array();
  for (std::int64_t j = 1; j <= p.r; ++j) rows.push_back(Json{{"j", j}, {"mu", p.mu_at(j)}, {"xi", p.xi_at(j)}});
  return Json{{"r", p.r}, {"j_set", p.breakpoints}, {"profile", rows}};
}

Json to_json(const ThresholdTable& t) {
  Json bps = Json::array();
  for (const auto& b : t.breakpoints) bps.push_back(Json{{"j", b.j}, {"mu", b.mu}, {"b", b.b}, {"c", b.c}});
  return Json{{"r", t.r},
              {"k", t.k},
              {"epsilon", t.epsilon},
              {"epsilon_next", t.epsilon_next},
              {"a_k", t.a_k},
              {"a_k1", t.a_k1},
              {"breakpoints", bps},
              {"chain_holds", t.chain_holds()},
              {"chain_violations", t.chain_violations()}};
}

Json to_json(const Interval& i) {
  return Json{{"k", i.k}, {"lo", i.lo}, {"hi", i.hi}, {"length", i.length()}, {"phase", i.phase}};
}

Json to_json(const PredictedPmf& p) {
  Json values = Json::array();
  for (std::size_t j = 0; j < p.pmf.size(); ++j) values.push_back(p.value(j));
  std::vector<bool> outside(p.outside_regime.begin(), p.outside_regime.end());
  return Json{{"n", p.n},       {"r", p.r},         {"k", p.k},          {"lambda", p.lambda},
              {"outside_regime", outside}, {"values", values}, {"pmf", p.pmf},
              {"tail", p.tail}, {"raw_tail", p.raw_tail}, {"mass_defect", p.mass_defect}};
}

Json to_json(const CensusResult& c, bool with_witnesses) {
  Json counts = Json::object();
  for (const auto& [i, n] : c.counts) counts[std::to_string(i)] = n;
  Json out{{"k", c.k}, {"budget", c.budget}, {"counts", counts}, {"total", c.total()}, {"nodes", c.nodes}};
  if (with_witnesses) {
    Json w = Json::array();
    for (const auto& x : c.witnesses) w.push_back(Json{{"set", to_json(x.set)}, {"edges", edges_json(x.edges)}});
    out["witnesses"] = w;
    out["truncated"] = c.truncated;
  }
  return out;
}

Json to_json(const SolveResult& s) {
  return Json{{"size", s.size}, {"witness", to_json(s.witness)}, {"exact", s.exact()}, {"nodes", s.nodes}};
}

Json to_json(const DefectStructure& s) {
  Json plus = Json::array();
  for (const auto& p : s.plus_parts) plus.push_back(Json{{"set", to_json(p.set)}, {"defects", edges_json(p.defects)}});
  Json cover = Json::array();
  for (const auto& c : s.cover_parts) cover.push_back(Json{{"set", to_json(c.set)}, {"defect", edge_json(c.defect)}});
  return Json{{"r", s.r}, {"j", s.j}, {"k", s.k}, {"size", s.vertex_union().size()},
              {"plus_parts", plus}, {"cover_parts", cover}};
}

Json to_json(const CriticalWindow& w) {
  return Json{{"n", w.n},   {"r", w.r},         {"m0", w.m0}, {"M", w.M},
              {"window", Json::array({w.lo, w.hi})}, {"width", w.width()}, {"slack", w.slack}};
}

Json to_json(const PartiteCensus& p) {
  Json out{{"m", p.m},
           {"r", p.r},
           {"total", p.total},
           {"clique_free", p.clique_free},
           {"histogram", histogram_json(p.histogram)},
           {"partite_fraction", p.partite_fraction()},
           {"sampled", p.sampled}};
  if (p.sampled) {
    out["seed"] = p.seed;
    out["partite_fraction_radius"] = p.partite_fraction_radius();
  }
  return out;
}

Json ExperimentReport::to_json(bool with_timing) const {
  Json out{{"schema", kReportSchema},
           {"experiment", experiment},
           {"config", config},
           {"replicates", replicates},
           {"summary", summary},
           {"rows", rows}};
  if (with_timing) out["timing"] = Json{{"wall_seconds", wall_seconds}};
  return out;
}

std::string ExperimentReport::rows_csv() const {
  std::ostringstream out;
  if (rows.empty()) return "";
  bool first = true;
  for (const auto& [key, value] : rows.front().items()) {
    out << (first ? "" : ",") << key;
    first = false;
  }
  out << '\n';
  for (const auto& row : rows) {
    first = true;
    for (const auto& [key, value] : rows.front().items()) {
      out << (first ? "" : ",") << (row.contains(key) ? csv_cell(row.at(key)) : "");
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

ExperimentReport make_report(const PoissonCheck& r) {
  ExperimentReport rep;
  rep.experiment = "poisson";
  rep.config = Json{{"n", r.n}, {"k", r.k}, {"i", r.i}};
  rep.config.update(options_json(r.options));
  rep.replicates = r.options.reps;
  rep.summary = Json{{"expected", r.expected},
                     {"mean", r.mean},
                     {"variance", r.variance},
                     {"clt_radius", r.clt_radius},
                     {"histogram", histogram_json(r.histogram)},
                     {"tv_theoretical", r.tv_theoretical},
                     {"tv_empirical", r.tv_empirical},
                     {"stein_chen_bound", finite_or_null(r.stein_chen)},
                     {"degenerate", r.degenerate}};
  for (std::size_t i = 0; i < r.samples.size(); ++i) rep.rows.push_back(Json{{"replicate", i}, {"z", r.samples[i]}});
  return rep;
}

ExperimentReport make_report(const AlphaDistribution& r) {
  ExperimentReport rep;
  rep.experiment = "alpha";
  rep.config = Json{{"n", r.n}, {"r", r.r}};
  rep.config.update(options_json(r.options));
  rep.replicates = r.options.reps;
  rep.summary = Json{{"histogram", histogram_json(r.histogram)}, {"coverage", r.coverage}, {"inexact", r.inexact}};
  rep.summary["interval"] = r.interval ? to_json(*r.interval) : Json(nullptr);
  rep.summary["predicted"] = r.predicted ? to_json(*r.predicted) : Json(nullptr);
  for (std::size_t i = 0; i < r.samples.size(); ++i) rep.rows.push_back(Json{{"replicate", i}, {"alpha", r.samples[i]}});
  return rep;
}

ExperimentReport make_report(const HittingTime& r) {
  ExperimentReport rep;
  rep.experiment = "hitting";
  rep.config = Json{{"r", r.r}, {"j", r.j}, {"n_max", r.n_max}};
  rep.config.update(options_json(r.options));
  rep.replicates = r.options.reps;
  rep.summary = Json{{"censored", r.censored},
                     {"censoring_fraction", r.censoring_fraction},
                     {"coincident", r.coincident},
                     {"coincidence_fraction", r.coincidence_fraction},
                     {"t1_before_t2", r.t1_before_t2},
                     {"difference", histogram_json(r.difference)}};
  for (std::size_t i = 0; i < r.replicates.size(); ++i) {
    const auto& h = r.replicates[i];
    rep.rows.push_back(Json{{"replicate", i},
                            {"t1", h.t1 < 0 ? Json(nullptr) : Json(h.t1)},
                            {"t2", h.t2 < 0 ? Json(nullptr) : Json(h.t2)},
                            {"censored", h.censored()}});
  }
  return rep;
}

ExperimentReport make_report(const WitnessRate& r) {
  ExperimentReport rep;
  rep.experiment = "witness";
  rep.config = Json{{"n", r.n}, {"r", r.r}, {"j", r.j}, {"k", r.k}};
  rep.config.update(options_json(r.options));
  rep.replicates = r.options.reps;
  rep.summary = Json{{"mu", r.mu},
                     {"xi", r.xi},
                     {"expected_z", r.expected_z},
                     {"predicted_tail", r.predicted_tail},
                     {"z_frequency", r.z_frequency},
                     {"success_frequency", r.success_frequency},
                     {"limit_hits", r.limit_hits},
                     {"verify_failures", r.verify_failures},
                     {"alpha_checked", r.alpha_checked},
                     {"alpha_frequency", r.alpha_checked ? Json(r.alpha_frequency) : Json(nullptr)},
                     {"success_without_alpha", r.success_without_alpha}};
  for (std::size_t i = 0; i < r.replicates.size(); ++i) {
    const auto& w = r.replicates[i];
    rep.rows.push_back(Json{{"replicate", i},
                            {"z_event", w.z_event},
                            {"built", w.built},
                            {"build_limit", w.build_limit},
                            {"verified", w.verified},
                            {"alpha", w.alpha < 0 ? Json(nullptr) : Json(w.alpha)}});
  }
  return rep;
}

}  // namespace alphar
