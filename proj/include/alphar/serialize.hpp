#pragma once

// JSON forms of the library's result types and the versioned experiment report.

#include <string>

#include "json.hpp"

#include "alphar/census.hpp"
#include "alphar/clique_structure.hpp"
#include "alphar/critical.hpp"
#include "alphar/experiments.hpp"
#include "alphar/graph.hpp"
#include "alphar/log_value.hpp"
#include "alphar/partite.hpp"
#include "alphar/solver.hpp"
#include "alphar/structure.hpp"
#include "alphar/thresholds.hpp"

namespace alphar {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

Json to_json(const LogValue& v);
Json to_json(const VertexSet& s);
Json to_json(const JProfile& p);
Json to_json(const ThresholdTable& t);
Json to_json(const Interval& i);
Json to_json(const PredictedPmf& p);
Json to_json(const CensusResult& c, bool with_witnesses);
Json to_json(const SolveResult& s);
Json to_json(const DefectStructure& s);
Json to_json(const CriticalWindow& w);
Json to_json(const PartiteCensus& p);

/// A persisted experiment: configuration, per-replicate rows, summary, timing.
struct ExperimentReport {
  std::string experiment;
  Json config = Json::object();
  std::int64_t replicates = 0;
  Json summary = Json::object();
  Json rows = Json::array();  ///< flat objects, one per replicate
  double wall_seconds = 0;

  /// {"schema": 1, "experiment", "config", "replicates", "summary", "rows", "timing"};
  /// the timing block is left out when with_timing is false.
  Json to_json(bool with_timing = true) const;
  /// Rows as CSV, columns in the key order of the first row.
  std::string rows_csv() const;
};

ExperimentReport make_report(const PoissonCheck& r);
ExperimentReport make_report(const AlphaDistribution& r);
ExperimentReport make_report(const HittingTime& r);
ExperimentReport make_report(const WitnessRate& r);

}  // namespace alphar
