#include "alphar/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <ostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "alphar/census.hpp"
#include "alphar/clique_structure.hpp"
#include "alphar/critical.hpp"
#include "alphar/errors.hpp"
#include "alphar/experiments.hpp"
#include "alphar/graph_io.hpp"
#include "alphar/partite.hpp"
#include "alphar/rng.hpp"
#include "alphar/serialize.hpp"
#include "alphar/solver.hpp"
#include "alphar/structure.hpp"
#include "alphar/thresholds.hpp"

namespace alphar::cli {
namespace {

// Thrown by a subcommand that finished but hit a resource limit; the payload is
// still written before exiting with code 3.
struct PartialResult {
  Json body;
  std::string message;
};

struct Common {
  std::string out_path;
  std::string format = "json";
  bool no_timing = false;
};

void add_common(CLI::App* app, Common& common) {
  app->add_option("--out", common.out_path, "Write the result to this file instead of stdout");
  app->add_option("--format", common.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app->add_flag("--no-timing", common.no_timing, "Omit wall-clock fields");
}

Json envelope(const std::string& command, const Json& config, const Json& result) {
  return Json{{"command", command}, {"config", config}, {"result", result}};
}

std::string csv_with_header(const Json& config, const std::string& table) {
  std::ostringstream out;
  for (const auto& [key, value] : config.items()) out << "# " << key << '=' << value.dump() << '\n';
  out << table;
  return out.str();
}

Json error_json(const std::string& kind, const std::string& message) {
  return Json{{"error", Json{{"kind", kind}, {"message", message}}}};
}

std::string parse_kind_name(ParseError::Kind kind) {
  switch (kind) {
    case ParseError::Kind::kEmpty: return "empty";
    case ParseError::Kind::kBadHeader: return "bad_header";
    case ParseError::Kind::kBadCharacter: return "bad_character";
    case ParseError::Kind::kBadLength: return "bad_length";
    case ParseError::Kind::kTrailingBits: return "trailing_bits";
    case ParseError::Kind::kTooLarge: return "too_large";
    case ParseError::Kind::kBadEdgeList: return "bad_edge_list";
  }
  return "unknown";
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Concentration of the largest K_{r+1}-free induced subgraph of G(n,1/2)", "alphar"};
  app.require_subcommand(1);

  Common common;
  std::string payload;             // text to emit on success
  std::function<void()> action;    // set by the chosen subcommand

  auto emit_json = [&](const std::string& command, const Json& config, const Json& result) {
    payload = envelope(command, config, result).dump(2) + "\n";
  };

  // profile
  std::int64_t r = 2;
  auto* profile = app.add_subcommand("profile", "mu_j, xi_j, the breakpoint set and interval lengths for r");
  profile->add_option("--r", r, "Clique size minus one")->required();
  add_common(profile, common);
  profile->callback([&] {
    action = [&] {
      const JProfile p = j_set(r);
      Json result = to_json(p);
      result["interval_lengths"] = interval_length_sequence(r);
      result["interval_length_set"] = interval_length_set(r);
      emit_json("profile", Json{{"r", r}}, result);
    };
  });

  // thresholds
  std::int64_t k = 0;
  auto* thresholds = app.add_subcommand("thresholds", "a_k, b_{k,i}, c_{k,i} and the chain check for one level");
  thresholds->add_option("--k", k, "Level")->required();
  thresholds->add_option("--r", r, "Clique size minus one")->required();
  add_common(thresholds, common);
  thresholds->callback([&] {
    action = [&] { emit_json("thresholds", Json{{"k", k}, {"r", r}}, to_json(threshold_table(k, r))); };
  });

  // intervals
  std::int64_t n_from = 0, n_to = 0, n_step = 1;
  auto* intervals = app.add_subcommand("intervals", "I_n over a range of n");
  intervals->add_option("--r", r, "Clique size minus one")->required();
  intervals->add_option("--n-from", n_from, "First n")->required();
  intervals->add_option("--n-to", n_to, "Last n")->required();
  intervals->add_option("--step", n_step, "Stride in n")->check(CLI::PositiveNumber);
  add_common(intervals, common);
  intervals->callback([&] {
    action = [&] {
      if (n_to < n_from) throw RangeError("--n-to must be at least --n-from");
      if ((n_to - n_from) / n_step > 1'000'000) throw RangeError("at most 1e6 rows per call");
      const Json config{{"r", r}, {"n_from", n_from}, {"n_to", n_to}, {"step", n_step}};
      Json rows = Json::array();
      std::ostringstream csv;
      csv << "n,k,lo,hi,length,phase\n";
      for (std::int64_t n = n_from; n <= n_to; n += n_step) {
        const Interval iv = interval_for(n, r);
        Json row = to_json(iv);
        row["n"] = n;
        rows.push_back(row);
        csv << n << ',' << iv.k << ',' << iv.lo << ',' << iv.hi << ',' << iv.length() << ',' << iv.phase << '\n';
      }
      if (common.format == "csv") {
        payload = csv_with_header(config, csv.str());
      } else {
        emit_json("intervals", config, rows);
      }
    };
  });

  // predict
  std::int64_t n = 0;
  auto* predict = app.add_subcommand("predict", "Predicted interval and distribution of alpha_{r+1}(G(n,1/2))");
  predict->add_option("--r", r, "Clique size minus one")->required();
  predict->add_option("--n", n, "Number of vertices")->required();
  add_common(predict, common);
  predict->callback([&] {
    action = [&] {
      const Interval iv = interval_for(n, r);
      const PredictedPmf p = predicted_pmf(n, r);
      emit_json("predict", Json{{"n", n}, {"r", r}}, Json{{"interval", to_json(iv)}, {"distribution", to_json(p)}});
    };
  });

  // solve
  std::string in_path, f_path;
  int q = 3;
  std::uint64_t node_limit = kDefaultSolverNodeLimit;
  auto* solve = app.add_subcommand("solve", "Exact largest K_q-free (or F-free) induced subgraph");
  solve->add_option("--in", in_path, "Graph file (graph6 or edge list)")->required();
  solve->add_option("--q", q, "Forbidden clique size");
  solve->add_option("--F", f_path, "Forbidden graph file; replaces --q");
  solve->add_option("--node-limit", node_limit, "Search node budget");
  add_common(solve, common);
  solve->callback([&] {
    action = [&] {
      const Graph g = read_graph_file(in_path);
      Json config{{"in", in_path}, {"n", g.n()}, {"node_limit", node_limit}};
      SolveResult res;
      if (!f_path.empty()) {
        config["F"] = f_path;
        res = max_F_free(g, read_graph_file(f_path), node_limit);
      } else {
        config["q"] = q;
        res = max_clique_free(g, q, node_limit);
      }
      const Json body = envelope("solve", config, to_json(res));
      if (!res.exact()) throw PartialResult{body, "solver node limit exceeded; best set so far reported"};
      payload = body.dump(2) + "\n";
    };
  });

  // structure
  std::int64_t j = 1;
  std::uint64_t seed = 0;
  std::int64_t k_override = 0;
  std::uint64_t build_limit = kDefaultBuildNodeLimit;
  auto* structure = app.add_subcommand("structure", "Build and verify a kr+j witness structure in a sampled graph");
  structure->add_option("--n", n, "Number of vertices")->required();
  structure->add_option("--r", r, "Clique size minus one")->required();
  structure->add_option("--j", j, "Offset j in kr + j")->required();
  structure->add_option("--seed", seed, "Graph seed");
  structure->add_option("--k", k_override, "Part size k (default: level of n)");
  structure->add_option("--node-limit", build_limit, "Search node budget");
  add_common(structure, common);
  structure->callback([&] {
    action = [&] {
      const std::int64_t kk = k_override > 0 ? k_override : level(n);
      if (n < 1 || n > kMaxVertices) throw RangeError("--n must lie in [1, 512]");
      const Graph g = sample(static_cast<int>(n), seed);
      const BuildResult built = build_structure(g, r, j, static_cast<int>(kk), build_limit);
      const Json config{{"n", n}, {"r", r}, {"j", j}, {"k", kk}, {"seed", seed}, {"node_limit", build_limit}};
      Json result{{"found", built.status == BuildStatus::kFound}, {"nodes", built.nodes}};
      if (built.structure) {
        result["structure"] = to_json(*built.structure);
        result["verified"] = verify_structure(g, *built.structure);
      }
      result["graph6"] = graph6_encode(g);
      const Json body = envelope("structure", config, result);
      if (built.status == BuildStatus::kLimitExceeded) throw PartialResult{body, "structure search node limit exceeded"};
      payload = body.dump(2) + "\n";
    };
  });

  // census-graph
  int census_k = 0, budget = 0;
  bool witnesses = false;
  std::size_t witness_cap = kDefaultWitnessCap;
  std::uint64_t census_limit = kDefaultNodeLimit;
  auto* census_graph = app.add_subcommand("census-graph", "Z_{k,i} for i <= budget in one graph");
  census_graph->add_option("--in", in_path, "Graph file (graph6 or edge list)")->required();
  census_graph->add_option("--k", census_k, "Set size")->required();
  census_graph->add_option("--budget", budget, "Largest edge count to count")->required();
  census_graph->add_flag("--witnesses", witnesses, "List the sets");
  census_graph->add_option("--witness-cap", witness_cap, "Most sets to list");
  census_graph->add_option("--node-limit", census_limit, "Search node budget");
  add_common(census_graph, common);
  census_graph->callback([&] {
    action = [&] {
      const Graph g = read_graph_file(in_path);
      CensusOptions opts;
      opts.node_limit = census_limit;
      opts.collect_witnesses = witnesses;
      opts.witness_cap = witness_cap;
      const Json config{{"in", in_path}, {"n", g.n()}, {"k", census_k}, {"budget", budget},
                        {"witnesses", witnesses}, {"witness_cap", witness_cap}, {"node_limit", census_limit}};
      emit_json("census-graph", config, to_json(census(g, census_k, budget, opts), witnesses));
    };
  });

  // census-all
  int m = 0;
  int partite_r = 2;
  std::int64_t samples = 0;
  auto* census_all = app.add_subcommand("census-all", "Distance-to-r-partite histogram of K_{r+1}-free graphs on [m]");
  census_all->add_option("--m", m, "Number of vertices")->required();
  census_all->add_option("--r", partite_r, "Number of parts")->required();
  census_all->add_option("--samples", samples, "Sample this many graphs instead of sweeping all");
  census_all->add_option("--seed", seed, "Sampling seed");
  add_common(census_all, common);
  census_all->callback([&] {
    action = [&] {
      Json config{{"m", m}, {"r", partite_r}};
      PartiteCensus pc;
      if (samples > 0) {
        config["samples"] = samples;
        config["seed"] = seed;
        pc = partite_census_sampled(m, partite_r, samples, seed);
      } else {
        pc = partite_census(m, partite_r);
      }
      Json result = to_json(pc);
      result["turan_number"] = turan_number(m, partite_r);
      emit_json("census-all", config, result);
    };
  });

  // critical
  double slack = 0.0;
  int critical_r = 2;
  auto* critical = app.add_subcommand("critical", "Criticality of F and the concentration window for alpha_F");
  critical->add_option("--F", f_path, "Forbidden graph file")->required();
  critical->add_option("--r", critical_r, "Criticality order")->required();
  critical->add_option("--n", n, "Number of vertices (>= 100)")->required();
  critical->add_option("--slack", slack, "Multiple of log2 m added to the F-free count exponent");
  add_common(critical, common);
  critical->callback([&] {
    action = [&] {
      const Graph f = read_graph_file(f_path);
      const CriticalWindow w = concentration_window(n, critical_r, slack);
      Json result = to_json(w);
      result["chromatic_number"] = chromatic_number(f);
      result["is_r_critical"] = is_r_critical(f, critical_r);
      emit_json("critical", Json{{"F", f_path}, {"r", critical_r}, {"n", n}, {"slack", slack}}, result);
    };
  });

  // simulate
  RunOptions run_opts;
  std::int64_t i_defects = 0, n_max = 30;
  auto* simulate = app.add_subcommand("simulate", "Seeded Monte Carlo experiments");
  simulate->require_subcommand(1);
  auto add_run = [&](CLI::App* sub) {
    sub->add_option("--reps", run_opts.reps, "Replicates")->check(CLI::PositiveNumber);
    sub->add_option("--seed", run_opts.seed, "Master seed");
    sub->add_option("--threads", run_opts.threads, "Worker threads")->check(CLI::PositiveNumber);
    add_common(sub, common);
  };
  auto emit_report = [&](const ExperimentReport& report) {
    if (common.format == "csv") {
      payload = csv_with_header(report.config, report.rows_csv());
    } else {
      payload = report.to_json(!common.no_timing).dump(2) + "\n";
    }
  };
  auto timed = [](auto&& fn) {
    const auto start = std::chrono::steady_clock::now();
    auto report = make_report(fn());
    report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
  };

  auto* sim_poisson = simulate->add_subcommand("poisson", "Empirical law of Z_{k,i} against Poisson");
  sim_poisson->add_option("--n", n, "Number of vertices")->required();
  sim_poisson->add_option("--k", k, "Set size")->required();
  sim_poisson->add_option("--i", i_defects, "Edge count")->required();
  add_run(sim_poisson);
  sim_poisson->callback([&] {
    action = [&] { emit_report(timed([&] { return poisson_check(n, k, i_defects, run_opts); })); };
  });

  auto* sim_alpha = simulate->add_subcommand("alpha", "Empirical law of alpha_{r+1} against I_n");
  sim_alpha->add_option("--n", n, "Number of vertices")->required();
  sim_alpha->add_option("--r", r, "Clique size minus one")->required();
  add_run(sim_alpha);
  sim_alpha->callback([&] {
    action = [&] { emit_report(timed([&] { return alpha_distribution(n, r, run_opts); })); };
  });

  auto* sim_hitting = simulate->add_subcommand("hitting", "Hitting times under vertex exposure");
  sim_hitting->add_option("--r", r, "Clique size minus one")->required();
  sim_hitting->add_option("--j", j, "Offset j in kr + j")->required();
  sim_hitting->add_option("--n-max", n_max, "Horizon");
  add_run(sim_hitting);
  sim_hitting->callback([&] {
    action = [&] { emit_report(timed([&] { return hitting_time(r, j, n_max, run_opts); })); };
  });

  auto* sim_witness = simulate->add_subcommand("witness", "Witness construction rate against the Z-event");
  sim_witness->add_option("--n", n, "Number of vertices")->required();
  sim_witness->add_option("--r", r, "Clique size minus one")->required();
  sim_witness->add_option("--j", j, "Offset j in kr + j")->required();
  sim_witness->add_option("--k", k_override, "Part size k (default: level of n)");
  add_run(sim_witness);
  sim_witness->callback([&] {
    action = [&] { emit_report(timed([&] { return witness_rate(n, r, j, run_opts, k_override); })); };
  });

  auto write = [&](const std::string& text) -> bool {
    if (common.out_path.empty()) {
      out << text;
      return true;
    }
    std::ofstream file(common.out_path, std::ios::binary);
    if (!file) return false;
    file << text;
    return static_cast<bool>(file);
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << error_json("usage", e.what()).dump() << '\n';
    return kExitUsage;
  }

  try {
    if (!action) throw RangeError("no subcommand selected");
    action();
  } catch (const PartialResult& partial) {
    write(partial.body.dump(2) + "\n");
    err << error_json("limit", partial.message).dump() << '\n';
    return kExitLimit;
  } catch (const LimitExceeded& e) {
    err << error_json("limit", e.what()).dump() << '\n';
    return kExitLimit;
  } catch (const ParseError& e) {
    Json body = error_json("parse", e.what());
    body["error"]["parse_kind"] = parse_kind_name(e.kind());
    err << body.dump() << '\n';
    return kExitUsage;
  } catch (const RangeError& e) {
    err << error_json("range", e.what()).dump() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << error_json("error", e.what()).dump() << '\n';
    return kExitUsage;
  }
  if (!write(payload)) {
    err << error_json("io", "cannot write " + common.out_path).dump() << '\n';
    return kExitUsage;
  }
  return kExitOk;
}

}  // namespace alphar::cli
