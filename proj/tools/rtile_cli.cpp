// rtile: command-line front end for the tiling engine and oracles.
//
// Exit codes: 0 ok, 1 usage or input error, 2 budget refused, 3 fixture mismatch.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "rtile/adversary.hpp"
#include "rtile/errors.hpp"
#include "rtile/extraction.hpp"
#include "rtile/fixtures.hpp"
#include "rtile/graph_io.hpp"
#include "rtile/oracles.hpp"
#include "rtile/sampling.hpp"
#include "rtile/sweep.hpp"

namespace {

using namespace rtile;
using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitBudget = 2;
constexpr int kExitFixture = 3;

struct Globals {
  std::uint64_t seed = 0;
  double budget = 1e9;
  std::size_t workers = 1;
  std::string out;
  std::string format = "csv";
};

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty() || g.out == "-") {
    std::cout << text;
    return;
  }
  std::ofstream file(g.out);
  if (!file) throw std::runtime_error("cannot open output file " + g.out);
  file << text;
}

std::string csv_table(const std::vector<std::string>& header, const std::vector<std::string>& row) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
  out += "\n";
  for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + row[i];
  return out + "\n";
}

std::string num(double x) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.9g", x);
  return buffer;
}

Graph host_graph(const std::string& file, std::optional<std::size_t> complete) {
  if (!file.empty()) return read_graph_file(file);
  if (complete) return Graph::complete(*complete);
  throw CLI::ValidationError("host", "give --graph FILE or --complete N");
}

VertexSet side_a(std::size_t n, const std::vector<std::size_t>& listed) {
  VertexSet a(n);
  if (listed.empty()) {
    for (std::size_t v = 0; v < n / 2; ++v) a.insert(static_cast<Vertex>(v));
    return a;
  }
  for (std::size_t v : listed) {
    if (v >= n) throw CLI::ValidationError("--a", "vertex " + std::to_string(v) + " out of range");
    a.insert(static_cast<Vertex>(v));
  }
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Monochromatic tiling extraction and brute-force oracles"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "Base seed")->capture_default_str();
  auto* budget_opt = app.add_option("--budget", g.budget, "Work ceiling for exhaustive operations")->capture_default_str();
  app.add_option("--workers", g.workers, "Worker threads for sweeps")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--out", g.out, "Output file (default stdout)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  // sample
  auto* sample = app.add_subcommand("sample", "Sample G(n, p) and print it in the graph text format");
  sample->fallthrough();
  std::size_t sample_n = 0;
  std::optional<double> sample_p;
  std::optional<double> sample_c;
  std::string sample_pattern = "k3";
  sample->add_option("--n", sample_n, "Number of vertices")->required()->check(CLI::PositiveNumber);
  auto* p_opt = sample->add_option("--p", sample_p, "Edge probability");
  sample->add_option("--C", sample_c, "Threshold constant: p = C n^(-1/max{m2(H),1})")->excludes(p_opt);
  sample->add_option("--pattern", sample_pattern, "Pattern fixing the threshold exponent")->capture_default_str();

  // colour
  auto* colour = app.add_subcommand("colour", "Colour a graph with an adversary");
  colour->fallthrough();
  std::string colour_graph;
  std::optional<std::size_t> colour_complete;
  std::string colour_adversary = "uniform-random";
  std::vector<std::size_t> colour_part;
  std::string colour_pattern = "k3";
  colour->add_option("--graph", colour_graph, "Graph file");
  colour->add_option("--complete", colour_complete, "Use K_N as host");
  colour->add_option("--adversary", colour_adversary, "uniform-random | planted-partition | copy-avoider-greedy | majority-degree")->capture_default_str();
  colour->add_option("--part", colour_part, "Explicit part for planted-partition");
  colour->add_option("--pattern", colour_pattern, "Pattern avoided by copy-avoider-greedy")->capture_default_str();

  // extract
  auto* extract = app.add_subcommand("extract", "Extract a monochromatic H-tiling from a coloured graph");
  extract->fallthrough();
  std::string extract_graph;
  std::string extract_pattern = "k3";
  double extract_epsilon = 0.1;
  std::optional<double> extract_eta;
  std::string extract_tiling_out;
  extract->add_option("--graph", extract_graph, "Coloured graph file")->required();
  extract->add_option("--pattern", extract_pattern, "Pattern name or graph file")->capture_default_str();
  extract->add_option("--epsilon", extract_epsilon, "Slack epsilon")->capture_default_str();
  extract->add_option("--eta", extract_eta, "Cluster parameter (default epsilon/(2k-alpha))");
  extract->add_option("--tiling-out", extract_tiling_out, "Write the tiling copies to this file");

  // rt-exact
  auto* rt = app.add_subcommand("rt-exact", "Exact tiling Ramsey number Rt(H, G) by exhaustion");
  rt->fallthrough();
  std::string rt_pattern = "k3";
  std::string rt_graph;
  std::optional<std::size_t> rt_complete;
  rt->add_option("--pattern", rt_pattern, "Pattern name or graph file")->capture_default_str();
  rt->add_option("--graph", rt_graph, "Host graph file");
  rt->add_option("--complete", rt_complete, "Use K_N as host");

  // good-count
  auto* good = app.add_subcommand("good-count", "Count (A,B)-good copies of H");
  good->fallthrough();
  std::string good_graph;
  std::optional<std::size_t> good_complete;
  std::string good_colour = "red";
  std::string good_pattern = "k3";
  std::vector<std::size_t> good_a;
  good->add_option("--graph", good_graph, "Coloured graph file");
  good->add_option("--complete", good_complete, "Use a monochromatic K_N");
  good->add_option("--colour", good_colour, "Colour of the monochromatic K_N")->check(CLI::IsMember({"red", "blue", "r", "b"}))->capture_default_str();
  good->add_option("--pattern", good_pattern, "Pattern name or graph file")->capture_default_str();
  good->add_option("--a", good_a, "Vertices of A (default: first half); B is the rest");

  // aux-check
  auto* aux = app.add_subcommand("aux-check", "Build the auxiliary hypergraph and check its degree bounds");
  aux->fallthrough();
  std::size_t aux_n = 0;
  std::string aux_pattern = "k3";
  std::vector<std::size_t> aux_a;
  aux->add_option("--n", aux_n, "Host size")->required()->check(CLI::PositiveNumber);
  aux->add_option("--pattern", aux_pattern, "Pattern name or graph file")->capture_default_str();
  aux->add_option("--a", aux_a, "Vertices of A (default: first half)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Threshold sweep over n, C and adversaries");
  sweep->fallthrough();
  std::string sweep_pattern = "k3";
  std::vector<std::size_t> sweep_n;
  std::vector<double> sweep_c{1.0};
  double sweep_epsilon = 0.1;
  std::size_t sweep_trials = 10;
  std::vector<std::string> sweep_adversaries{"uniform-random"};
  bool sweep_timing = false;
  sweep->add_option("--pattern", sweep_pattern, "Pattern name or graph file")->capture_default_str();
  sweep->add_option("--n", sweep_n, "Host sizes (empty gives an empty table)");
  sweep->add_option("--C", sweep_c, "Threshold constants")->capture_default_str();
  sweep->add_option("--epsilon", sweep_epsilon, "Slack epsilon")->capture_default_str();
  sweep->add_option("--trials", sweep_trials, "Trials per cell")->check(CLI::PositiveNumber)->capture_default_str();
  sweep->add_option("--adversaries", sweep_adversaries, "Adversaries, or 'all'")->capture_default_str();
  sweep->add_flag("--timing", sweep_timing, "Add a wall_ms column (output is then not reproducible)");

  // fixtures
  auto* verify = app.add_subcommand("verify-fixtures", "Recompute cached oracle fixtures and diff");
  verify->fallthrough();
  std::string verify_dir = "fixtures";
  verify->add_option("--dir", verify_dir, "Fixture directory")->capture_default_str();
  auto* make = app.add_subcommand("make-fixtures", "Regenerate the default fixture corpus");
  make->fallthrough();
  std::string make_dir = "fixtures";
  make->add_option("--dir", make_dir, "Fixture directory")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  const bool json = g.format == "json";
  try {
    if (*sample) {
      const PatternStats h = load_pattern(sample_pattern);
      const double p = sample_p ? *sample_p : threshold_probability(sample_n, sample_c.value_or(1.0), h);
      emit(g, format_graph(sample_gnp(sample_n, p, g.seed)));
    } else if (*colour) {
      AdversarySpec spec;
      spec.kind = parse_adversary(colour_adversary);
      spec.seed = g.seed;
      if (!colour_part.empty()) spec.part = std::vector<Vertex>(colour_part.begin(), colour_part.end());
      spec.pattern = load_pattern(colour_pattern);
      emit(g, format_coloured_graph(colour_with(host_graph(colour_graph, colour_complete), spec)));
    } else if (*extract) {
      const ColouredGraph host = read_coloured_graph_file(extract_graph);
      const PatternStats h = load_pattern(extract_pattern);
      ExtractionOptions options;
      options.epsilon = extract_epsilon;
      options.eta = extract_eta;
      options.seed = g.seed;
      options.budget = static_cast<std::uint64_t>(g.budget);
      const ExtractionResult result = extract_tiling(host, h, options);
      if (!is_valid_tiling(host, h, result.tiling))
        throw std::logic_error("extracted tiling failed validation");
      if (!extract_tiling_out.empty()) {
        std::ofstream file(extract_tiling_out);
        file << "# colour " << colour_name(result.tiling.colour) << "\n";
        for (const auto& copy : result.tiling.copies) {
          for (std::size_t i = 0; i < copy.vertex_map.size(); ++i) file << (i ? " " : "") << copy.vertex_map[i];
          file << "\n";
        }
      }
      const ExtractionReport& r = result.report;
      if (json) {
        emit(g, report_to_json(r, 2) + "\n");
      } else {
        emit(g, csv_table({"target_size", "achieved_size", "colour", "cluster_vertices", "probe_failures",
                           "seed", "eta", "epsilon", "rounding_table_version", "source"},
                          {num(r.target_size), std::to_string(r.achieved_size), std::string(colour_name(r.colour)),
                           std::to_string(r.cluster_vertices), std::to_string(r.probe_failures),
                           std::to_string(r.seed), num(r.eta), num(r.epsilon),
                           std::to_string(r.rounding_table_version), r.source}));
      }
    } else if (*rt) {
      const PatternStats h = load_pattern(rt_pattern);
      const Graph host = host_graph(rt_graph, rt_complete);
      const RtResult r = exact_rt(h, host, g.budget, g.seed);
      if (json) {
        ordered_json j{{"pattern", h.name()}, {"host_order", host.order()}, {"host_edges", host.size()},
                       {"exact", r.exact}, {"lower", r.lower}, {"upper", r.upper},
                       {"colourings_examined", r.colourings_examined},
                       {"isomorph_rejection", r.isomorph_rejection}};
        if (r.exact) j["value"] = r.upper;
        emit(g, j.dump(2) + "\n");
      } else {
        emit(g, csv_table({"pattern", "host_order", "host_edges", "exact", "lower", "upper", "colourings_examined"},
                          {h.name(), std::to_string(host.order()), std::to_string(host.size()),
                           r.exact ? "1" : "0", std::to_string(r.lower), std::to_string(r.upper),
                           std::to_string(r.colourings_examined)}));
      }
    } else if (*good) {
      const PatternStats h = load_pattern(good_pattern);
      ColouredGraph host;
      if (!good_graph.empty()) {
        host = read_coloured_graph_file(good_graph);
      } else if (good_complete) {
        host = ColouredGraph::monochromatic(Graph::complete(*good_complete), *parse_colour(good_colour));
      } else {
        throw CLI::ValidationError("host", "give --graph FILE or --complete N");
      }
      const VertexSet a = side_a(host.order(), good_a);
      const std::uint64_t count = good_copy_count(host, h, a, a.complement(), g.budget);
      if (json)
        emit(g, ordered_json{{"pattern", h.name()}, {"n", host.order()}, {"count", count}}.dump(2) + "\n");
      else
        emit(g, csv_table({"pattern", "n", "count"}, {h.name(), std::to_string(host.order()), std::to_string(count)}));
    } else if (*aux) {
      const PatternStats h = load_pattern(aux_pattern);
      const VertexSet a = side_a(aux_n, aux_a);
      const AuxHypergraph hyper = build_aux_hypergraph(aux_n, a, a.complement(), h, g.budget);
      const AuxDegreeReport report = aux_degree_check(hyper, h);
      if (json) {
        ordered_json rows = ordered_json::array();
        for (const auto& row : report.rows)
          rows.push_back({{"j", row.j}, {"delta", row.delta}, {"bound", row.bound}, {"pass", row.pass}});
        emit(g, ordered_json{{"pattern", h.name()}, {"n", aux_n}, {"edges", hyper.edge_count()},
                             {"edge_bound", report.edge_count_bound}, {"tau", hyper.tau},
                             {"max_vertex_degree", report.max_vertex_degree},
                             {"vertex_degree_bound", report.vertex_degree_bound},
                             {"mixed_hyperedges", report.mixed_hyperedges}, {"rows", rows},
                             {"pass", report.all_pass()}}
                    .dump(2) + "\n");
      } else {
        std::string out = "j,delta,bound,pass\n";
        for (const auto& row : report.rows)
          out += std::to_string(row.j) + "," + std::to_string(row.delta) + "," + num(row.bound) + "," +
                 (row.pass ? "1" : "0") + "\n";
        out += "# edges=" + std::to_string(hyper.edge_count()) + " edge_bound=" + num(report.edge_count_bound) +
               " mixed=" + std::to_string(report.mixed_hyperedges) + " pass=" + (report.all_pass() ? "1" : "0") + "\n";
        emit(g, out);
      }
      if (!report.all_pass()) return kExitUsage;
    } else if (*sweep) {
      SweepPlan plan;
      plan.pattern = load_pattern(sweep_pattern);
      plan.n_list = sweep_n;
      plan.c_list = sweep_c;
      plan.epsilon = sweep_epsilon;
      plan.trials = sweep_trials;
      plan.seed_base = g.seed;
      plan.workers = g.workers;
      plan.record_time = sweep_timing;
      if (budget_opt->count() > 0) plan.work_budget = g.budget;
      for (const auto& name : sweep_adversaries) {
        if (name == "all") {
          plan.adversaries.assign(std::begin(kAllAdversaries), std::end(kAllAdversaries));
          break;
        }
        plan.adversaries.push_back(parse_adversary(name));
      }
      const SweepResult result = run_sweep(plan);
      emit(g, json ? sweep_to_json(result, sweep_timing) : sweep_to_csv(result, sweep_timing));
    } else if (*verify) {
      const FixtureReport report = verify_fixtures(verify_dir, g.budget);
      for (const auto& w : report.warnings) std::cerr << "warning: " << w << "\n";
      for (const auto& e : report.errors) std::cerr << "error: " << e << "\n";
      for (const auto& key : report.mismatches) std::cerr << "mismatch: " << key << "\n";
      emit(g, "checked " + std::to_string(report.checked) + " fixtures, " +
                  std::to_string(report.mismatches.size()) + " mismatches, " +
                  std::to_string(report.errors.size()) + " errors\n");
      if (!report.pass()) return kExitFixture;
    } else if (*make) {
      const auto entries = default_fixture_corpus(g.budget);
      write_fixtures(make_dir, entries);
      emit(g, "wrote " + std::to_string(entries.size()) + " fixtures to " + make_dir + "\n");
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget refused: " << e.what() << "\n";
    return kExitBudget;
  } catch (const CLI::Error& e) {
    std::cerr << "usage: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
