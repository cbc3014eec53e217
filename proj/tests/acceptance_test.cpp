// Acceptance checks. Prints one "PASS"/"FAIL" line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <variant>
#include <vector>

#include "rtile/adversary.hpp"
#include "rtile/cluster_process.hpp"
#include "rtile/extraction.hpp"
#include "rtile/oracles.hpp"
#include "rtile/pattern.hpp"
#include "rtile/sampling.hpp"
#include "rtile/sweep.hpp"
#include "support/naive.hpp"
#include "support/planted.hpp"

using namespace rtile;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string format(const char* spec, auto... args) {
  char buffer[512];
  std::snprintf(buffer, sizeof buffer, spec, args...);
  return buffer;
}

// All vertex subsets of {0..n-1} with exactly `size` members, as bitmasks.
std::vector<std::uint32_t> subsets_of_size(std::size_t n, std::size_t size) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t m = 0; m < (1U << n); ++m)
    if (static_cast<std::size_t>(__builtin_popcount(m)) == size) out.push_back(m);
  return out;
}

VertexSet set_from_mask(std::size_t n, std::uint32_t mask) {
  VertexSet s(n);
  for (Vertex v = 0; v < n; ++v)
    if ((mask >> v) & 1U) s.insert(v);
  return s;
}

Outcome m2_equivalence() {
  std::size_t classes = 0;
  std::size_t mismatches = 0;
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Graph& h : naive::all_graphs(n)) {
      ++classes;
      mismatches += m2_density(h) == naive::m2(h) ? 0 : 1;
    }
  const bool fixed = m2_density(complete_graph(2)) == Rational(1, 2) &&
                     m2_density(complete_graph(3)) == Rational(2, 1) &&
                     m2_density(complete_graph(4)) == Rational(5, 2);
  return {mismatches == 0 && fixed,
          format("%zu isomorphism classes on 1..5 vertices, %zu mismatches, fixed points %s", classes,
                 mismatches, fixed ? "ok" : "wrong")};
}

Outcome exact_rt_fixtures() {
  const auto a = exact_rt(named_pattern("k2"), Graph::complete(3));
  const auto b = exact_rt(named_pattern("k3"), Graph::complete(5));
  const auto c = exact_rt(named_pattern("k3"), Graph::complete(6));
  const bool ok = a.exact && b.exact && c.exact && a.upper == 1 && b.upper == 0 && c.upper == 1;
  return {ok, format("Rt(K2,K3)=%zu Rt(K3,K5)=%zu Rt(K3,K6)=%zu", a.upper, b.upper, c.upper)};
}

Outcome aux_degree_bounds() {
  std::size_t violations = 0;
  std::size_t checked = 0;
  for (const char* name : {"k3", "p4"})
    for (std::size_t n : {6, 8, 10}) {
      const PatternStats h = named_pattern(name);
      VertexSet a(n);
      for (Vertex v = 0; v < n / 2; ++v) a.insert(v);
      const auto report = aux_degree_check(build_aux_hypergraph(n, a, a.complement(), h), h);
      for (const auto& row : report.rows) {
        ++checked;
        if (!row.pass) {
          ++violations;
          std::printf("  violation: %s n=%zu j=%zu delta=%llu bound=%.3f\n", name, n, row.j,
                      static_cast<unsigned long long>(row.delta), row.bound);
        }
      }
      violations += report.mixed_hyperedges + report.non_uniform_hyperedges;
    }
  return {violations == 0, format("%zu (H, n, j) degree rows checked, %zu violations", checked, violations)};
}

Outcome process_invariants() {
  const PatternStats k3 = named_pattern("k3");
  std::size_t successes = 0;
  std::size_t failures = 0;
  std::size_t violations = 0;
  std::size_t cases[4] = {0, 0, 0, 0};
  // eta is chosen so the probe sets have ceil(eta^2 s) >= 4 vertices; below
  // that the instances are not rich at the scale the process probes.
  const double etas_24[] = {0.45, 0.5, 0.55, 0.6, 0.7};
  const double etas_48[] = {0.3, 0.35, 0.4, 0.5, 0.6};
  const double red_ps[] = {0.5, 0.3, 0.7, 0.9};
  for (std::uint64_t i = 0; i < 1000; ++i) {
    const std::size_t s = i % 2 == 0 ? 24 : 48;
    const double eta = (s == 24 ? etas_24 : etas_48)[(i / 2) % 5];
    const auto inst = planted::make(s, 3, planted::Fill::random, derive_seed({4, i}), red_ps[(i / 5) % 4]);
    ProcessOptions opts;
    opts.seed = i;
    opts.randomize_probe_order = (i / 20) % 2 == 1;
    const auto out = cluster_process(inst.g, k3, inst.x, inst.y, eta, inst.blue_x, inst.red_y, opts);
    std::vector<std::string> issues;
    if (const auto* ok = std::get_if<ClusterSuccess>(&out)) {
      ++successes;
      ++cases[static_cast<int>(ok->assembly)];
      if (!verify_cluster(inst.g, k3, ok->certificate)) issues.push_back("verify_cluster rejected certificate");
      for (auto& msg : audit_process(k3, ok->run, ok, eta)) issues.push_back(std::move(msg));
    } else {
      ++failures;
      issues = audit_process(k3, std::get<ClusterFailure>(out).run);
    }
    if (!issues.empty()) {
      ++violations;
      if (violations <= 3) std::printf("  instance %llu: %s\n", static_cast<unsigned long long>(i), issues.front().c_str());
    }
  }
  return {violations == 0 && successes > 0,
          format("1000 instances: %zu clusters (x-full %zu, y-full %zu, completion %zu), %zu probe failures, "
                 "%zu with violations",
                 successes, cases[1], cases[2], cases[3], failures, violations)};
}

Outcome complete_host_extraction() {
  const PatternStats k3 = named_pattern("k3");
  const Graph g = Graph::complete(50);
  std::size_t runs = 0;
  std::size_t ok = 0;
  std::size_t smallest = 50;
  for (AdversaryKind kind : kAllAdversaries)
    for (std::uint64_t seed = 0; seed < 25; ++seed) {
      AdversarySpec spec;
      spec.kind = kind;
      spec.seed = seed;
      spec.pattern = k3;
      const ColouredGraph coloured = colour_with(g, spec);
      ExtractionOptions opts;
      opts.epsilon = 0.1;
      opts.seed = seed;
      const auto res = extract_tiling(coloured, k3, opts);
      ++runs;
      const bool valid = naive::tiling_ok(coloured, k3.graph(), res.tiling);
      ok += valid && res.tiling.size() >= 5 ? 1 : 0;
      smallest = std::min(smallest, res.tiling.size());
    }
  return {ok == runs, format("%zu/%zu runs reach 5 copies (smallest tiling %zu)", ok, runs, smallest)};
}

Outcome random_graph_phase() {
  SweepPlan plan;
  plan.pattern = named_pattern("k3");
  plan.n_list = {300};
  plan.c_list = {5.0, 0.01};
  plan.epsilon = 0.15;
  plan.trials = 50;
  plan.seed_base = 2024;
  plan.adversaries = {AdversaryKind::uniform_random};
  const SweepResult r = run_sweep(plan);
  double high = 0.0;
  double low = 1.0;
  for (const auto& cell : r.aggregates) (cell.c == 5.0 ? high : low) = cell.frequency;
  return {high >= 0.9 && low <= 0.1, format("C=5 frequency %.2f, C=0.01 frequency %.2f", high, low)};
}

Outcome good_copy_counting() {
  const PatternStats k3 = named_pattern("k3");
  const ColouredGraph red6 = ColouredGraph::monochromatic(Graph::complete(6), Colour::red);
  std::size_t wrong19 = 0;
  for (std::uint32_t m : subsets_of_size(6, 3)) {
    const VertexSet a = set_from_mask(6, m);
    wrong19 += good_copy_count(red6, k3, a, a.complement()) == 19 ? 0 : 1;
  }
  const Graph k5 = Graph::complete(5);
  std::vector<std::uint32_t> parts = subsets_of_size(5, 2);
  for (auto m : subsets_of_size(5, 3)) parts.push_back(m);
  std::size_t asym = 0;
  std::size_t checks = 0;
  for (std::uint64_t mask = 0; mask < 1024; ++mask) {
    const ColouredGraph g = naive::colour_by_mask(k5, mask);
    const ColouredGraph sw = g.swapped();
    for (auto m : parts) {
      const VertexSet a = set_from_mask(5, m);
      const VertexSet b = a.complement();
      ++checks;
      asym += good_copy_count(g, k3, a, b) == good_copy_count(sw, k3, b, a) ? 0 : 1;
    }
  }
  return {wrong19 == 0 && asym == 0,
          format("K6 all-red: %zu balanced partitions off 19; K5 symmetry: %zu/%zu checks broken", wrong19,
                 asym, checks)};
}

Outcome richness_ground_truth() {
  const PatternStats k3 = named_pattern("k3");
  std::size_t disagreements = 0;
  std::size_t checks = 0;
  for (std::size_t n : {5, 6}) {
    const Graph host = Graph::complete(n);
    std::vector<std::pair<VertexSet, VertexSet>> pairs;
    for (std::size_t s : {2, 3}) {
      if (2 * s > n) continue;
      for (auto xm : subsets_of_size(n, s))
        for (auto ym : subsets_of_size(n, s))
          if ((xm & ym) == 0) pairs.emplace_back(set_from_mask(n, xm), set_from_mask(n, ym));
    }
    const auto copies = enumerate_copies(host, k3);
    const std::uint64_t colourings = std::uint64_t{1} << host.size();
    for (std::uint64_t mask = 0; mask < colourings; ++mask) {
      const ColouredGraph g = naive::colour_by_mask(host, mask);
      for (const auto& [x, y] : pairs) {
        ++checks;
        const bool probe = richness_probe(g, k3, x, y).has_value();
        disagreements += probe == has_richness_witness(g, copies, k3, x, y) ? 0 : 1;
      }
    }
  }
  return {disagreements == 0, format("%zu (colouring, X, Y) checks, %zu disagreements", checks, disagreements)};
}

Outcome supersaturation() {
  std::size_t checked = 0;
  std::size_t applicable = 0;
  std::size_t violations = 0;
  auto check = [&](const Graph& g) {
    for (std::size_t t = 3; t <= g.order(); ++t) {
      SupersatParams params;
      params.t = t;
      params.r = 3;
      const auto rep = clique_supersat_count(g, params);
      ++checked;
      if (!rep.hypothesis_holds) continue;
      ++applicable;
      violations += rep.meets_bound ? 0 : 1;
    }
  };
  for (std::size_t n : {8, 10, 12}) {
    check(Graph::complete(n));
    // Dense non-complete hosts exercise the hypothesis boundary as well.
    for (std::uint64_t seed = 0; seed < 20; ++seed) check(sample_gnp(n, 0.85, derive_seed({9, n, seed})));
  }
  return {violations == 0 && applicable > 0,
          format("%zu (host, t) cases, %zu meet the density hypothesis, %zu violations", checked, applicable,
                 violations)};
}

Outcome reproducibility() {
  SweepPlan plan;
  plan.pattern = named_pattern("k3");
  plan.n_list = {40, 80};
  plan.c_list = {1.0, 4.0};
  plan.epsilon = 0.15;
  plan.trials = 4;
  plan.seed_base = 77;
  plan.adversaries.assign(std::begin(kAllAdversaries), std::end(kAllAdversaries));
  const std::string first = sweep_to_csv(run_sweep(plan), false);
  const std::string second = sweep_to_csv(run_sweep(plan), false);
  plan.workers = 4;
  const std::string threaded = sweep_to_csv(run_sweep(plan), false);
  const bool ok = first == second && first == threaded;
  return {ok, format("%zu-byte CSV, repeat %s, 4 workers %s", first.size(), first == second ? "identical" : "differs",
                     first == threaded ? "identical" : "differs")};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_s;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "m2-density oracle equivalence", 10, m2_equivalence},
      {2, "exact Rt fixtures", 60, exact_rt_fixtures},
      {3, "auxiliary hypergraph degree bounds", 300, aux_degree_bounds},
      {4, "cluster process invariants", 0, process_invariants},
      {5, "complete-host extraction", 120, complete_host_extraction},
      {6, "random-graph phase behaviour", 600, random_graph_phase},
      {7, "good-copy counting", 60, good_copy_counting},
      {8, "richness ground truth", 300, richness_ground_truth},
      {9, "clique supersaturation", 0, supersaturation},
      {10, "sweep reproducibility", 0, reproducibility},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("threw: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = c.limit_s <= 0 || secs < c.limit_s;
    const bool pass = out.pass && in_time;
    failed += pass ? 0 : 1;
    std::string timing = format("%.2fs", secs);
    if (c.limit_s > 0) timing += format(" of %.0fs", c.limit_s);
    std::printf("%s criterion %d (%s): %s [%s]\n", pass ? "PASS" : "FAIL", c.id, c.name, out.detail.c_str(),
                timing.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, std::size(criteria));
  return failed == 0 ? 0 : 1;
}
