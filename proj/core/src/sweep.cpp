#include "rtile/sweep.hpp"

#include <atomic>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <thread>

#include "json.hpp"
#include "rtile/errors.hpp"
#include "rtile/extraction.hpp"
#include "rtile/rng.hpp"
#include "rtile/sampling.hpp"

namespace rtile {

void SweepPlan::validate() const {
  if (trials < 1) throw std::invalid_argument("sweep: trials must be at least 1");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("sweep: epsilon must lie in (0, 1)");
  for (std::size_t n : n_list)
    if (n < 1) throw std::invalid_argument("sweep: every n must be at least 1");
  for (double c : c_list)
    if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("sweep: every C must be positive");
  if (workers < 1) throw std::invalid_argument("sweep: workers must be at least 1");
}

std::uint64_t trial_seed(std::uint64_t seed_base, std::size_t n, double c, AdversaryKind adversary,
                         std::size_t trial) {
  return derive_seed({seed_base, n, std::bit_cast<std::uint64_t>(c),
                      static_cast<std::uint64_t>(adversary), trial});
}

long long success_threshold(double target) {
  return static_cast<long long>(std::floor(target + 1e-9));
}

std::pair<double, double> wilson_interval(std::size_t successes, std::size_t trials, double z) {
  if (trials == 0) return {0.0, 1.0};
  const double nn = static_cast<double>(trials);
  const double phat = static_cast<double>(successes) / nn;
  const double z2 = z * z;
  const double centre = (phat + z2 / (2 * nn)) / (1 + z2 / nn);
  const double half = z * std::sqrt(phat * (1 - phat) / nn + z2 / (4 * nn * nn)) / (1 + z2 / nn);
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

SweepRow run_trial(const SweepPlan& plan, std::size_t n, double c, AdversaryKind adversary,
                   std::size_t trial) {
  SweepRow row;
  row.n = n;
  row.c = c;
  row.adversary = adversary;
  row.trial = trial;
  row.seed = trial_seed(plan.seed_base, n, c, adversary, trial);
  row.p = threshold_probability(n, c, plan.pattern);
  row.target = static_cast<double>(n) / static_cast<double>(plan.pattern.tiling_denominator()) -
               plan.epsilon * static_cast<double>(n);
  const auto start = std::chrono::steady_clock::now();
  try {
    const Graph g = sample_gnp(n, row.p, derive_seed({row.seed, 1}));
    row.edges = g.size();
    AdversarySpec spec;
    spec.kind = adversary;
    spec.seed = derive_seed({row.seed, 2});
    spec.pattern = plan.pattern;
    const ColouredGraph coloured = colour_with(g, spec);
    ExtractionOptions options;
    options.epsilon = plan.epsilon;
    options.seed = derive_seed({row.seed, 3});
    options.budget = plan.extraction_budget;
    const ExtractionResult result = extract_tiling(coloured, plan.pattern, options);
    row.achieved = result.report.achieved_size;
    row.probe_failures = result.report.probe_failures;
    row.success = static_cast<long long>(row.achieved) >= success_threshold(row.target);
  } catch (const std::exception& e) {
    row.error = e.what();
    row.success = false;
  }
  if (plan.record_time)
    row.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return row;
}

std::vector<CellAggregate> aggregate_rows(const std::vector<SweepRow>& rows) {
  std::vector<CellAggregate> out;
  for (const auto& row : rows) {
    if (out.empty() || out.back().n != row.n || out.back().c != row.c ||
        out.back().adversary != row.adversary)
      out.push_back(CellAggregate{row.n, row.c, row.adversary});
    ++out.back().trials;
    out.back().successes += row.success ? 1 : 0;
  }
  for (auto& cell : out) {
    cell.frequency = static_cast<double>(cell.successes) / static_cast<double>(cell.trials);
    std::tie(cell.wilson_low, cell.wilson_high) = wilson_interval(cell.successes, cell.trials);
  }
  return out;
}

SweepResult run_sweep(const SweepPlan& plan) {
  plan.validate();
  double work = 0.0;
  for (std::size_t n : plan.n_list)
    work += static_cast<double>(n) * static_cast<double>(n) * static_cast<double>(plan.trials) *
            static_cast<double>(plan.c_list.size() * plan.adversaries.size());
  if (work > plan.work_budget) throw BudgetExceeded("sweep", work, plan.work_budget);

  struct Task {
    std::size_t n;
    double c;
    AdversaryKind adversary;
    std::size_t trial;
  };
  std::vector<Task> tasks;
  for (std::size_t n : plan.n_list)
    for (double c : plan.c_list)
      for (AdversaryKind a : plan.adversaries)
        for (std::size_t t = 0; t < plan.trials; ++t) tasks.push_back({n, c, a, t});

  SweepResult result;
  result.rows.resize(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++)
      result.rows[i] = run_trial(plan, tasks[i].n, tasks[i].c, tasks[i].adversary, tasks[i].trial);
  };
  const std::size_t threads = std::min(plan.workers, std::max<std::size_t>(tasks.size(), 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  result.aggregates = aggregate_rows(result.rows);
  return result;
}

namespace {

std::string fmt(const char* spec, double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, spec, value);
  return buffer;
}

// Errors go in a quoted field; quotes are doubled.
std::string csv_quote(const std::string& text) {
  if (text.empty()) return text;
  std::string out = "\"";
  for (char ch : text) {
    if (ch == '"') out += '"';
    out += ch == '\n' ? ' ' : ch;
  }
  return out + "\"";
}

}  // namespace

std::string sweep_to_csv(const SweepResult& result, bool with_time) {
  std::string out = "# rtile sweep schema " + std::to_string(kSweepSchemaVersion) + "\n";
  out += "n,C,p,adversary,trial,seed,edges,achieved,target,success,probe_failures,error";
  if (with_time) out += ",wall_ms";
  out += "\n";
  for (const auto& r : result.rows) {
    out += std::to_string(r.n) + "," + fmt("%.9g", r.c) + "," + fmt("%.9g", r.p) + "," +
           std::string(adversary_name(r.adversary)) + "," + std::to_string(r.trial) + "," +
           std::to_string(r.seed) + "," + std::to_string(r.edges) + "," +
           std::to_string(r.achieved) + "," + fmt("%.6f", r.target) + "," +
           (r.success ? "1" : "0") + "," + std::to_string(r.probe_failures) + "," +
           csv_quote(r.error);
    if (with_time) out += "," + fmt("%.3f", r.wall_ms);
    out += "\n";
  }
  for (const auto& a : result.aggregates) {
    out += "# aggregate n=" + std::to_string(a.n) + " C=" + fmt("%.9g", a.c) +
           " adversary=" + std::string(adversary_name(a.adversary)) +
           " trials=" + std::to_string(a.trials) + " successes=" + std::to_string(a.successes) +
           " frequency=" + fmt("%.6f", a.frequency) + " wilson95=[" + fmt("%.6f", a.wilson_low) +
           "," + fmt("%.6f", a.wilson_high) + "]\n";
  }
  return out;
}

std::string sweep_to_json(const SweepResult& result, bool with_time) {
  nlohmann::ordered_json j;
  j["schema"] = kSweepSchemaVersion;
  j["rows"] = nlohmann::ordered_json::array();
  for (const auto& r : result.rows) {
    nlohmann::ordered_json row;
    row["n"] = r.n;
    row["C"] = r.c;
    row["p"] = r.p;
    row["adversary"] = std::string(adversary_name(r.adversary));
    row["trial"] = r.trial;
    row["seed"] = r.seed;
    row["edges"] = r.edges;
    row["achieved"] = r.achieved;
    row["target"] = r.target;
    row["success"] = r.success;
    row["probe_failures"] = r.probe_failures;
    if (!r.error.empty()) row["error"] = r.error;
    if (with_time) row["wall_ms"] = r.wall_ms;
    j["rows"].push_back(std::move(row));
  }
  j["aggregates"] = nlohmann::ordered_json::array();
  for (const auto& a : result.aggregates) {
    nlohmann::ordered_json cell;
    cell["n"] = a.n;
    cell["C"] = a.c;
    cell["adversary"] = std::string(adversary_name(a.adversary));
    cell["trials"] = a.trials;
    cell["successes"] = a.successes;
    cell["frequency"] = a.frequency;
    cell["wilson95"] = {a.wilson_low, a.wilson_high};
    j["aggregates"].push_back(std::move(cell));
  }
  return j.dump(2) + "\n";
}

}  // namespace rtile
