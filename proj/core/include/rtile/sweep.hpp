#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rtile/adversary.hpp"
#include "rtile/pattern.hpp"

namespace rtile {

inline constexpr int kSweepSchemaVersion = 1;

struct SweepPlan {
  PatternStats pattern;
  std::vector<std::size_t> n_list;
  std::vector<double> c_list;
  double epsilon = 0.1;
  std::size_t trials = 1;
  std::uint64_t seed_base = 0;
  std::vector<AdversaryKind> adversaries;
  /// Ceiling on sum over trials of n^2 (the sweep refuses larger plans).
  double work_budget = 1e12;
  /// Attempt budget handed to each extraction.
  std::uint64_t extraction_budget = 100000;
  std::size_t workers = 1;
  /// Adds a wall_ms column; off by default so output is reproducible.
  bool record_time = false;

  /// Throws std::invalid_argument on an invalid plan.
  void validate() const;
  std::size_t cells() const { return n_list.size() * c_list.size() * adversaries.size(); }
};

struct SweepRow {
  std::size_t n = 0;
  double c = 0.0;
  double p = 0.0;
  AdversaryKind adversary = AdversaryKind::uniform_random;
  std::size_t trial = 0;
  std::uint64_t seed = 0;
  std::size_t edges = 0;
  std::size_t achieved = 0;
  double target = 0.0;
  bool success = false;
  std::size_t probe_failures = 0;
  /// Empty unless the trial threw; such rows count as failures.
  std::string error;
  double wall_ms = 0.0;
};

struct CellAggregate {
  std::size_t n = 0;
  double c = 0.0;
  AdversaryKind adversary = AdversaryKind::uniform_random;
  std::size_t trials = 0;
  std::size_t successes = 0;
  double frequency = 0.0;
  double wilson_low = 0.0;
  double wilson_high = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;  // cell order (n, then C, then adversary), then trial
  std::vector<CellAggregate> aggregates;
};

/// hash(seed_base, n, C, adversary, trial).
std::uint64_t trial_seed(std::uint64_t seed_base, std::size_t n, double c, AdversaryKind adversary,
                         std::size_t trial);

/// Smallest tiling size counted as success: floor(target), with a 1e-9
/// allowance for round-off in n/(2k - alpha) - epsilon n.
long long success_threshold(double target);

/// 95% Wilson score interval for `successes` out of `trials`.
std::pair<double, double> wilson_interval(std::size_t successes, std::size_t trials,
                                          double z = 1.959963984540054);

/// One trial: sample G(n, p), colour it, extract, and score.
SweepRow run_trial(const SweepPlan& plan, std::size_t n, double c, AdversaryKind adversary,
                   std::size_t trial);

/// Runs every (cell, trial) on up to plan.workers threads. Throws
/// BudgetExceeded when the plan's work estimate exceeds plan.work_budget.
SweepResult run_sweep(const SweepPlan& plan);

std::vector<CellAggregate> aggregate_rows(const std::vector<SweepRow>& rows);

/// CSV with a '#' schema line, a column header, one row per trial and the
/// per-cell aggregates as trailing '#' lines.
std::string sweep_to_csv(const SweepResult& result, bool with_time);
std::string sweep_to_json(const SweepResult& result, bool with_time);

}  // namespace rtile
