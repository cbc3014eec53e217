#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rtile/errors.hpp"

namespace rtile {

/// One cached oracle result. `params` and `value` hold JSON text.
///
/// Operations and their params:
///   m2_density         {pattern}                      -> "num/den"
///   exact_rt           {pattern, host}                -> integer
///   good_copy_count    {pattern, host (coloured), a, b} -> integer
///   richness_decide    {pattern, host, s}             -> {rich, mode}
///   aux_degree_check   {pattern, n, a}                -> {edges, delta[], pass}
///   clique_count       {host, r}                      -> integer
/// Graphs are stored in the text graph format.
struct FixtureEntry {
  std::string key;
  std::string op;
  std::string label;
  std::string params;
  std::string value;
};

/// op/FNV(host)/FNV(pattern)/FNV(params), hex.
std::string fixture_key(std::string_view op, std::string_view params_json);

/// Runs the oracle named by `op` on `params_json`; returns the value as
/// compact JSON. Throws std::invalid_argument on an unknown op.
std::string evaluate_fixture(std::string_view op, std::string_view params_json,
                             double budget = kDefaultBudget);

FixtureEntry make_fixture(std::string op, std::string label, std::string params_json,
                          double budget = kDefaultBudget);

/// The shipped regression corpus, freshly computed.
std::vector<FixtureEntry> default_fixture_corpus(double budget = kDefaultBudget);

/// One pretty-printed JSON file per entry, named after its key.
void write_fixtures(const std::string& dir, const std::vector<FixtureEntry>& entries);
/// Every *.json file in `dir`, in file-name order.
std::vector<FixtureEntry> read_fixtures(const std::string& dir);

struct FixtureReport {
  std::size_t checked = 0;
  std::vector<std::string> mismatches;  // keys whose recomputed value differs
  std::vector<std::string> errors;      // "key: message" for unreadable or failing entries
  std::vector<std::string> warnings;

  bool pass() const { return mismatches.empty() && errors.empty(); }
};

FixtureReport verify_fixtures(const std::string& dir, double budget = kDefaultBudget);

}  // namespace rtile
