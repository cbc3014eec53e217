#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "rtile/adversary.hpp"
#include "rtile/copies.hpp"
#include "rtile/fixtures.hpp"
#include "rtile/pattern.hpp"
#include "rtile/sampling.hpp"
#include "rtile/sweep.hpp"

using namespace rtile;

namespace {

std::filesystem::path scratch_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("rtile_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

SweepPlan small_plan() {
  SweepPlan plan;
  plan.pattern = named_pattern("k3");
  plan.n_list = {30, 45};
  plan.c_list = {0.5, 3.0};
  plan.epsilon = 0.15;
  plan.trials = 3;
  plan.seed_base = 17;
  plan.adversaries.assign(std::begin(kAllAdversaries), std::end(kAllAdversaries));
  return plan;
}

}  // namespace

TEST(Adversary, NamesRoundTrip) {
  for (AdversaryKind k : kAllAdversaries) EXPECT_EQ(parse_adversary(adversary_name(k)), k);
  EXPECT_THROW(parse_adversary("nope"), std::invalid_argument);
}

TEST(Adversary, DeterministicAndTotal) {
  const Graph g = sample_gnp(60, 0.3, 2);
  for (AdversaryKind k : kAllAdversaries) {
    AdversarySpec spec;
    spec.kind = k;
    spec.seed = 8;
    const ColouredGraph a = colour_with(g, spec);
    const ColouredGraph b = colour_with(g, spec);
    EXPECT_EQ(a.colours(), b.colours()) << adversary_name(k);
    EXPECT_EQ(a.colours().size(), g.size());
  }
}

TEST(Adversary, PlantedPartitionColours) {
  AdversarySpec spec;
  spec.kind = AdversaryKind::planted_partition;
  spec.part = std::vector<Vertex>{0, 1, 2};
  const ColouredGraph g = colour_with(Graph::complete(6), spec);
  EXPECT_EQ(g.colour(0, 1), Colour::red);
  EXPECT_EQ(g.colour(0, 4), Colour::blue);
  EXPECT_EQ(g.colour(3, 4), Colour::blue);
  EXPECT_EQ(g.edge_count(Colour::red), 3u);
}

TEST(Adversary, UniformExtremes) {
  AdversarySpec spec;
  spec.red_probability = 1.0;
  EXPECT_EQ(colour_with(Graph::complete(7), spec).edge_count(Colour::blue), 0u);
  spec.red_probability = 0.0;
  EXPECT_EQ(colour_with(Graph::complete(7), spec).edge_count(Colour::red), 0u);
}

TEST(Adversary, CopyAvoiderBeatsRandomOnTriangles) {
  const PatternStats k3 = named_pattern("k3");
  const Graph g = Graph::complete(30);
  AdversarySpec avoid;
  avoid.kind = AdversaryKind::copy_avoider_greedy;
  avoid.seed = 1;
  AdversarySpec random;
  random.seed = 1;
  auto mono = [&](const ColouredGraph& c) {
    return count_mono_copies(c, k3, Colour::red) + count_mono_copies(c, k3, Colour::blue);
  };
  EXPECT_LT(mono(colour_with(g, avoid)), mono(colour_with(g, random)));
}

TEST(Sweep, ThresholdAndWilson) {
  EXPECT_EQ(success_threshold(5.0), 5);
  EXPECT_EQ(success_threshold(4.9999999999), 5);
  EXPECT_EQ(success_threshold(15.4), 15);
  const auto [lo, hi] = wilson_interval(45, 50);
  EXPECT_LT(lo, 0.9);
  EXPECT_GT(hi, 0.9);
  EXPECT_GE(lo, 0.0);
  EXPECT_LE(hi, 1.0);
  const auto [zlo, zhi] = wilson_interval(0, 0);
  EXPECT_EQ(zlo, 0.0);
  EXPECT_EQ(zhi, 1.0);
}

TEST(Sweep, CanonicalOrderAndAggregates) {
  const SweepPlan plan = small_plan();
  const SweepResult r = run_sweep(plan);
  ASSERT_EQ(r.rows.size(), plan.cells() * plan.trials);
  ASSERT_EQ(r.aggregates.size(), plan.cells());
  EXPECT_EQ(r.rows.front().n, 30u);
  EXPECT_EQ(r.rows.back().n, 45u);
  for (const auto& row : r.rows) {
    EXPECT_TRUE(row.error.empty()) << row.error;
    EXPECT_EQ(row.seed, trial_seed(plan.seed_base, row.n, row.c, row.adversary, row.trial));
  }
  std::size_t total = 0;
  for (const auto& a : r.aggregates) total += a.trials;
  EXPECT_EQ(total, r.rows.size());
}

TEST(Sweep, WorkerCountDoesNotChangeOutput) {
  SweepPlan plan = small_plan();
  const std::string one = sweep_to_csv(run_sweep(plan), false);
  plan.workers = 3;
  EXPECT_EQ(sweep_to_csv(run_sweep(plan), false), one);
  EXPECT_EQ(one.rfind("# rtile sweep schema 1\n", 0), 0u);
  EXPECT_EQ(one.find("wall_ms"), std::string::npos);
}

TEST(Sweep, TimingColumnOptIn) {
  SweepPlan plan = small_plan();
  plan.n_list = {20};
  plan.record_time = true;
  const SweepResult r = run_sweep(plan);
  EXPECT_NE(sweep_to_csv(r, true).find(",wall_ms\n"), std::string::npos);
  EXPECT_NE(sweep_to_json(r, true).find("\"wall_ms\""), std::string::npos);
}

TEST(Sweep, RejectsBadPlans) {
  SweepPlan plan = small_plan();
  plan.trials = 0;
  EXPECT_THROW(run_sweep(plan), std::invalid_argument);
  plan = small_plan();
  plan.c_list = {-1.0};
  EXPECT_THROW(run_sweep(plan), std::invalid_argument);
  plan = small_plan();
  plan.work_budget = 100;
  EXPECT_THROW(run_sweep(plan), BudgetExceeded);
}

TEST(Sweep, EmptyPlanGivesHeaderOnly) {
  SweepPlan plan = small_plan();
  plan.n_list.clear();
  const SweepResult r = run_sweep(plan);
  EXPECT_TRUE(r.rows.empty());
  const std::string csv = sweep_to_csv(r, false);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2);
}

TEST(Fixtures, KeysAreStable) {
  const std::string params = R"({"pattern":"3 3\n0 1\n0 2\n1 2\n"})";
  EXPECT_EQ(fixture_key("m2_density", params), fixture_key("m2_density", params));
  EXPECT_NE(fixture_key("m2_density", params), fixture_key("exact_rt", params));
  EXPECT_EQ(evaluate_fixture("m2_density", params), "\"2\"");
  EXPECT_THROW(evaluate_fixture("bogus", params), std::invalid_argument);
}

TEST(Fixtures, WriteReadVerify) {
  const auto dir = scratch_dir("fixtures");
  const auto corpus = default_fixture_corpus();
  EXPECT_GE(corpus.size(), 30u);
  write_fixtures(dir.string(), corpus);
  const auto back = read_fixtures(dir.string());
  EXPECT_EQ(back.size(), corpus.size());
  const FixtureReport ok = verify_fixtures(dir.string());
  EXPECT_TRUE(ok.pass());
  EXPECT_EQ(ok.checked, corpus.size());
}

TEST(Fixtures, DetectsCorruptedValue) {
  const auto dir = scratch_dir("corrupt");
  FixtureEntry e = make_fixture("exact_rt", "Rt(k3,K5)",
                                R"({"pattern":"3 3\n0 1\n0 2\n1 2\n","host":")" +
                                    std::string("5 10\\n0 1\\n0 2\\n0 3\\n0 4\\n1 2\\n1 3\\n1 4\\n2 3\\n2 4\\n3 4\\n") +
                                    R"("})");
  EXPECT_EQ(e.value, "0");
  e.value = "1";
  write_fixtures(dir.string(), {e});
  const FixtureReport r = verify_fixtures(dir.string());
  ASSERT_EQ(r.mismatches.size(), 1u);
  EXPECT_EQ(r.mismatches.front(), e.key);
  EXPECT_FALSE(r.pass());
}

TEST(Fixtures, EmptyDirectoryWarns) {
  const auto dir = scratch_dir("empty");
  const FixtureReport r = verify_fixtures(dir.string());
  EXPECT_TRUE(r.pass());
  EXPECT_EQ(r.checked, 0u);
  EXPECT_EQ(r.warnings.size(), 1u);
  EXPECT_FALSE(verify_fixtures((dir / "missing").string()).pass());
}
