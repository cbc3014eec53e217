#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "rtile/copies.hpp"
#include "rtile/graph.hpp"
#include "rtile/graph_io.hpp"
#include "rtile/pattern.hpp"
#include "rtile/rng.hpp"
#include "rtile/sampling.hpp"
#include "rtile/vertex_set.hpp"
#include "support/naive.hpp"

using namespace rtile;

namespace {

ColouredGraph all_red(std::size_t n) { return ColouredGraph::monochromatic(Graph::complete(n), Colour::red); }

}  // namespace

TEST(VertexSet, BasicOperations) {
  VertexSet a(130, {0, 5, 64, 129});
  VertexSet b(130, {5, 64, 100});
  EXPECT_EQ(a.size(), 4u);
  EXPECT_TRUE(a.contains(129));
  EXPECT_FALSE(a.contains(130));
  EXPECT_EQ((a & b).size(), 2u);
  EXPECT_EQ((a | b).size(), 5u);
  EXPECT_EQ((a - b).to_vector(), (std::vector<Vertex>{0, 129}));
  EXPECT_EQ(a.complement().size(), 126u);
  EXPECT_EQ(VertexSet::full(130).size(), 130u);
  EXPECT_TRUE((a & b).is_subset_of(a));
  EXPECT_EQ(a.count_common(b), 2u);
  std::vector<Vertex> seen(a.begin(), a.end());
  EXPECT_EQ(seen, a.to_vector());
}

TEST(Rng, SplitMixCounterMatchesStream) {
  SplitMix64 rng(42);
  for (std::uint64_t i = 0; i < 16; ++i) EXPECT_EQ(rng.next(), SplitMix64::at(42, i));
  SplitMix64 b(9);
  for (int i = 0; i < 1000; ++i) EXPECT_LT(b.below(7), 7u);
  EXPECT_NE(derive_seed({1, 2}), derive_seed({2, 1}));
}

TEST(Graph, RejectsMalformedEdges) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(0, 0), std::invalid_argument);
  EXPECT_THROW(g.add_edge(0, 3), std::invalid_argument);
  g.add_edge(0, 1);
  EXPECT_THROW(g.add_edge(1, 0), std::invalid_argument);
  EXPECT_EQ(Graph::complete(6).size(), 15u);
  EXPECT_EQ(Graph::complete(6).complement().size(), 0u);
}

TEST(Graph, ColouringMustBeTotal) {
  const Graph g = Graph::complete(3);
  std::vector<Colour> two(2, Colour::red);
  EXPECT_THROW(ColouredGraph(g, two), std::invalid_argument);
  const ColouredGraph c = all_red(4);
  EXPECT_EQ(c.edge_count(Colour::red), 6u);
  EXPECT_EQ(c.swapped().edge_count(Colour::blue), 6u);
}

TEST(GraphIo, RoundTripAndSortedOutput) {
  Graph g(4);
  g.add_edge(2, 3);
  g.add_edge(0, 1);
  const std::string text = format_graph(g);
  EXPECT_EQ(text, "4 2\n0 1\n2 3\n");
  EXPECT_EQ(format_graph(parse_graph(text)), text);
  const ColouredGraph c = parse_coloured_graph("3 3\n0 1 r\n0 2 b\n1 2 r\n");
  EXPECT_EQ(c.colour(0, 2), Colour::blue);
  EXPECT_EQ(format_coloured_graph(c), "3 3\n0 1 r\n0 2 b\n1 2 r\n");
  EXPECT_THROW(parse_graph("3 2\n0 1\n"), std::invalid_argument);
  EXPECT_THROW(parse_coloured_graph("2 1\n0 1 g\n"), std::invalid_argument);
}

TEST(Sampling, Extremes) {
  EXPECT_EQ(sample_gnp(5, 0.0, 1).size(), 0u);
  EXPECT_EQ(sample_gnp(5, 1.0, 1).size(), 10u);
  EXPECT_THROW(sample_gnp(5, 1.5, 1), std::invalid_argument);
  EXPECT_THROW(sample_gnp(5, -0.1, 1), std::invalid_argument);
}

TEST(Sampling, EdgeCountWithinFourSigma) {
  const double mean = 249750.0;
  const double sigma = std::sqrt(499500.0 * 0.25);
  for (std::uint64_t seed : {7, 8, 9}) {
    const auto m = static_cast<double>(sample_gnp(1000, 0.5, seed).size());
    EXPECT_LT(std::abs(m - mean), 4 * sigma) << "seed " << seed;
  }
}

TEST(Sampling, Reproducible) {
  const Graph a = sample_gnp(200, 0.1, 123);
  const Graph b = sample_gnp(200, 0.1, 123);
  EXPECT_EQ(a.sorted_edges(), b.sorted_edges());
  EXPECT_NE(a.sorted_edges(), sample_gnp(200, 0.1, 124).sorted_edges());
}

TEST(Sampling, ThresholdProbabilityClamped) {
  const PatternStats k3 = named_pattern("k3");
  EXPECT_NEAR(threshold_probability(300, 5.0, k3), 5.0 / std::sqrt(300.0), 1e-12);
  EXPECT_DOUBLE_EQ(threshold_probability(4, 100.0, k3), 1.0);
}

TEST(Pattern, M2FixedPoints) {
  EXPECT_EQ(m2_density(complete_graph(2)), Rational(1, 2));
  EXPECT_EQ(m2_density(complete_graph(3)), Rational(2, 1));
  EXPECT_EQ(m2_density(complete_graph(4)), Rational(5, 2));
  EXPECT_EQ(m2_density(path_graph(4)), Rational(1, 1));
  EXPECT_EQ(m2_density(matching_graph(2)), Rational(1, 2));
}

TEST(Pattern, M2MatchesNaiveUpToFiveVertices) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (const Graph& h : naive::all_graphs(n)) EXPECT_EQ(m2_density(h), naive::m2(h)) << format_graph(h);
}

TEST(Pattern, M2AtLeastOneIffNotMatching) {
  for (std::size_t n = 1; n <= 6; ++n)
    for (const Graph& h : naive::all_graphs(n)) {
      bool matching = true;
      for (Vertex v = 0; v < n; ++v) matching = matching && h.degree(v) <= 1;
      EXPECT_EQ(m2_density(h) >= Rational(1, 1), !matching) << format_graph(h);
    }
}

TEST(Pattern, IndependenceNumber) {
  EXPECT_EQ(independence_number(complete_graph(3)), 1u);
  EXPECT_EQ(independence_number(Graph(4)), 4u);
  EXPECT_EQ(independence_number(path_graph(4)), 2u);
  EXPECT_EQ(independence_number(cycle_graph(5)), 2u);
  EXPECT_THROW(independence_number(Graph(21)), std::invalid_argument);
}

TEST(Pattern, IndependenceMatchesNaiveOnRandomGraphs) {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const std::size_t n = 1 + seed % 8;
    const Graph g = sample_gnp(n, 0.1 + 0.2 * static_cast<double>(seed % 4), seed);
    EXPECT_EQ(independence_number(g), naive::independence(g)) << format_graph(g);
  }
}

TEST(Pattern, Stats) {
  const PatternStats k4 = named_pattern("k4");
  EXPECT_EQ(k4.k(), 4u);
  EXPECT_EQ(k4.alpha(), 1u);
  EXPECT_EQ(k4.ell(), 6u);
  EXPECT_EQ(k4.tiling_denominator(), 7u);
  EXPECT_EQ(named_pattern("matching-3").ell(), 3u);
  EXPECT_EQ(named_pattern("c5").alpha(), 2u);
  EXPECT_THROW(named_pattern("nonsense-graph"), std::invalid_argument);
  EXPECT_EQ(count_automorphisms(complete_graph(4)), 24u);
}

TEST(Copies, FindMonoCopy) {
  const PatternStats k3 = named_pattern("k3");
  const ColouredGraph k5 = all_red(5);
  const VertexSet all = VertexSet::full(5);
  const auto red = find_mono_copy(k5, k3, all, Colour::red);
  ASSERT_TRUE(red.has_value());
  EXPECT_TRUE(is_valid_copy(k5, k3, *red));
  EXPECT_FALSE(find_mono_copy(k5, k3, all, Colour::blue).has_value());

  const Graph c5 = cycle_graph(5);
  for (std::uint64_t mask = 0; mask < 32; ++mask)
    EXPECT_FALSE(find_mono_copy(naive::colour_by_mask(c5, mask), k3, VertexSet::full(5)).has_value());
}

TEST(Copies, CountMonoCopies) {
  const PatternStats k3 = named_pattern("k3");
  EXPECT_EQ(count_mono_copies(all_red(4), k3, Colour::red), 4u);
  EXPECT_EQ(count_mono_copies(all_red(4), k3, Colour::blue), 0u);
  EXPECT_EQ(count_mono_copies(all_red(6), k3, Colour::red), 20u);
  EXPECT_EQ(count_mono_copies(all_red(6), named_pattern("c4"), Colour::red), 45u);
  EXPECT_THROW(count_mono_copies(all_red(40), named_pattern("k5"), Colour::red, 1e6), BudgetExceeded);
}

TEST(Copies, FindAgreesWithCountOnAllK5Colourings) {
  const Graph k5 = Graph::complete(5);
  for (const char* name : {"k3", "p3", "c4"}) {
    const PatternStats h = named_pattern(name);
    for (std::uint64_t mask = 0; mask < 1024; ++mask) {
      const ColouredGraph g = naive::colour_by_mask(k5, mask);
      for (std::uint64_t sub = 0; sub < 32; sub += 3) {
        VertexSet allowed(5);
        for (Vertex v = 0; v < 5; ++v)
          if (!((sub >> v) & 1U)) allowed.insert(v);
        for (Colour c : {Colour::red, Colour::blue}) {
          const bool found = find_mono_copy(g, h, allowed, c).has_value();
          EXPECT_EQ(found, count_mono_copies(g, h, c, allowed) > 0) << name << " mask " << mask;
        }
      }
    }
  }
}

TEST(Copies, FindCopyHonoursHitConstraint) {
  const PatternStats k3 = named_pattern("k3");
  const ColouredGraph g = all_red(6);
  const VertexSet hit(6, {4, 5});
  CopyQuery q;
  q.hit_set = &hit;
  q.min_hits = 2;
  q.colour = Colour::red;
  const auto copy = find_copy(g, k3, q);
  ASSERT_TRUE(copy.has_value());
  EXPECT_EQ(copy->hits(hit), 2u);
  q.min_hits = 3;
  EXPECT_FALSE(find_copy(g, k3, q).has_value());
}
