#include "rtile/adversary.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "matcher_impl.hpp"
#include "rtile/rng.hpp"

namespace rtile {

std::string_view adversary_name(AdversaryKind kind) {
  switch (kind) {
    case AdversaryKind::uniform_random: return "uniform-random";
    case AdversaryKind::planted_partition: return "planted-partition";
    case AdversaryKind::copy_avoider_greedy: return "copy-avoider-greedy";
    case AdversaryKind::majority_degree: return "majority-degree";
  }
  return "unknown";
}

AdversaryKind parse_adversary(std::string_view name) {
  for (AdversaryKind kind : kAllAdversaries)
    if (adversary_name(kind) == name) return kind;
  throw std::invalid_argument("unknown adversary '" + std::string(name) + "'");
}

namespace {

ColouredGraph uniform_random(const Graph& g, const AdversarySpec& spec) {
  if (!(spec.red_probability >= 0.0 && spec.red_probability <= 1.0))
    throw std::invalid_argument("uniform-random: red_probability must lie in [0, 1]");
  std::vector<Colour> colours;
  colours.reserve(g.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    colours.push_back(to_unit_double(SplitMix64::at(spec.seed, i)) < spec.red_probability
                          ? Colour::red
                          : Colour::blue);
  return ColouredGraph(g, colours);
}

ColouredGraph planted_partition(const Graph& g, const AdversarySpec& spec) {
  const std::size_t n = g.order();
  VertexSet part(n);
  if (spec.part) {
    for (Vertex v : *spec.part) {
      if (v >= n) throw std::invalid_argument("planted-partition: part vertex out of range");
      part.insert(v);
    }
  } else {
    if (!(spec.part_fraction >= 0.0 && spec.part_fraction <= 1.0))
      throw std::invalid_argument("planted-partition: part_fraction must lie in [0, 1]");
    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), Vertex{0});
    SplitMix64 rng(spec.seed);
    shuffle(std::span<Vertex>(order), rng);
    const auto size = static_cast<std::size_t>(std::llround(spec.part_fraction * static_cast<double>(n)));
    for (std::size_t i = 0; i < size; ++i) part.insert(order[i]);
  }
  return ColouredGraph::from_function(g, [&](const Edge& e) {
    return part.contains(e.u) && part.contains(e.v) ? Colour::red : Colour::blue;
  });
}

// Colour classes built so far, with the interface the matcher expects.
class PartialColouring {
 public:
  explicit PartialColouring(std::size_t n)
      : red_(n, VertexSet(n)), blue_(n, VertexSet(n)), red_degree_(n, 0), blue_degree_(n, 0) {}

  std::size_t order() const { return red_.size(); }
  const VertexSet& neighbours(Vertex v, Colour c) const {
    return c == Colour::red ? red_[v] : blue_[v];
  }
  std::size_t degree(Vertex v, Colour c) const {
    return c == Colour::red ? red_degree_[v] : blue_degree_[v];
  }
  void assign(const Edge& e, Colour c) {
    auto& adj = c == Colour::red ? red_ : blue_;
    auto& deg = c == Colour::red ? red_degree_ : blue_degree_;
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
    ++deg[e.u];
    ++deg[e.v];
  }

 private:
  std::vector<VertexSet> red_;
  std::vector<VertexSet> blue_;
  std::vector<std::size_t> red_degree_;
  std::vector<std::size_t> blue_degree_;
};

ColouredGraph copy_avoider_greedy(const Graph& g, const AdversarySpec& spec) {
  const PatternStats h = spec.pattern ? *spec.pattern : named_pattern("k3");
  const std::size_t n = g.order();
  std::vector<std::size_t> order(g.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  SplitMix64 rng(spec.seed);
  shuffle(std::span<std::size_t>(order), rng);

  // One plan per pattern edge, with that edge's endpoints placed first.
  std::vector<detail::SearchPlan> plans;
  for (const Edge& e : h.graph().edges()) {
    const Vertex prefix[2] = {e.u, e.v};
    plans.push_back(detail::make_plan(h.graph(), prefix));
  }

  PartialColouring partial(n);
  std::vector<Colour> colours(g.size(), Colour::red);
  const CopyQuery query;
  // Labelled copies of colour c through e once e gets colour c: every such
  // copy maps exactly one pattern edge onto e, in one of two orientations.
  auto closed = [&](const Edge& e, Colour c) {
    std::uint64_t count = 0;
    if (h.k() > n) return count;
    for (const auto& plan : plans)
      for (auto [a, b] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        detail::Matcher<PartialColouring> matcher(partial, plan, c, query, nullptr);
        matcher.pin_first_edge(a, b);
        matcher.run([&](std::span<const Vertex>) {
          ++count;
          return true;
        });
      }
    return count;
  };

  const auto edges = g.edges();
  for (std::size_t index : order) {
    const Edge& e = edges[index];
    Colour chosen;
    if (plans.empty()) {
      chosen = rng.coin() ? Colour::red : Colour::blue;
    } else {
      const std::uint64_t red = closed(e, Colour::red);
      const std::uint64_t blue = closed(e, Colour::blue);
      if (red != blue)
        chosen = red < blue ? Colour::red : Colour::blue;
      else
        chosen = rng.coin() ? Colour::red : Colour::blue;
    }
    colours[index] = chosen;
    partial.assign(e, chosen);
  }
  return ColouredGraph(g, colours);
}

ColouredGraph majority_degree(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> sorted(n);
  for (Vertex v = 0; v < n; ++v) sorted[v] = g.degree(v);
  std::sort(sorted.begin(), sorted.end());
  const std::size_t median = n ? sorted[n / 2] : 0;
  // Endpoints of equal degree share a class, so no tie-break is needed.
  return ColouredGraph::from_function(g, [&](const Edge& e) {
    const Vertex lead = g.degree(e.v) > g.degree(e.u) ? e.v : e.u;
    return g.degree(lead) >= median ? Colour::red : Colour::blue;
  });
}

}  // namespace

ColouredGraph colour_with(const Graph& g, const AdversarySpec& spec) {
  switch (spec.kind) {
    case AdversaryKind::uniform_random: return uniform_random(g, spec);
    case AdversaryKind::planted_partition: return planted_partition(g, spec);
    case AdversaryKind::copy_avoider_greedy: return copy_avoider_greedy(g, spec);
    case AdversaryKind::majority_degree: return majority_degree(g);
  }
  throw std::invalid_argument("colour_with: unknown adversary");
}

}  // namespace rtile
