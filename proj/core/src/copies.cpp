#include "rtile/copies.hpp"

#include <cmath>
#include <stdexcept>

#include "matcher_impl.hpp"

namespace rtile {
namespace {

std::optional<EmbeddedCopy> find_in_colour(const ColouredGraph& g, const PatternStats& h, Colour c,
                                           const CopyQuery& query, SearchStats* stats) {
  std::optional<EmbeddedCopy> found;
  auto take_first = [&](std::span<const Vertex> labelled) {
    found = EmbeddedCopy{{labelled.begin(), labelled.end()}, c};
    return false;
  };
  const Graph& pattern = h.graph();
  const VertexSet* hits = query.hit_set;
  const std::size_t allowed_size = query.allowed ? query.allowed->size() : g.order();
  // With a hit requirement and a small hit set, some pattern vertex must land
  // in the hit set, so try each pattern vertex as a root restricted to it.
  if (hits && query.min_hits > 0 && hits->size() * 2 < allowed_size) {
    for (Vertex root = 0; root < pattern.order() && !found; ++root) {
      const Vertex prefix[] = {root};
      const auto plan = detail::make_plan(pattern, prefix);
      detail::Matcher<ColouredGraph> matcher(g, plan, c, query, stats);
      matcher.set_roots(hits);
      matcher.run(take_first);
      if (stats && stats->truncated) break;
    }
    return found;
  }
  const auto plan = detail::make_plan(pattern, {});
  detail::Matcher<ColouredGraph> matcher(g, plan, c, query, stats);
  matcher.run(take_first);
  return found;
}

}  // namespace

std::optional<EmbeddedCopy> find_copy(const ColouredGraph& g, const PatternStats& h,
                                      const CopyQuery& query, SearchStats* stats) {
  if (query.colour) return find_in_colour(g, h, *query.colour, query, stats);
  if (auto red = find_in_colour(g, h, Colour::red, query, stats)) return red;
  if (stats && stats->truncated) return std::nullopt;
  return find_in_colour(g, h, Colour::blue, query, stats);
}

std::optional<EmbeddedCopy> find_mono_copy(const ColouredGraph& g, const PatternStats& h,
                                           const VertexSet& allowed,
                                           std::optional<Colour> colour_filter) {
  CopyQuery query;
  query.allowed = &allowed;
  query.colour = colour_filter;
  return find_copy(g, h, query);
}

bool for_each_embedding(const ColouredGraph& g, const PatternStats& h, Colour c,
                        const CopyQuery& query, const EmbeddingVisitor& visit,
                        SearchStats* stats) {
  const auto plan = detail::make_plan(h.graph(), {});
  detail::Matcher<ColouredGraph> matcher(g, plan, c, query, stats);
  return matcher.run([&](std::span<const Vertex> labelled) { return visit(labelled); });
}

std::uint64_t count_mono_copies(const ColouredGraph& g, const PatternStats& h, Colour c,
                                double budget) {
  return count_mono_copies(g, h, c, VertexSet::full(g.order()), budget);
}

std::uint64_t count_mono_copies(const ColouredGraph& g, const PatternStats& h, Colour c,
                                const VertexSet& allowed, double budget) {
  const double estimate =
      std::pow(static_cast<double>(allowed.size()), static_cast<double>(h.k()));
  if (estimate > budget) throw BudgetExceeded("count_mono_copies", estimate, budget);
  if (h.automorphism_count() == 0)
    throw std::invalid_argument("count_mono_copies: pattern too large for automorphism count");
  CopyQuery query;
  query.allowed = &allowed;
  std::uint64_t labelled = 0;
  for_each_embedding(g, h, c, query, [&](std::span<const Vertex>) {
    ++labelled;
    return true;
  });
  return labelled / h.automorphism_count();
}

bool is_valid_copy(const ColouredGraph& g, const PatternStats& h, const EmbeddedCopy& copy) {
  if (copy.vertex_map.size() != h.k()) return false;
  VertexSet seen(g.order());
  for (Vertex v : copy.vertex_map) {
    if (v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
  }
  std::optional<Colour> common;
  bool mixed = false;
  for (const Edge& e : h.graph().edges()) {
    const Vertex a = copy.vertex_map[e.u];
    const Vertex b = copy.vertex_map[e.v];
    if (!g.graph().has_edge(a, b)) return false;
    const Colour c = g.colour(a, b);
    if (common && *common != c) mixed = true;
    common = c;
  }
  if (mixed) return !copy.colour.has_value();
  // Edgeless patterns are monochromatic in either colour.
  if (!common) return copy.colour.has_value();
  return copy.colour == common;
}

}  // namespace rtile
