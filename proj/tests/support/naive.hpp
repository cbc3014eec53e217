#pragma once

// Slow reference implementations used only by the tests. None of them share
// code with the library beyond the Graph container.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

#include "rtile/graph.hpp"
#include "rtile/pattern.hpp"
#include "rtile/tiling.hpp"

namespace naive {

using rtile::Colour;
using rtile::ColouredGraph;
using rtile::Edge;
using rtile::Graph;
using rtile::Rational;
using rtile::Vertex;

/// max (e(F)-1)/(v(F)-2) over all edge subsets F spanning >= 3 vertices; 1/2
/// when H has fewer than two edges.
inline Rational m2(const Graph& h) {
  const auto edges = h.sorted_edges();
  if (edges.size() < 2) return Rational(1, 2);
  Rational best(1, 2);
  const std::uint64_t subsets = std::uint64_t{1} << edges.size();
  for (std::uint64_t mask = 1; mask < subsets; ++mask) {
    std::set<Vertex> span;
    std::int64_t e = 0;
    for (std::size_t i = 0; i < edges.size(); ++i)
      if ((mask >> i) & 1U) {
        span.insert(edges[i].u);
        span.insert(edges[i].v);
        ++e;
      }
    const auto v = static_cast<std::int64_t>(span.size());
    if (v < 3) continue;
    best = std::max(best, Rational(e - 1, v - 2));
  }
  return best;
}

/// Largest vertex subset with no internal edge, by trying every subset.
inline std::size_t independence(const Graph& h) {
  const std::size_t n = h.order();
  std::size_t best = 0;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool ok = true;
    for (const Edge& e : h.edges())
      if (((mask >> e.u) & 1U) && ((mask >> e.v) & 1U)) {
        ok = false;
        break;
      }
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcountll(mask)));
  }
  return best;
}

/// Graph on n vertices from a bitmask over the lexicographic pairs.
inline Graph from_mask(std::size_t n, std::uint64_t mask) {
  Graph g(n);
  std::size_t bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1U) g.add_edge(u, v);
  return g;
}

/// One representative per isomorphism class of graphs on exactly n vertices
/// (minimum mask over all n! relabellings).
inline std::vector<Graph> all_graphs(std::size_t n) {
  const std::size_t pairs = n * (n - 1) / 2;
  std::set<std::uint64_t> canon;
  std::vector<Vertex> perm(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
    const Graph g = from_mask(n, mask);
    std::iota(perm.begin(), perm.end(), Vertex{0});
    std::uint64_t best = ~std::uint64_t{0};
    do {
      std::uint64_t code = 0;
      std::size_t bit = 0;
      for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v, ++bit)
          if (g.has_edge(perm[u], perm[v])) code |= std::uint64_t{1} << bit;
      best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    canon.insert(best);
  }
  std::vector<Graph> out;
  for (auto code : canon) out.push_back(from_mask(n, code));
  return out;
}

/// Re-checks a tiling from raw edge data: vertex-disjoint, every pattern edge
/// mapped onto a host edge of the tiling colour, injective maps.
inline bool tiling_ok(const ColouredGraph& g, const Graph& h, const rtile::Tiling& t) {
  std::set<Vertex> used;
  for (const auto& copy : t.copies) {
    if (copy.vertex_map.size() != h.order()) return false;
    std::set<Vertex> image(copy.vertex_map.begin(), copy.vertex_map.end());
    if (image.size() != h.order()) return false;
    for (Vertex v : image) {
      if (v >= g.order() || !used.insert(v).second) return false;
    }
    for (const Edge& e : h.edges()) {
      const Vertex a = copy.vertex_map[e.u];
      const Vertex b = copy.vertex_map[e.v];
      if (!g.graph().has_edge(a, b) || g.colour(a, b) != t.colour) return false;
    }
  }
  return true;
}

/// Colouring of `g` whose i-th edge is red iff bit i of `mask` is set.
inline ColouredGraph colour_by_mask(const Graph& g, std::uint64_t mask) {
  std::vector<Colour> colours(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) colours[i] = ((mask >> i) & 1U) ? Colour::red : Colour::blue;
  return ColouredGraph(g, colours);
}

/// Monochromatic triangles of colour c as sorted vertex triples.
inline std::vector<std::array<Vertex, 3>> mono_triangles(const ColouredGraph& g, Colour c) {
  std::vector<std::array<Vertex, 3>> out;
  const std::size_t n = g.order();
  auto has = [&](Vertex a, Vertex b) { return g.graph().has_edge(a, b) && g.colour(a, b) == c; };
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      for (Vertex d = b + 1; d < n; ++d)
        if (has(a, b) && has(a, d) && has(b, d)) out.push_back({a, b, d});
  return out;
}

/// Double loop over red and blue triangles looking for a shared vertex.
inline bool has_bowtie(const ColouredGraph& g) {
  for (const auto& r : mono_triangles(g, Colour::red))
    for (const auto& b : mono_triangles(g, Colour::blue)) {
      std::size_t common = 0;
      for (Vertex x : r) common += std::count(b.begin(), b.end(), x);
      if (common == 1) return true;
    }
  return false;
}

}  // namespace naive
