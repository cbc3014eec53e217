#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <span>
#include <vector>

#include "rtile/errors.hpp"
#include "rtile/graph.hpp"
#include "rtile/pattern.hpp"

namespace rtile {

/// An injective map V(H) -> V(G) whose H-edges land on G-edges.
struct EmbeddedCopy {
  /// vertex_map[i] is the host image of pattern vertex i.
  std::vector<Vertex> vertex_map;
  /// Colour of every mapped edge, or nullopt when the copy is not monochromatic.
  std::optional<Colour> colour;

  VertexSet vertices(std::size_t universe) const {
    return VertexSet::from_range(universe, vertex_map);
  }
  std::size_t hits(const VertexSet& s) const {
    std::size_t n = 0;
    for (Vertex v : vertex_map) n += s.contains(v) ? 1 : 0;
    return n;
  }
  bool operator==(const EmbeddedCopy&) const = default;
};

/// Constraints for a copy search. Pointers are non-owning and may be null.
struct CopyQuery {
  /// Host vertices the copy may use; null means all.
  const VertexSet* allowed = nullptr;
  /// Required colour; nullopt tries red first, then blue.
  std::optional<Colour> colour;
  /// The copy must place at least `min_hits` vertices inside `hit_set`.
  const VertexSet* hit_set = nullptr;
  std::size_t min_hits = 0;
  /// Abort after this many search nodes (SearchStats::truncated is set).
  std::uint64_t node_limit = std::numeric_limits<std::uint64_t>::max();
};

struct SearchStats {
  std::uint64_t nodes = 0;
  bool truncated = false;
};

/// Visitor over labelled embeddings; return false to stop the enumeration.
using EmbeddingVisitor = std::function<bool(std::span<const Vertex>)>;

/// First monochromatic copy satisfying `query`, in the deterministic search order.
std::optional<EmbeddedCopy> find_copy(const ColouredGraph& g, const PatternStats& h,
                                      const CopyQuery& query, SearchStats* stats = nullptr);

/// Monochromatic copy of H inside G[allowed], optionally of a given colour.
std::optional<EmbeddedCopy> find_mono_copy(const ColouredGraph& g, const PatternStats& h,
                                           const VertexSet& allowed,
                                           std::optional<Colour> colour_filter = std::nullopt);

/// Every labelled embedding of H in colour `c` satisfying `query` (whose
/// colour field is ignored). Returns false if the visitor stopped early.
bool for_each_embedding(const ColouredGraph& g, const PatternStats& h, Colour c,
                        const CopyQuery& query, const EmbeddingVisitor& visit,
                        SearchStats* stats = nullptr);

/// Number of monochromatic copies of H of colour c, counted as subgraphs
/// (labelled embeddings divided by |Aut(H)|). Throws BudgetExceeded when
/// |allowed|^k exceeds `budget`.
std::uint64_t count_mono_copies(const ColouredGraph& g, const PatternStats& h, Colour c,
                                double budget = kDefaultBudget);
std::uint64_t count_mono_copies(const ColouredGraph& g, const PatternStats& h, Colour c,
                                const VertexSet& allowed, double budget = kDefaultBudget);

/// Checks that `copy` is an injective edge-preserving map and that its colour
/// field matches the host colours.
bool is_valid_copy(const ColouredGraph& g, const PatternStats& h, const EmbeddedCopy& copy);

}  // namespace rtile
