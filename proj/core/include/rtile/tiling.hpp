#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "rtile/copies.hpp"
#include "rtile/graph.hpp"
#include "rtile/pattern.hpp"

namespace rtile {

/// Vertex-disjoint monochromatic copies of H, all of one colour.
struct Tiling {
  Colour colour = Colour::red;
  std::vector<EmbeddedCopy> copies;

  std::size_t size() const { return copies.size(); }
  VertexSet vertices(std::size_t universe) const;
};

/// True iff every copy is a valid copy of H coloured `tiling.colour`, the
/// copies are pairwise vertex-disjoint, and (when given) all lie inside `within`.
bool is_valid_tiling(const ColouredGraph& g, const PatternStats& h, const Tiling& tiling,
                     const VertexSet* within = nullptr);

/// max(0, ceil(order / (2k - alpha) - eta * order)): the tiling size an
/// (H, eta)-cluster on `order` vertices must reach in each colour. A 1e-9
/// slack absorbs floating error before the ceiling.
std::size_t required_tiling_size(std::size_t order, const PatternStats& h, double eta);

/// A vertex set T with red and blue tilings inside G[T].
struct ClusterCertificate {
  VertexSet members;
  Tiling red;
  Tiling blue;
  double eta = 0.0;
};

/// Checks a certificate from raw data: T nonempty and inside V(G), both
/// tilings valid, inside T, of the right colour, and at least
/// required_tiling_size(|T|, H, eta) long.
bool verify_cluster(const ColouredGraph& g, const PatternStats& h, const ClusterCertificate& cert);

/// Smallest eta >= 0 for which the certificate's tilings meet the bound.
double achieved_eta(const PatternStats& h, const ClusterCertificate& cert);

enum class Side : std::uint8_t { x, y };

/// A red copy with >= alpha vertices in X, or a blue copy with >= alpha in Y.
struct GoodCopy {
  EmbeddedCopy copy;
  Side side_hit = Side::x;
};

/// Searches G[X u Y] for a red copy meeting X in >= alpha(H) vertices, then
/// (if none) for a blue copy meeting Y in >= alpha(H) vertices. With
/// `blue_first` the two searches run in the opposite order.
std::optional<GoodCopy> richness_probe(const ColouredGraph& g, const PatternStats& h,
                                       const VertexSet& x, const VertexSet& y,
                                       bool blue_first = false);

using CopyPair = std::pair<EmbeddedCopy, EmbeddedCopy>;

/// Red and blue triangles sharing exactly one vertex, avoiding `forbidden`.
/// Throws std::invalid_argument unless H is K3.
std::optional<CopyPair> find_bowtie(const ColouredGraph& g, const PatternStats& h,
                                    const VertexSet& forbidden);

/// Red and blue copies of H, avoiding `forbidden`, whose union spans at most
/// 2k - alpha vertices (an (H, 0)-cluster). Uses the bow-tie scan for K3.
/// Gives up after `node_limit` search nodes; `truncated` reports that.
std::optional<CopyPair> find_tie(const ColouredGraph& g, const PatternStats& h,
                                 const VertexSet& forbidden, std::uint64_t node_limit,
                                 bool* truncated = nullptr);

}  // namespace rtile
