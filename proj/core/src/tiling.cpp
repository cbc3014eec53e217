#include "rtile/tiling.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace rtile {

VertexSet Tiling::vertices(std::size_t universe) const {
  VertexSet out(universe);
  for (const auto& copy : copies)
    for (Vertex v : copy.vertex_map) out.insert(v);
  return out;
}

bool is_valid_tiling(const ColouredGraph& g, const PatternStats& h, const Tiling& tiling,
                     const VertexSet* within) {
  VertexSet used(g.order());
  for (const auto& copy : tiling.copies) {
    if (copy.colour != tiling.colour || !is_valid_copy(g, h, copy)) return false;
    for (Vertex v : copy.vertex_map) {
      if (used.contains(v)) return false;
      if (within && !within->contains(v)) return false;
      used.insert(v);
    }
  }
  return true;
}

std::size_t required_tiling_size(std::size_t order, const PatternStats& h, double eta) {
  const double t = static_cast<double>(order);
  const double bound = t / static_cast<double>(h.tiling_denominator()) - eta * t;
  if (bound <= 1e-9) return 0;
  return static_cast<std::size_t>(std::ceil(bound - 1e-9));
}

bool verify_cluster(const ColouredGraph& g, const PatternStats& h, const ClusterCertificate& cert) {
  if (cert.members.universe() != g.order() || cert.members.empty()) return false;
  if (cert.red.colour != Colour::red || cert.blue.colour != Colour::blue) return false;
  if (!is_valid_tiling(g, h, cert.red, &cert.members)) return false;
  if (!is_valid_tiling(g, h, cert.blue, &cert.members)) return false;
  const std::size_t need = required_tiling_size(cert.members.size(), h, cert.eta);
  return cert.red.size() >= need && cert.blue.size() >= need;
}

double achieved_eta(const PatternStats& h, const ClusterCertificate& cert) {
  const double t = static_cast<double>(cert.members.size());
  if (t == 0) return 0.0;
  const double smaller = static_cast<double>(std::min(cert.red.size(), cert.blue.size()));
  return std::max(0.0, (t / static_cast<double>(h.tiling_denominator()) - smaller) / t);
}

std::optional<GoodCopy> richness_probe(const ColouredGraph& g, const PatternStats& h,
                                       const VertexSet& x, const VertexSet& y, bool blue_first) {
  if (x.intersects(y)) throw std::invalid_argument("richness_probe: X and Y must be disjoint");
  const VertexSet both = x | y;
  auto search = [&](Colour c) -> std::optional<GoodCopy> {
    CopyQuery query;
    query.allowed = &both;
    query.colour = c;
    query.hit_set = c == Colour::red ? &x : &y;
    query.min_hits = h.alpha();
    if (auto copy = find_copy(g, h, query))
      return GoodCopy{std::move(*copy), c == Colour::red ? Side::x : Side::y};
    return std::nullopt;
  };
  const Colour first = blue_first ? Colour::blue : Colour::red;
  if (auto hit = search(first)) return hit;
  return search(opposite(first));
}

namespace {

bool is_triangle(const PatternStats& h) { return h.k() == 3 && h.ell() == 3; }

// A c-coloured triangle through v inside `allowed`, or nullopt.
std::optional<EmbeddedCopy> triangle_at(const ColouredGraph& g, Vertex v, Colour c,
                                        const VertexSet& allowed) {
  const VertexSet near = g.neighbours(v, c) & allowed;
  for (Vertex a : near) {
    const VertexSet common = g.neighbours(a, c) & near;
    if (!common.empty()) return EmbeddedCopy{{v, a, *common.begin()}, c};
  }
  return std::nullopt;
}

}  // namespace

std::optional<CopyPair> find_bowtie(const ColouredGraph& g, const PatternStats& h,
                                    const VertexSet& forbidden) {
  if (!is_triangle(h)) throw std::invalid_argument("find_bowtie requires H = K3");
  const VertexSet allowed = forbidden.complement();
  for (Vertex v : allowed) {
    // Red and blue neighbourhoods are disjoint, so the two triangles meet only at v.
    auto red = triangle_at(g, v, Colour::red, allowed);
    if (!red) continue;
    if (auto blue = triangle_at(g, v, Colour::blue, allowed))
      return CopyPair{std::move(*red), std::move(*blue)};
  }
  return std::nullopt;
}

std::optional<CopyPair> find_tie(const ColouredGraph& g, const PatternStats& h,
                                 const VertexSet& forbidden, std::uint64_t node_limit,
                                 bool* truncated) {
  if (truncated) *truncated = false;
  if (is_triangle(h)) return find_bowtie(g, h, forbidden);
  if (h.ell() == 0) return std::nullopt;
  const VertexSet allowed = forbidden.complement();
  std::optional<CopyPair> found;
  std::set<std::vector<Vertex>> tried;
  std::uint64_t spent = 0;
  bool out_of_budget = false;
  CopyQuery outer;
  outer.allowed = &allowed;
  outer.node_limit = node_limit;
  SearchStats outer_stats;
  for_each_embedding(
      g, h, Colour::red, outer,
      [&](std::span<const Vertex> red_map) {
        std::vector<Vertex> key(red_map.begin(), red_map.end());
        std::sort(key.begin(), key.end());
        if (!tried.insert(key).second) return true;
        const VertexSet red_vertices = VertexSet::from_range(g.order(), key);
        CopyQuery inner;
        inner.allowed = &allowed;
        inner.colour = Colour::blue;
        inner.hit_set = &red_vertices;
        inner.min_hits = h.alpha();
        const std::uint64_t used = outer_stats.nodes + spent;
        if (used >= node_limit) {
          out_of_budget = true;
          return false;
        }
        inner.node_limit = node_limit - used;
        SearchStats inner_stats;
        auto blue = find_copy(g, h, inner, &inner_stats);
        spent += inner_stats.nodes;
        if (blue) {
          found = CopyPair{EmbeddedCopy{{red_map.begin(), red_map.end()}, Colour::red},
                           std::move(*blue)};
          return false;
        }
        if (inner_stats.truncated) {
          out_of_budget = true;
          return false;
        }
        return true;
      },
      &outer_stats);
  if (truncated) *truncated = out_of_budget || outer_stats.truncated;
  return found;
}

}  // namespace rtile
