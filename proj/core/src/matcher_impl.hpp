#pragma once

// Ordered backtracking subgraph matcher shared by the copy search and the
// greedy adversary. Host must provide order(), neighbours(v, c) and
// degree(v, c).

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "rtile/copies.hpp"

namespace rtile::detail {

struct SearchPlan {
  std::vector<Vertex> order;                   // pattern vertex at each depth
  std::vector<std::vector<std::size_t>> back;  // earlier depths adjacent to this depth
  std::vector<std::size_t> degree;             // pattern degree at each depth
};

// Starts with `prefix`, then repeatedly takes the vertex with the most
// already-placed neighbours (ties: higher degree, then lower index).
inline SearchPlan make_plan(const Graph& h, std::span<const Vertex> prefix) {
  const std::size_t k = h.order();
  SearchPlan plan;
  std::vector<bool> placed(k, false);
  std::vector<std::size_t> position(k, 0);
  auto place = [&](Vertex v) {
    position[v] = plan.order.size();
    placed[v] = true;
    plan.order.push_back(v);
  };
  for (Vertex v : prefix) place(v);
  while (plan.order.size() < k) {
    std::optional<Vertex> best;
    std::size_t best_links = 0;
    for (Vertex v = 0; v < k; ++v) {
      if (placed[v]) continue;
      std::size_t links = 0;
      for (Vertex u : plan.order) links += h.has_edge(u, v) ? 1 : 0;
      if (!best || links > best_links ||
          (links == best_links && h.degree(v) > h.degree(*best))) {
        best = v;
        best_links = links;
      }
    }
    place(*best);
  }
  plan.back.resize(k);
  plan.degree.resize(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Vertex v = plan.order[i];
    plan.degree[i] = h.degree(v);
    for (std::size_t j = 0; j < i; ++j)
      if (h.has_edge(v, plan.order[j])) plan.back[i].push_back(j);
  }
  return plan;
}

template <typename Host>
class Matcher {
 public:
  Matcher(const Host& host, const SearchPlan& plan, Colour c, const CopyQuery& query,
          SearchStats* stats)
      : host_(host),
        plan_(plan),
        colour_(c),
        query_(query),
        stats_(stats),
        k_(plan.order.size()),
        image_(k_),
        used_(host.order()),
        scratch_(k_, VertexSet(host.order())),
        allowed_(query.allowed ? *query.allowed : VertexSet::full(host.order())) {}

  /// Restricts depth 0 to `roots` (intersected with the allowed set).
  void set_roots(const VertexSet* roots) { roots_ = roots; }
  /// Pins depths 0 and 1 to host vertices a, b; the edge between them is
  /// assumed present in colour c.
  void pin_first_edge(Vertex a, Vertex b) { pinned_ = {a, b}; }

  /// Returns false if the visitor or the node limit stopped the search.
  template <typename Visit>
  bool run(Visit&& visit) {
    if (k_ == 0) return true;
    hits_ = 0;
    return extend(0, visit);
  }

  /// Labelled images indexed by pattern vertex (valid inside the visitor).
  std::span<const Vertex> labelled() const { return labelled_; }

 private:
  template <typename Visit>
  bool extend(std::size_t depth, Visit& visit) {
    if (stats_ && ++stats_->nodes > query_.node_limit) {
      stats_->truncated = true;
      return false;
    }
    if (depth == k_) {
      labelled_.assign(k_, 0);
      for (std::size_t i = 0; i < k_; ++i) labelled_[plan_.order[i]] = image_[i];
      return visit(std::span<const Vertex>(labelled_));
    }
    VertexSet& cand = scratch_[depth];
    if (pinned_ && depth < 2) {
      cand.clear();
      const Vertex v = depth == 0 ? pinned_->first : pinned_->second;
      if (allowed_.contains(v) && !used_.contains(v)) cand.insert(v);
    } else {
      cand = allowed_;
      if (depth == 0 && roots_) cand &= *roots_;
      cand -= used_;
    }
    for (std::size_t j : plan_.back[depth]) {
      if (pinned_ && depth == 1 && j == 0) continue;
      cand &= host_.neighbours(image_[j], colour_);
    }
    const std::size_t need = plan_.degree[depth];
    for (Vertex v : cand) {
      // Pinned endpoints are credited with the uncoloured pinned edge.
      const std::size_t slack = pinned_ && depth < 2 ? 1 : 0;
      if (host_.degree(v, colour_) + slack < need) continue;
      const bool hit = query_.hit_set && query_.hit_set->contains(v);
      const std::size_t hits_after = hits_ + (hit ? 1 : 0);
      if (query_.min_hits > 0 && hits_after + (k_ - depth - 1) < query_.min_hits) continue;
      image_[depth] = v;
      used_.insert(v);
      hits_ = hits_after;
      const bool keep_going = extend(depth + 1, visit);
      used_.erase(v);
      hits_ = hits_after - (hit ? 1 : 0);
      if (!keep_going) return false;
    }
    return true;
  }

  const Host& host_;
  const SearchPlan& plan_;
  Colour colour_;
  const CopyQuery& query_;
  SearchStats* stats_;
  std::size_t k_;
  std::vector<Vertex> image_;
  std::vector<Vertex> labelled_;
  VertexSet used_;
  std::vector<VertexSet> scratch_;
  VertexSet allowed_;
  const VertexSet* roots_ = nullptr;
  std::optional<std::pair<Vertex, Vertex>> pinned_;
  std::size_t hits_ = 0;
};

}  // namespace rtile::detail
