#include "rtile/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

#include "rtile/rng.hpp"

namespace rtile {

namespace {

double falling_factorial(std::size_t n, std::size_t k) {
  double out = 1.0;
  for (std::size_t i = 0; i < k; ++i) out *= static_cast<double>(n > i ? n - i : 0);
  return out;
}

double binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  double out = 1.0;
  for (std::size_t i = 0; i < k; ++i)
    out = out * static_cast<double>(n - i) / static_cast<double>(i + 1);
  return std::round(out);
}

std::uint64_t factorial(std::size_t n) {
  std::uint64_t out = 1;
  for (std::size_t i = 2; i <= n; ++i) out *= i;
  return out;
}

// edge_index[a * n + b] for both orientations, -1 for non-edges.
std::vector<std::int32_t> edge_lookup(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::int32_t> index(n * n, -1);
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    index[edges[i].u * n + edges[i].v] = static_cast<std::int32_t>(i);
    index[edges[i].v * n + edges[i].u] = static_cast<std::int32_t>(i);
  }
  return index;
}

void require_small(const Graph& g, const char* what) {
  if (g.order() > 64 || g.size() > 64)
    throw std::invalid_argument(std::string(what) + ": host must have at most 64 vertices and 64 edges");
}

}  // namespace

// ---------------------------------------------------------------------------

std::vector<HostCopy> enumerate_copies(const Graph& host, const PatternStats& h, double budget) {
  const std::size_t n = host.order();
  const std::size_t k = h.k();
  const double work = falling_factorial(n, k);
  if (work > budget) throw BudgetExceeded("enumerate_copies", work, budget);
  std::vector<HostCopy> out;
  if (k == 0 || k > n) return out;

  const Graph& pattern = h.graph();
  std::vector<std::vector<Vertex>> back(k);
  for (const Edge& e : pattern.edges()) back[std::max(e.u, e.v)].push_back(std::min(e.u, e.v));
  const auto index = edge_lookup(host);

  std::vector<Vertex> map(k);
  std::vector<bool> used(n, false);
  std::set<std::vector<std::uint32_t>> seen;

  std::function<void(std::size_t)> place = [&](std::size_t i) {
    if (i == k) {
      std::vector<std::uint32_t> edges;
      for (const Edge& e : pattern.edges())
        edges.push_back(static_cast<std::uint32_t>(index[map[e.u] * n + map[e.v]]));
      std::sort(edges.begin(), edges.end());
      std::vector<Vertex> vertices(map);
      std::sort(vertices.begin(), vertices.end());
      std::vector<std::uint32_t> key(vertices.begin(), vertices.end());
      key.push_back(~std::uint32_t{0});
      key.insert(key.end(), edges.begin(), edges.end());
      if (!seen.insert(std::move(key)).second) return;
      HostCopy copy;
      for (Vertex v : vertices)
        if (v < 64) copy.vertex_mask |= std::uint64_t{1} << v;
      for (auto e : edges)
        if (e < 64) copy.edge_mask |= std::uint64_t{1} << e;
      copy.vertices = std::move(vertices);
      copy.edges = std::move(edges);
      out.push_back(std::move(copy));
      return;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (used[v]) continue;
      bool ok = true;
      for (Vertex j : back[i])
        if (!host.has_edge(v, map[j])) {
          ok = false;
          break;
        }
      if (!ok) continue;
      used[v] = true;
      map[i] = v;
      place(i + 1);
      used[v] = false;
    }
  };
  place(0);
  return out;
}

std::optional<Colour> copy_colour(const ColouredGraph& g, const HostCopy& copy) {
  if (copy.edges.empty()) return std::nullopt;
  const auto edges = g.graph().edges();
  const Edge first = edges[copy.edges.front()];
  const Colour c = g.colour(first.u, first.v);
  for (auto i : copy.edges)
    if (g.colour(edges[i].u, edges[i].v) != c) return std::nullopt;
  return c;
}

// ---------------------------------------------------------------------------

namespace {

std::size_t hits(const HostCopy& copy, const VertexSet& s) {
  std::size_t out = 0;
  for (Vertex v : copy.vertices) out += s.contains(v) ? 1 : 0;
  return out;
}

// Edgeless copies count as monochromatic in both colours.
bool red_ok(const ColouredGraph& g, const HostCopy& copy) {
  auto c = copy_colour(g, copy);
  return copy.edges.empty() || c == Colour::red;
}
bool blue_ok(const ColouredGraph& g, const HostCopy& copy) {
  auto c = copy_colour(g, copy);
  return copy.edges.empty() || c == Colour::blue;
}

}  // namespace

bool is_good_copy(const ColouredGraph& g, const PatternStats& h, const HostCopy& copy,
                  const VertexSet& a, const VertexSet& b) {
  if (red_ok(g, copy) && hits(copy, a) >= h.alpha()) return true;
  return blue_ok(g, copy) && hits(copy, b) >= h.alpha();
}

std::uint64_t good_copy_count(const ColouredGraph& g, const PatternStats& h, const VertexSet& a,
                              const VertexSet& b, double budget) {
  const std::size_t n = g.order();
  if (a.universe() != n || b.universe() != n || a.intersects(b) || (a | b).size() != n)
    throw std::invalid_argument("good_copy_count: A and B must partition V(G)");
  const std::size_t sa = a.size();
  const std::size_t sb = b.size();
  if ((sa > sb ? sa - sb : sb - sa) > 1)
    throw std::invalid_argument("good_copy_count: partition must be balanced");
  std::uint64_t count = 0;
  for (const auto& copy : enumerate_copies(g.graph(), h, budget))
    count += is_good_copy(g, h, copy, a, b) ? 1 : 0;
  return count;
}

bool has_richness_witness(const ColouredGraph& g, std::span<const HostCopy> copies,
                          const PatternStats& h, const VertexSet& x, const VertexSet& y) {
  const VertexSet both = x | y;
  for (const auto& copy : copies) {
    bool inside = true;
    for (Vertex v : copy.vertices)
      if (!both.contains(v)) {
        inside = false;
        break;
      }
    if (inside && is_good_copy(g, h, copy, x, y)) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Exact Rt.

namespace {

// Maximum number of pairwise disjoint masks, stopping once `cap` is reached.
class Packer {
 public:
  Packer(std::span<const std::uint64_t> sets, std::size_t k) : k_(k) {
    for (auto s : sets) {
      universe_ |= s;
    }
    // Each set is listed under every vertex it contains so branching on the
    // lowest free vertex sees all candidates.
    for (auto s : sets)
      for (std::uint64_t m = s; m; m &= m - 1) by_vertex_[std::countr_zero(m)].push_back(s);
  }

  std::size_t solve(std::size_t cap) {
    cap_ = cap;
    best_ = 0;
    if (cap_ == 0 || universe_ == 0) return 0;
    search(universe_, 0);
    return best_;
  }

 private:
  bool search(std::uint64_t free, std::size_t count) {
    if (count > best_) {
      best_ = count;
      if (best_ >= cap_) return true;
    }
    if (count + static_cast<std::size_t>(std::popcount(free)) / k_ <= best_) return false;
    if (!free) return false;
    const int v = std::countr_zero(free);
    for (auto s : by_vertex_[v])
      if ((s & ~free) == 0 && search(free & ~s, count + 1)) return true;
    return search(free & ~(std::uint64_t{1} << v), count);
  }

  std::size_t k_;
  std::uint64_t universe_ = 0;
  std::size_t cap_ = 0;
  std::size_t best_ = 0;
  std::vector<std::uint64_t> by_vertex_[64];
};

std::vector<std::uint64_t> unique_masks(std::vector<std::uint64_t> masks) {
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  return masks;
}

// Largest monochromatic tiling under red-edge mask `red`, capped at `cap`.
std::size_t mono_tiling_value(std::span<const HostCopy> copies, std::uint64_t red, std::size_t k,
                              std::size_t cap) {
  std::vector<std::uint64_t> reds;
  std::vector<std::uint64_t> blues;
  for (const auto& c : copies) {
    if ((c.edge_mask & ~red) == 0) reds.push_back(c.vertex_mask);
    if ((c.edge_mask & red) == 0) blues.push_back(c.vertex_mask);
  }
  Packer red_packer(unique_masks(std::move(reds)), k);
  const std::size_t r = red_packer.solve(cap);
  if (r >= cap) return r;
  Packer blue_packer(unique_masks(std::move(blues)), k);
  return std::max(r, blue_packer.solve(cap));
}

// --- Graphs up to isomorphism, for complete hosts. --------------------------

using Adjacency = std::vector<std::uint8_t>;  // row bitmasks, at most 8 vertices

std::uint32_t code_under(const Adjacency& adj, const std::vector<int>& order) {
  // order[p] is the vertex placed at position p.
  const std::size_t m = adj.size();
  std::uint32_t code = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      code = (code << 1) | ((adj[order[i]] >> order[j]) & 1U);
  return code;
}

// Maximum code over orderings that sort vertices by an isomorphism-invariant key.
std::uint32_t canonical_code(const Adjacency& adj) {
  const std::size_t m = adj.size();
  std::vector<std::uint32_t> key(m);
  for (std::size_t v = 0; v < m; ++v) {
    std::uint32_t deg_sum = 0;
    for (std::size_t u = 0; u < m; ++u)
      if ((adj[v] >> u) & 1U) deg_sum += static_cast<std::uint32_t>(std::popcount(adj[u]));
    key[v] = static_cast<std::uint32_t>(std::popcount(adj[v])) * 64 + deg_sum;
  }
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) { return key[a] < key[b]; });
  std::vector<std::pair<std::size_t, std::size_t>> cells;
  for (std::size_t i = 0; i < m;) {
    std::size_t j = i;
    while (j < m && key[order[j]] == key[order[i]]) ++j;
    cells.emplace_back(i, j);
    i = j;
  }
  std::uint32_t best = 0;
  std::function<void(std::size_t)> walk = [&](std::size_t c) {
    if (c == cells.size()) {
      best = std::max(best, code_under(adj, order));
      return;
    }
    auto [lo, hi] = cells[c];
    std::sort(order.begin() + static_cast<std::ptrdiff_t>(lo),
              order.begin() + static_cast<std::ptrdiff_t>(hi));
    do {
      walk(c + 1);
    } while (std::next_permutation(order.begin() + static_cast<std::ptrdiff_t>(lo),
                                   order.begin() + static_cast<std::ptrdiff_t>(hi)));
  };
  walk(0);
  return best;
}

Adjacency decode(std::uint32_t code, std::size_t m) {
  Adjacency adj(m, 0);
  std::size_t bit = m * (m - 1) / 2;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      --bit;
      if ((code >> bit) & 1U) {
        adj[i] |= static_cast<std::uint8_t>(1U << j);
        adj[j] |= static_cast<std::uint8_t>(1U << i);
      }
    }
  return adj;
}

inline constexpr std::size_t kIsomorphCeiling = 8;

// Canonical codes of all graphs on m vertices (cached, generated by vertex augmentation).
const std::vector<std::uint32_t>& graphs_up_to_iso(std::size_t m) {
  static std::mutex mutex;
  static std::map<std::size_t, std::vector<std::uint32_t>> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(m); it != cache.end()) return it->second;
  std::vector<std::uint32_t> level{0};
  for (std::size_t size = 2; size <= m; ++size) {
    std::set<std::uint32_t> next;
    for (std::uint32_t code : level) {
      const Adjacency base = decode(code, size - 1);
      for (std::uint32_t nb = 0; nb < (1U << (size - 1)); ++nb) {
        Adjacency adj = base;
        adj.push_back(static_cast<std::uint8_t>(nb));
        for (std::size_t u = 0; u + 1 < size; ++u)
          if ((nb >> u) & 1U) adj[u] |= static_cast<std::uint8_t>(1U << (size - 1));
        next.insert(canonical_code(adj));
      }
    }
    level.assign(next.begin(), next.end());
  }
  return cache.emplace(m, std::move(level)).first->second;
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  return g.size() == n * (n - 1) / 2;
}

std::vector<Colour> colours_of(std::uint64_t red, std::size_t e) {
  std::vector<Colour> out(e);
  for (std::size_t i = 0; i < e; ++i) out[i] = ((red >> i) & 1U) ? Colour::red : Colour::blue;
  return out;
}

}  // namespace

std::size_t max_mono_tiling(const ColouredGraph& g, const PatternStats& h, double budget) {
  require_small(g.graph(), "max_mono_tiling");
  const auto copies = enumerate_copies(g.graph(), h, budget);
  std::uint64_t red = 0;
  const auto colours = g.colours();
  for (std::size_t i = 0; i < colours.size(); ++i)
    if (colours[i] == Colour::red) red |= std::uint64_t{1} << i;
  const std::size_t cap = h.k() ? g.order() / h.k() : 0;
  return mono_tiling_value(copies, red, std::max<std::size_t>(h.k(), 1), cap + 1);
}

RtResult exact_rt(const PatternStats& h, const Graph& g, double budget, std::uint64_t seed) {
  require_small(g, "exact_rt");
  if (h.k() == 0) throw std::invalid_argument("exact_rt: pattern must have a vertex");
  const std::size_t n = g.order();
  const std::size_t e = g.size();
  const std::size_t k = h.k();
  const auto copies = enumerate_copies(g, h);  // small: e(G) <= 64

  RtResult result;
  std::size_t best = n / k + 1;  // sentinel above any tiling size
  auto consider = [&](std::uint64_t red) {
    ++result.colourings_examined;
    const std::size_t value = mono_tiling_value(copies, red, k, best);
    if (value < best) {
      best = value;
      result.witness = colours_of(red, e);
    }
  };

  const bool iso = is_complete(g) && n >= 2 && n <= kIsomorphCeiling;
  const double count = e == 0 ? 1.0 : std::ldexp(1.0, static_cast<int>(e) - 1);

  if (iso) {
    const auto& classes = graphs_up_to_iso(n);
    if (static_cast<double>(classes.size()) <= budget) {
      result.isomorph_rejection = true;
      const auto index = edge_lookup(g);
      for (std::uint32_t code : classes) {
        const Adjacency adj = decode(code, n);
        std::uint64_t red = 0;
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = i + 1; j < n; ++j)
            if ((adj[i] >> j) & 1U) red |= std::uint64_t{1} << index[i * n + j];
        consider(red);
        if (best == 0) break;
      }
      result.exact = true;
    }
  } else if (count <= budget) {
    // Colour swapping preserves the answer, so edge 0 stays red.
    const std::uint64_t total = e == 0 ? 1 : std::uint64_t{1} << (e - 1);
    for (std::uint64_t m = 0; m < total; ++m) {
      consider(e == 0 ? 0 : (m << 1) | 1U);
      if (best == 0) break;
    }
    result.exact = true;
  }

  if (!result.exact) {
    SplitMix64 rng(seed);
    const auto trials = static_cast<std::uint64_t>(std::max(1.0, std::floor(budget)));
    const std::uint64_t mask = e == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << e) - 1;
    for (std::uint64_t t = 0; t < trials && best > 0; ++t) consider(rng.next() & mask);
  }

  result.upper = best;
  result.lower = result.exact ? best : 0;
  return result;
}

// ---------------------------------------------------------------------------
// Richness.

namespace {

struct SetPair {
  std::uint64_t x;
  std::uint64_t y;
};

void for_each_subset(std::uint64_t pool, std::size_t size,
                     const std::function<void(std::uint64_t)>& visit) {
  std::vector<int> members;
  for (std::uint64_t m = pool; m; m &= m - 1) members.push_back(std::countr_zero(m));
  std::function<void(std::size_t, std::size_t, std::uint64_t)> rec = [&](std::size_t from,
                                                                         std::size_t left,
                                                                         std::uint64_t acc) {
    if (left == 0) {
      visit(acc);
      return;
    }
    for (std::size_t i = from; i + left <= members.size(); ++i)
      rec(i + 1, left - 1, acc | (std::uint64_t{1} << members[i]));
  };
  rec(0, size, 0);
}

bool mask_witness(std::span<const HostCopy> copies, std::size_t alpha, std::uint64_t red,
                  const SetPair& p) {
  const std::uint64_t both = p.x | p.y;
  for (const auto& c : copies) {
    if ((c.vertex_mask & ~both) != 0) continue;
    const bool is_red = (c.edge_mask & ~red) == 0;
    const bool is_blue = (c.edge_mask & red) == 0;
    if (is_red && static_cast<std::size_t>(std::popcount(c.vertex_mask & p.x)) >= alpha) return true;
    if (is_blue && static_cast<std::size_t>(std::popcount(c.vertex_mask & p.y)) >= alpha) return true;
  }
  return false;
}

VertexSet from_mask(std::size_t n, std::uint64_t m) {
  VertexSet s(n);
  for (; m; m &= m - 1) s.insert(static_cast<Vertex>(std::countr_zero(m)));
  return s;
}

}  // namespace

RichnessVerdict richness_decide(const Graph& g, const PatternStats& h, std::size_t s,
                                double budget, std::uint64_t seed) {
  require_small(g, "richness_decide");
  if (s == 0) throw std::invalid_argument("richness_decide: s must be positive");
  const std::size_t n = g.order();
  const std::size_t e = g.size();
  const auto copies = enumerate_copies(g, h);  // small: e(G) <= 64
  const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

  RichnessVerdict verdict;
  const double pair_count = 2 * s <= n ? binomial(n, s) * binomial(n - s, s) : 0.0;
  verdict.pairs_per_colouring = static_cast<std::uint64_t>(pair_count);
  if (pair_count == 0.0) {
    verdict.rich = true;  // no pair of disjoint s-sets to test
    return verdict;
  }
  const double colourings = e == 0 ? 1.0 : std::ldexp(1.0, static_cast<int>(e) - 1);
  const double work = colourings * pair_count * std::max<double>(1.0, static_cast<double>(copies.size()));

  auto record = [&](std::uint64_t red, const SetPair& p) {
    verdict.rich = false;
    verdict.counterexample =
        RichnessVerdict::Counterexample{colours_of(red, e), from_mask(n, p.x), from_mask(n, p.y)};
  };

  if (work <= budget) {
    verdict.mode = RichnessMode::exhaustive;
    std::vector<SetPair> pairs;
    for_each_subset(all, s, [&](std::uint64_t x) {
      for_each_subset(all & ~x, s, [&](std::uint64_t y) { pairs.push_back({x, y}); });
    });
    // (colouring, X, Y) fails exactly when (swapped colouring, Y, X) fails,
    // so edge 0 stays red.
    const std::uint64_t total = e == 0 ? 1 : std::uint64_t{1} << (e - 1);
    verdict.rich = true;
    for (std::uint64_t m = 0; m < total && verdict.rich; ++m) {
      const std::uint64_t red = e == 0 ? 0 : (m << 1) | 1U;
      ++verdict.colourings_examined;
      for (const auto& p : pairs)
        if (!mask_witness(copies, h.alpha(), red, p)) {
          record(red, p);
          break;
        }
    }
    return verdict;
  }

  verdict.mode = RichnessMode::sampled;
  verdict.rich = true;
  SplitMix64 rng(seed);
  const std::uint64_t edge_mask = e == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << e) - 1;
  const double per_trial = std::max<double>(1.0, static_cast<double>(copies.size()));
  const auto trials = static_cast<std::uint64_t>(std::clamp(budget / per_trial, 1.0, 1e6));
  std::vector<Vertex> order(n);
  for (std::uint64_t t = 0; t < trials && verdict.rich; ++t) {
    const std::uint64_t red = rng.next() & edge_mask;
    std::iota(order.begin(), order.end(), Vertex{0});
    shuffle(std::span<Vertex>(order), rng);
    SetPair p{0, 0};
    for (std::size_t i = 0; i < s; ++i) p.x |= std::uint64_t{1} << order[i];
    for (std::size_t i = s; i < 2 * s; ++i) p.y |= std::uint64_t{1} << order[i];
    ++verdict.colourings_examined;
    if (!mask_witness(copies, h.alpha(), red, p)) record(red, p);
  }
  return verdict;
}

// ---------------------------------------------------------------------------
// Auxiliary hypergraph.

AuxHypergraph build_aux_hypergraph(std::size_t n, const VertexSet& a, const VertexSet& b,
                                   const PatternStats& h, double budget) {
  if (a.universe() != n || b.universe() != n || a.intersects(b) || (a | b).size() != n)
    throw std::invalid_argument("build_aux_hypergraph: A and B must partition [n]");
  const std::size_t sa = a.size();
  const std::size_t sb = b.size();
  if ((sa > sb ? sa - sb : sb - sa) > 1)
    throw std::invalid_argument("build_aux_hypergraph: partition must be balanced");
  const Graph host = Graph::complete(n);
  AuxHypergraph aux;
  aux.n = n;
  aux.a = a;
  aux.b = b;
  aux.uniformity = h.ell();
  aux.tau = std::pow(static_cast<double>(n), -h.threshold_exponent());
  aux.host_edges.assign(host.edges().begin(), host.edges().end());
  for (const auto& copy : enumerate_copies(host, h, budget)) {
    for (Colour c : {Colour::red, Colour::blue}) {
      if (hits(copy, c == Colour::red ? a : b) < h.alpha()) continue;
      std::vector<AuxVertex> edge;
      for (auto i : copy.edges) edge.push_back(aux_vertex(i, c));
      aux.hyperedges.push_back(std::move(edge));
    }
  }
  return aux;
}

std::uint64_t aux_degree(const AuxHypergraph& aux, std::span<const AuxVertex> u) {
  std::vector<AuxVertex> sorted(u.begin(), u.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (std::size_t i = 1; i < sorted.size(); ++i)
    if (aux_edge_index(sorted[i]) == aux_edge_index(sorted[i - 1])) return 0;
  std::uint64_t count = 0;
  for (const auto& edge : aux.hyperedges)
    count += std::includes(edge.begin(), edge.end(), sorted.begin(), sorted.end()) ? 1 : 0;
  return count;
}

Graph shadow_graph(const AuxHypergraph& aux, std::span<const AuxVertex> w) {
  std::set<std::uint32_t> indices;
  for (AuxVertex v : w) indices.insert(aux_edge_index(v));
  Graph out(aux.n);
  for (auto i : indices) out.add_edge(aux.host_edges.at(i).u, aux.host_edges.at(i).v);
  return out;
}

bool AuxDegreeReport::all_pass() const {
  if (!vertex_degree_pass || !edge_count_pass) return false;
  if (mixed_hyperedges != 0 || non_uniform_hyperedges != 0) return false;
  return std::all_of(rows.begin(), rows.end(), [](const AuxDegreeRow& r) { return r.pass; });
}

AuxDegreeReport aux_degree_check(const AuxHypergraph& aux, const PatternStats& h) {
  const std::size_t ell = h.ell();
  const std::size_t k = h.k();
  const double n = static_cast<double>(aux.n);
  const double n_k2 = std::pow(n, static_cast<double>(k) - 2.0);
  const double ell_factorial = static_cast<double>(factorial(ell));
  auto within = [](double value, double bound) { return value <= bound * (1.0 + 1e-12) + 1e-9; };

  AuxDegreeReport report;
  for (const auto& edge : aux.hyperedges) {
    if (edge.size() != ell) ++report.non_uniform_hyperedges;
    for (std::size_t i = 1; i < edge.size(); ++i)
      if (aux_edge_index(edge[i]) == aux_edge_index(edge[i - 1])) {
        ++report.mixed_hyperedges;
        break;
      }
  }

  for (std::size_t j = 1; j <= ell; ++j) {
    std::map<std::vector<AuxVertex>, std::uint64_t> degree;
    for (const auto& edge : aux.hyperedges) {
      if (edge.size() < j) continue;
      std::vector<bool> pick(edge.size(), false);
      std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(j), true);
      do {
        std::vector<AuxVertex> subset;
        for (std::size_t i = 0; i < edge.size(); ++i)
          if (pick[i]) subset.push_back(edge[i]);
        ++degree[subset];
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
    AuxDegreeRow row;
    row.j = j;
    for (const auto& [subset, d] : degree) row.delta = std::max(row.delta, d);
    row.bound = ell_factorial * std::pow(aux.tau, static_cast<double>(j) - 1.0) * n_k2;
    row.pass = within(static_cast<double>(row.delta), row.bound);
    if (j == 1) report.max_vertex_degree = row.delta;
    report.rows.push_back(row);
  }
  report.vertex_degree_bound = static_cast<double>(ell) * n_k2;
  report.vertex_degree_pass =
      within(static_cast<double>(report.max_vertex_degree), report.vertex_degree_bound);
  report.edge_count_bound = std::ldexp(1.0, static_cast<int>(ell)) * std::pow(n, static_cast<double>(k));
  report.edge_count_pass = within(static_cast<double>(aux.edge_count()), report.edge_count_bound);
  return report;
}

// ---------------------------------------------------------------------------
// Supersaturation.

void SupersatParams::validate() const {
  if (r < 3 || t < r) throw std::invalid_argument("SupersatParams: need t >= R >= 3");
}

std::uint64_t count_cliques(const Graph& g, std::size_t r, double budget) {
  const std::size_t n = g.order();
  const double work = binomial(n, r);
  if (work > budget) throw BudgetExceeded("count_cliques", work, budget);
  if (r == 0) return 1;
  std::uint64_t count = 0;
  std::function<void(const VertexSet&, std::size_t)> extend = [&](const VertexSet& cand,
                                                                  std::size_t left) {
    if (left == 0) {
      ++count;
      return;
    }
    if (cand.size() < left) return;
    for (Vertex v : cand) {
      VertexSet next = cand & g.neighbours(v);
      // keep only vertices after v so each clique is counted once
      for (Vertex u = 0; u <= v; ++u) next.erase(u);
      extend(next, left - 1);
    }
  };
  extend(VertexSet::full(n), r);
  return count;
}

namespace {

std::optional<std::uint64_t> checked_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) return std::nullopt;
  return out;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::size_t exp) {
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    auto next = checked_mul(out, base);
    if (!next) return std::nullopt;
    out = *next;
  }
  return out;
}

}  // namespace

SupersatReport clique_supersat_count(const Graph& g, const SupersatParams& params, double budget) {
  params.validate();
  const std::uint64_t n = g.order();
  const std::uint64_t t = params.t;
  const std::size_t r = params.r;
  SupersatReport report;
  report.count = count_cliques(g, r, budget);
  report.hypothesis_holds = 2 * t * g.size() >= (t - 1) * n * n;
  const double choose = binomial(params.t, r);
  report.bound = choose * std::pow(static_cast<double>(n) / static_cast<double>(t), static_cast<double>(r));

  const auto lhs_pow = checked_pow(t, r);
  const auto rhs_pow = checked_pow(n, r);
  std::optional<std::uint64_t> lhs = lhs_pow ? checked_mul(report.count, *lhs_pow) : std::nullopt;
  std::optional<std::uint64_t> rhs =
      rhs_pow ? checked_mul(static_cast<std::uint64_t>(choose), *rhs_pow) : std::nullopt;
  if (lhs && rhs) {
    report.meets_bound = *lhs >= *rhs;
  } else {
    const long double l = static_cast<long double>(report.count) * std::pow(static_cast<long double>(t), r);
    const long double rr = static_cast<long double>(choose) * std::pow(static_cast<long double>(n), r);
    report.meets_bound = l >= rr;
  }
  return report;
}

std::optional<std::size_t> ramsey_number(std::size_t k, std::size_t s) {
  if (k > s) std::swap(k, s);
  if (k == 0) return std::nullopt;
  if (k == 1) return 1;
  if (k == 2) return s;
  static const std::map<std::pair<std::size_t, std::size_t>, std::size_t> table{
      {{3, 3}, 6},  {{3, 4}, 9},  {{3, 5}, 14}, {{3, 6}, 18},
      {{3, 7}, 23}, {{3, 8}, 28}, {{3, 9}, 36}, {{4, 4}, 18}, {{4, 5}, 25}};
  if (auto it = table.find({k, s}); it != table.end()) return it->second;
  return std::nullopt;
}

}  // namespace rtile
