#include "rtile/pattern.hpp"

#include <bit>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "rtile/graph_io.hpp"

namespace rtile {

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  num_ = num / (g == 0 ? 1 : g);
  den_ = den / (g == 0 ? 1 : g);
}

std::string Rational::to_string() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational m2_density(const Graph& h) {
  const std::size_t k = h.order();
  if (h.size() < 2) return Rational(1, 2);
  if (k > kPatternCeiling) throw std::invalid_argument("pattern too large for m2 scan");
  std::vector<std::uint32_t> adj(k, 0);
  for (const Edge& e : h.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  Rational best(-1, 1);
  for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
    const int v = std::popcount(mask);
    if (v < 3) continue;
    int twice_e = 0;
    for (std::uint32_t rest = mask; rest; rest &= rest - 1)
      twice_e += std::popcount(adj[std::countr_zero(rest)] & mask);
    const Rational ratio(twice_e / 2 - 1, v - 2);
    if (ratio > best) best = ratio;
  }
  return best;
}

namespace {

// Maximum independent set on bitmask adjacency: branch on the lowest
// candidate, bound by |chosen| + |candidates|.
void mis_branch(const std::vector<std::uint32_t>& adj, std::uint32_t candidates, std::size_t chosen,
                std::size_t& best) {
  if (chosen + static_cast<std::size_t>(std::popcount(candidates)) <= best) return;
  if (candidates == 0) {
    best = chosen;
    return;
  }
  const int v = std::countr_zero(candidates);
  mis_branch(adj, candidates & ~adj[v] & ~(1u << v), chosen + 1, best);
  if (adj[v] & candidates) mis_branch(adj, candidates & ~(1u << v), chosen, best);
}

}  // namespace

std::size_t independence_number(const Graph& h, std::size_t ceiling) {
  const std::size_t k = h.order();
  if (k > ceiling || k > 31)
    throw std::invalid_argument("independence_number: graph has " + std::to_string(k) +
                                " vertices, above the ceiling of " + std::to_string(ceiling));
  std::vector<std::uint32_t> adj(k, 0);
  for (const Edge& e : h.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  std::size_t best = 0;
  const std::uint32_t all = k == 0 ? 0u : static_cast<std::uint32_t>((std::uint64_t{1} << k) - 1);
  mis_branch(adj, all, 0, best);
  return best;
}

std::uint64_t count_automorphisms(const Graph& h) {
  const std::size_t k = h.order();
  std::uint64_t out = 0;
  std::vector<Vertex> image(k);
  std::vector<bool> used(k, false);
  auto extend = [&](auto&& self, std::size_t i) -> void {
    if (i == k) {
      ++out;
      return;
    }
    for (Vertex c = 0; c < k; ++c) {
      if (used[c] || h.degree(c) != h.degree(static_cast<Vertex>(i))) continue;
      bool ok = true;
      for (Vertex j = 0; j < i && ok; ++j)
        ok = h.has_edge(static_cast<Vertex>(i), j) == h.has_edge(c, image[j]);
      if (!ok) continue;
      used[c] = true;
      image[i] = c;
      self(self, i + 1);
      used[c] = false;
    }
  };
  extend(extend, 0);
  return out;
}

PatternStats::PatternStats(Graph pattern, std::string name)
    : pattern_(std::move(pattern)), name_(std::move(name)) {
  if (pattern_.order() == 0) throw std::invalid_argument("pattern must have at least one vertex");
  alpha_ = independence_number(pattern_);
  m2_ = m2_density(pattern_);
  if (pattern_.order() <= kAutomorphismCeiling) automorphism_count_ = count_automorphisms(pattern_);
}

Rational PatternStats::threshold_density() const {
  return m2_ < Rational(1, 1) ? Rational(1, 1) : m2_;
}

Graph complete_graph(std::size_t t) { return Graph::complete(t); }

Graph path_graph(std::size_t vertices) {
  Graph g(vertices);
  for (Vertex v = 1; v < vertices; ++v) g.add_edge(v - 1, v);
  return g;
}

Graph cycle_graph(std::size_t vertices) {
  if (vertices < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  Graph g = path_graph(vertices);
  g.add_edge(static_cast<Vertex>(vertices - 1), 0);
  return g;
}

Graph matching_graph(std::size_t edges) {
  Graph g(2 * edges);
  for (Vertex i = 0; i < edges; ++i) g.add_edge(2 * i, 2 * i + 1);
  return g;
}

namespace {

std::optional<std::size_t> parse_size(std::string_view text) {
  std::size_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) return std::nullopt;
  return value;
}

}  // namespace

PatternStats named_pattern(std::string_view name) {
  const std::string label(name);
  if (name.starts_with("matching-")) {
    if (auto t = parse_size(name.substr(9)); t && *t >= 1 && 2 * *t <= kPatternCeiling)
      return PatternStats(matching_graph(*t), label);
  } else if (!name.empty()) {
    const auto t = parse_size(name.substr(1));
    if (t && *t >= 1 && *t <= kPatternCeiling) {
      switch (name.front()) {
        case 'k': return PatternStats(complete_graph(*t), label);
        case 'p': return PatternStats(path_graph(*t), label);
        case 'c':
          if (*t >= 3) return PatternStats(cycle_graph(*t), label);
          break;
        default: break;
      }
    }
  }
  throw std::invalid_argument("unknown pattern name: " + label);
}

PatternStats load_pattern(std::string_view spec) {
  try {
    return named_pattern(spec);
  } catch (const std::invalid_argument&) {
  }
  std::ifstream in{std::string(spec)};
  if (!in) throw std::invalid_argument("unknown pattern name or unreadable file: " + std::string(spec));
  std::stringstream buffer;
  buffer << in.rdbuf();
  return PatternStats(parse_graph(buffer.str()), std::string(spec));
}

}  // namespace rtile
