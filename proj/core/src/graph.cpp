#include "rtile/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace rtile {

Graph::Graph(std::size_t n) : adjacency_(n, VertexSet(n)) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
  for (const Edge& e : edges) add_edge(e.u, e.v);
}

Graph Graph::complete(std::size_t n) {
  Graph g(n);
  if (n > 1) g.edges_.reserve(n * (n - 1) / 2);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(Vertex a, Vertex b) {
  if (a >= order() || b >= order())
    throw std::invalid_argument("edge endpoint out of range: " + std::to_string(a) + " " +
                                std::to_string(b));
  if (a == b) throw std::invalid_argument("self-loop at vertex " + std::to_string(a));
  if (adjacency_[a].contains(b))
    throw std::invalid_argument("duplicate edge " + std::to_string(a) + " " + std::to_string(b));
  adjacency_[a].insert(b);
  adjacency_[b].insert(a);
  edges_.push_back(Edge::of(a, b));
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  return a < order() && adjacency_[a].contains(b);
}

std::vector<Edge> Graph::sorted_edges() const {
  std::vector<Edge> out(edges_.begin(), edges_.end());
  std::sort(out.begin(), out.end());
  return out;
}

Graph Graph::complement() const {
  Graph g(order());
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v = u + 1; v < order(); ++v)
      if (!has_edge(u, v)) g.add_edge(u, v);
  return g;
}

Graph Graph::induced(const VertexSet& keep) const {
  std::vector<Vertex> relabel(order(), static_cast<Vertex>(-1));
  Vertex next = 0;
  for (Vertex v : keep) relabel[v] = next++;
  Graph g(next);
  for (const Edge& e : edges_)
    if (keep.contains(e.u) && keep.contains(e.v)) g.add_edge(relabel[e.u], relabel[e.v]);
  return g;
}

std::optional<Colour> parse_colour(std::string_view text) {
  if (text == "r" || text == "red") return Colour::red;
  if (text == "b" || text == "blue") return Colour::blue;
  return std::nullopt;
}

ColouredGraph::ColouredGraph(Graph graph, std::span<const Colour> colours)
    : graph_(std::move(graph)),
      red_(graph_.order(), VertexSet(graph_.order())),
      blue_(graph_.order(), VertexSet(graph_.order())) {
  if (colours.size() != graph_.size())
    throw std::invalid_argument("colouring must assign exactly one colour per edge");
  const auto edges = graph_.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    auto& side = colours[i] == Colour::red ? red_ : blue_;
    side[edges[i].u].insert(edges[i].v);
    side[edges[i].v].insert(edges[i].u);
  }
  red_degree_.resize(graph_.order());
  blue_degree_.resize(graph_.order());
  for (Vertex v = 0; v < graph_.order(); ++v) {
    red_degree_[v] = static_cast<std::uint32_t>(red_[v].size());
    blue_degree_[v] = static_cast<std::uint32_t>(blue_[v].size());
  }
}

ColouredGraph ColouredGraph::monochromatic(Graph graph, Colour c) {
  std::vector<Colour> colours(graph.size(), c);
  return ColouredGraph(std::move(graph), colours);
}

Colour ColouredGraph::colour(Vertex a, Vertex b) const {
  if (a < order()) {
    if (red_[a].contains(b)) return Colour::red;
    if (blue_[a].contains(b)) return Colour::blue;
  }
  throw std::out_of_range("not an edge: " + std::to_string(a) + " " + std::to_string(b));
}

std::vector<Colour> ColouredGraph::colours() const {
  std::vector<Colour> out;
  out.reserve(graph_.size());
  for (const Edge& e : graph_.edges()) out.push_back(colour(e.u, e.v));
  return out;
}

std::size_t ColouredGraph::edge_count(Colour c) const {
  std::size_t twice = 0;
  for (const auto& s : c == Colour::red ? red_ : blue_) twice += s.size();
  return twice / 2;
}

ColouredGraph ColouredGraph::swapped() const {
  ColouredGraph out = *this;
  std::swap(out.red_, out.blue_);
  std::swap(out.red_degree_, out.blue_degree_);
  return out;
}

}  // namespace rtile
