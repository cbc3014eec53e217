#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "rtile/vertex_set.hpp"

namespace rtile {

/// Unordered vertex pair stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  static Edge of(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  auto operator<=>(const Edge&) const = default;
};

/// Simple undirected graph on vertices 0..n-1.
///
/// Rejects self-loops, duplicate edges and out-of-range endpoints.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);
  Graph(std::size_t n, std::span<const Edge> edges);

  static Graph complete(std::size_t n);
  static Graph empty(std::size_t n) { return Graph(n); }

  void add_edge(Vertex a, Vertex b);

  std::size_t order() const { return adjacency_.size(); }
  std::size_t size() const { return edges_.size(); }
  bool has_edge(Vertex a, Vertex b) const;
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
  const VertexSet& neighbours(Vertex v) const { return adjacency_[v]; }

  /// Edges in insertion order.
  std::span<const Edge> edges() const { return edges_; }
  /// Edges in lexicographic order.
  std::vector<Edge> sorted_edges() const;

  Graph complement() const;

  /// Subgraph induced on `keep`, relabelled to 0..|keep|-1 in increasing order.
  Graph induced(const VertexSet& keep) const;

 private:
  std::vector<VertexSet> adjacency_;
  std::vector<Edge> edges_;
};

enum class Colour : std::uint8_t { red = 0, blue = 1 };

constexpr Colour opposite(Colour c) { return c == Colour::red ? Colour::blue : Colour::red; }
constexpr char colour_code(Colour c) { return c == Colour::red ? 'r' : 'b'; }
constexpr std::string_view colour_name(Colour c) { return c == Colour::red ? "red" : "blue"; }
std::optional<Colour> parse_colour(std::string_view text);

/// A graph with a total red/blue colouring of its edges.
class ColouredGraph {
 public:
  ColouredGraph() = default;
  /// `colours[i]` is the colour of `graph.edges()[i]`.
  ColouredGraph(Graph graph, std::span<const Colour> colours);

  static ColouredGraph monochromatic(Graph graph, Colour c);

  template <typename ColourOf>
  static ColouredGraph from_function(Graph graph, ColourOf&& colour_of) {
    std::vector<Colour> colours;
    colours.reserve(graph.size());
    for (const Edge& e : graph.edges()) colours.push_back(colour_of(e));
    return ColouredGraph(std::move(graph), colours);
  }

  const Graph& graph() const { return graph_; }
  std::size_t order() const { return graph_.order(); }

  /// Colour of edge {a, b}; throws std::out_of_range if it is not an edge.
  Colour colour(Vertex a, Vertex b) const;
  /// Neighbours of v joined by an edge of colour c.
  const VertexSet& neighbours(Vertex v, Colour c) const {
    return c == Colour::red ? red_[v] : blue_[v];
  }
  /// Colours aligned with graph().edges().
  std::vector<Colour> colours() const;
  std::size_t edge_count(Colour c) const;
  std::size_t degree(Vertex v, Colour c) const {
    return c == Colour::red ? red_degree_[v] : blue_degree_[v];
  }

  /// Same graph with every colour flipped.
  ColouredGraph swapped() const;

 private:
  Graph graph_;
  std::vector<VertexSet> red_;
  std::vector<VertexSet> blue_;
  std::vector<std::uint32_t> red_degree_;
  std::vector<std::uint32_t> blue_degree_;
};

}  // namespace rtile
