#include "rtile/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace rtile {
namespace {

struct RawGraph {
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::vector<std::string> colour_tokens;
};

RawGraph parse_raw(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  RawGraph raw;
  bool have_header = false;
  std::size_t expected = 0;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& why) {
    throw std::invalid_argument("graph text line " + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    if (!have_header) {
      long long n = -1, m = -1;
      if (!(fields >> n >> m) || n < 0 || m < 0) fail("expected header \"n m\"");
      raw.n = static_cast<std::size_t>(n);
      expected = static_cast<std::size_t>(m);
      have_header = true;
      continue;
    }
    long long u = -1, v = -1;
    if (!(fields >> u >> v) || u < 0 || v < 0) fail("expected \"u v [c]\"");
    std::string colour;
    fields >> colour;
    std::string extra;
    if (fields >> extra) fail("trailing token '" + extra + "'");
    raw.edges.push_back(Edge::of(static_cast<Vertex>(u), static_cast<Vertex>(v)));
    raw.colour_tokens.push_back(colour);
  }
  if (!have_header) throw std::invalid_argument("graph text: missing header");
  if (raw.edges.size() != expected)
    throw std::invalid_argument("graph text: header promises " + std::to_string(expected) +
                                " edges, found " + std::to_string(raw.edges.size()));
  return raw;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open graph file: " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

Graph parse_graph(std::string_view text) {
  RawGraph raw = parse_raw(text);
  return Graph(raw.n, raw.edges);
}

ColouredGraph parse_coloured_graph(std::string_view text) {
  RawGraph raw = parse_raw(text);
  std::vector<Colour> colours;
  colours.reserve(raw.edges.size());
  for (std::size_t i = 0; i < raw.edges.size(); ++i) {
    auto c = parse_colour(raw.colour_tokens[i]);
    if (!c)
      throw std::invalid_argument("graph text: edge " + std::to_string(raw.edges[i].u) + " " +
                                  std::to_string(raw.edges[i].v) + " has no colour in {r, b}");
    colours.push_back(*c);
  }
  return ColouredGraph(Graph(raw.n, raw.edges), colours);
}

std::string format_graph(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.sorted_edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string format_coloured_graph(const ColouredGraph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.graph().size() << '\n';
  for (const Edge& e : g.graph().sorted_edges())
    out << e.u << ' ' << e.v << ' ' << colour_code(g.colour(e.u, e.v)) << '\n';
  return out.str();
}

Graph read_graph_file(const std::string& path) { return parse_graph(slurp(path)); }

ColouredGraph read_coloured_graph_file(const std::string& path) {
  return parse_coloured_graph(slurp(path));
}

}  // namespace rtile
