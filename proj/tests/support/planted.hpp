#pragma once

// Planted instances for the cluster process: X = {0..s-1} carries a blue
// K_k-tiling, Y = {s..2s-1} a red one.

#include <vector>

#include "rtile/graph.hpp"
#include "rtile/rng.hpp"
#include "rtile/tiling.hpp"

namespace planted {

using namespace rtile;

struct Instance {
  ColouredGraph g;
  VertexSet x;
  VertexSet y;
  Tiling blue_x;
  Tiling red_y;
};

enum class Fill {
  random,          // every non-tiling pair present, coloured red with probability red_p
  sides_and_cross, // X blue inside, Y red inside, all cross edges red
  no_cross,        // X blue inside, Y red inside, no X-Y edges
};

inline Instance make(std::size_t s, std::size_t k, Fill fill, std::uint64_t seed, double red_p = 0.5) {
  const std::size_t n = 2 * s;
  SplitMix64 rng(seed);
  Graph graph(n);
  std::vector<Colour> colours;
  auto same_block = [&](Vertex a, Vertex b) { return a / k == b / k; };
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) {
      const bool ax = a < s;
      const bool bx = b < s;
      Colour c;
      if (ax == bx && same_block(a, b)) {
        c = ax ? Colour::blue : Colour::red;
      } else if (fill == Fill::random) {
        c = rng.uniform01() < red_p ? Colour::red : Colour::blue;
      } else if (ax == bx) {
        c = ax ? Colour::blue : Colour::red;
      } else if (fill == Fill::sides_and_cross) {
        c = Colour::red;
      } else {
        continue;
      }
      graph.add_edge(a, b);
      colours.push_back(c);
    }
  Instance out{ColouredGraph(graph, colours), VertexSet(n), VertexSet(n), {}, {}};
  out.blue_x.colour = Colour::blue;
  out.red_y.colour = Colour::red;
  for (Vertex v = 0; v < s; ++v) {
    out.x.insert(v);
    out.y.insert(static_cast<Vertex>(s + v));
  }
  for (std::size_t block = 0; block < s / k; ++block) {
    EmbeddedCopy bx;
    EmbeddedCopy ry;
    for (std::size_t i = 0; i < k; ++i) {
      bx.vertex_map.push_back(static_cast<Vertex>(block * k + i));
      ry.vertex_map.push_back(static_cast<Vertex>(s + block * k + i));
    }
    bx.colour = Colour::blue;
    ry.colour = Colour::red;
    out.blue_x.copies.push_back(bx);
    out.red_y.copies.push_back(ry);
  }
  return out;
}

}  // namespace planted
