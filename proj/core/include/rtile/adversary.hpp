#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rtile/graph.hpp"
#include "rtile/pattern.hpp"

namespace rtile {

enum class AdversaryKind : std::uint8_t {
  uniform_random,
  planted_partition,
  copy_avoider_greedy,
  majority_degree,
};

inline constexpr AdversaryKind kAllAdversaries[] = {
    AdversaryKind::uniform_random, AdversaryKind::planted_partition,
    AdversaryKind::copy_avoider_greedy, AdversaryKind::majority_degree};

std::string_view adversary_name(AdversaryKind kind);
/// Throws std::invalid_argument on an unknown name.
AdversaryKind parse_adversary(std::string_view name);

/// A colouring strategy. Every strategy is total and deterministic per seed.
///
///   uniform-random       each edge red with probability red_probability
///   planted-partition    red inside `part`, blue elsewhere; without an explicit
///                        part a seeded random set of round(part_fraction n)
///                        vertices is used
///   copy-avoider-greedy  edges in seeded order, each taking the colour that
///                        closes fewer monochromatic copies of `pattern`
///                        (seeded coin on ties)
///   majority-degree      vertices with degree >= the median are red-class,
///                        the rest blue-class; an edge takes the class of its
///                        higher-degree endpoint
struct AdversarySpec {
  AdversaryKind kind = AdversaryKind::uniform_random;
  std::uint64_t seed = 0;
  double red_probability = 0.5;
  std::optional<std::vector<Vertex>> part;
  double part_fraction = 0.2;
  /// Pattern avoided by copy-avoider-greedy; K3 when absent.
  std::optional<PatternStats> pattern;
};

ColouredGraph colour_with(const Graph& g, const AdversarySpec& spec);

}  // namespace rtile
