#pragma once

#include <cstddef>
#include <cstdint>

#include "rtile/graph.hpp"
#include "rtile/pattern.hpp"

namespace rtile {

/// G(n, p): pair {u, v} (u < v) with lexicographic index i is included iff
/// to_unit_double(SplitMix64::at(seed, i)) < p. Throws on p outside [0, 1].
Graph sample_gnp(std::size_t n, double p, std::uint64_t seed);

/// min(1, C * n^(-1/max{m2(H), 1})).
double threshold_probability(std::size_t n, double c, const PatternStats& pattern);

struct ExperimentConfig {
  std::size_t n = 0;
  double c = 1.0;
  double epsilon = 0.1;
  std::uint64_t seed = 0;
  double p = 0.0;

  /// Validates the inputs and derives p from the pattern's threshold density.
  static ExperimentConfig make(std::size_t n, double c, double epsilon, std::uint64_t seed,
                               const PatternStats& pattern);
};

}  // namespace rtile
