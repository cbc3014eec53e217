#include "rtile/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rtile/rng.hpp"

namespace rtile {

Graph sample_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("sample_gnp: p must lie in [0, 1]");
  if (n < 1) throw std::invalid_argument("sample_gnp: n must be at least 1");
  Graph g(n);
  std::uint64_t index = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++index)
      if (to_unit_double(SplitMix64::at(seed, index)) < p) g.add_edge(u, v);
  return g;
}

double threshold_probability(std::size_t n, double c, const PatternStats& pattern) {
  if (n == 0) return 1.0;
  const double p = c * std::pow(static_cast<double>(n), -pattern.threshold_exponent());
  return std::min(1.0, p);
}

ExperimentConfig ExperimentConfig::make(std::size_t n, double c, double epsilon, std::uint64_t seed,
                                        const PatternStats& pattern) {
  if (!(c > 0.0)) throw std::invalid_argument("threshold constant C must be positive");
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw std::invalid_argument("epsilon must lie in (0, 1)");
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  return ExperimentConfig{n, c, epsilon, seed, threshold_probability(n, c, pattern)};
}

}  // namespace rtile
