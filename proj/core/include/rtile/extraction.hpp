#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rtile/cluster_process.hpp"
#include "rtile/tiling.hpp"

namespace rtile {

struct FamilyOptions {
  double eta = 0.05;
  /// Maximum number of cluster-construction attempts (tie searches that
  /// succeed plus cluster_process runs).
  std::uint64_t budget = 100000;
  std::uint64_t seed = 0;
  /// Copies of each colour handed to cluster_process; 0 derives
  /// max(2, ceil(eta (2k - alpha) n / k)).
  std::size_t copies_per_side = 0;
  /// Search-node ceiling for a single tie search on a non-triangle pattern.
  std::uint64_t tie_node_limit = 2'000'000;
};

/// Vertex-disjoint clusters found by the builder's own search: greedy ties
/// (bow ties for K3) first, then cluster_process on leftover monochromatic
/// copies while both colours have enough of them. Maximal only with respect
/// to that search.
struct ClusterFamily {
  std::vector<ClusterCertificate> clusters;
  VertexSet covered;
  /// Disjoint monochromatic copies outside `covered` left after the last attempt.
  std::vector<EmbeddedCopy> leftover;
  std::size_t tie_clusters = 0;
  std::size_t process_clusters = 0;
  std::size_t process_attempts = 0;
  std::size_t probe_failures = 0;
  bool truncated = false;
};

ClusterFamily maximal_cluster_family(const ColouredGraph& g, const PatternStats& h,
                                     const FamilyOptions& options);
inline ClusterFamily maximal_cluster_family(const ColouredGraph& g, const PatternStats& h,
                                            double eta, std::uint64_t builder_budget) {
  FamilyOptions options;
  options.eta = eta;
  options.budget = builder_budget;
  return maximal_cluster_family(g, h, options);
}

/// Repeatedly takes the first monochromatic copy (red before blue) inside
/// `allowed` and removes its vertices.
std::vector<EmbeddedCopy> greedy_mono_copies(const ColouredGraph& g, const PatternStats& h,
                                             VertexSet allowed,
                                             std::optional<Colour> colour = std::nullopt);

struct ExtractionOptions {
  double epsilon = 0.1;
  /// Defaults to epsilon / (2k - alpha).
  std::optional<double> eta;
  std::uint64_t seed = 0;
  std::uint64_t budget = 100000;
};

struct ExtractionReport {
  double target_size = 0.0;  // n/(2k - alpha) - epsilon n
  std::size_t achieved_size = 0;
  Colour colour = Colour::red;
  std::size_t cluster_vertices = 0;
  std::size_t cluster_count = 0;
  std::size_t cluster_red_copies = 0;
  std::size_t cluster_blue_copies = 0;
  std::size_t probe_failures = 0;
  std::size_t process_attempts = 0;
  bool truncated = false;
  std::string source;
  std::uint64_t seed = 0;
  double eta = 0.0;
  double epsilon = 0.0;
  int rounding_table_version = 1;
};

struct ExtractionResult {
  Tiling tiling;
  ExtractionReport report;
  ClusterFamily family;
};

/// Monochromatic H-tiling assembled from the better colour of a cluster
/// family plus greedy copies on the uncovered vertices; the best of several
/// such assemblies is returned. Patterns on fewer than three vertices with an
/// edge are handled through 2K2, and edgeless patterns trivially.
ExtractionResult extract_tiling(const ColouredGraph& g, const PatternStats& h,
                                const ExtractionOptions& options);

/// {target_size, achieved_size, colour, cluster_vertices, probe_failures,
/// seed, eta, epsilon, rounding_table_version, ...} as a JSON object.
std::string report_to_json(const ExtractionReport& report, int indent = -1);

}  // namespace rtile
