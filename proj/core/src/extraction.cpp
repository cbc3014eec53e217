#include "rtile/extraction.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "json.hpp"
#include "rtile/rng.hpp"

namespace rtile {

std::vector<EmbeddedCopy> greedy_mono_copies(const ColouredGraph& g, const PatternStats& h,
                                             VertexSet allowed, std::optional<Colour> colour) {
  std::vector<EmbeddedCopy> out;
  while (allowed.size() >= h.k()) {
    auto copy = find_mono_copy(g, h, allowed, colour);
    if (!copy) break;
    for (Vertex v : copy->vertex_map) allowed.erase(v);
    out.push_back(std::move(*copy));
  }
  return out;
}

namespace {

ClusterCertificate tie_certificate(std::size_t n, const CopyPair& tie, double eta) {
  ClusterCertificate cert;
  cert.members = tie.first.vertices(n) | tie.second.vertices(n);
  cert.red = Tiling{Colour::red, {tie.first}};
  cert.blue = Tiling{Colour::blue, {tie.second}};
  cert.eta = eta;
  return cert;
}

std::vector<EmbeddedCopy> of_colour(const std::vector<EmbeddedCopy>& copies, Colour c) {
  std::vector<EmbeddedCopy> out;
  for (const auto& copy : copies)
    if (copy.colour == c) out.push_back(copy);
  return out;
}

}  // namespace

ClusterFamily maximal_cluster_family(const ColouredGraph& g, const PatternStats& h,
                                     const FamilyOptions& options) {
  if (options.eta < 0.0) throw std::invalid_argument("maximal_cluster_family: eta must be >= 0");
  const std::size_t n = g.order();
  ClusterFamily family;
  family.covered = VertexSet(n);
  std::uint64_t attempts = 0;

  // Ties: one red and one blue copy on at most 2k - alpha vertices.
  if (h.ell() > 0) {
    while (true) {
      if (attempts >= options.budget) {
        family.truncated = true;
        break;
      }
      bool cut_short = false;
      auto tie = find_tie(g, h, family.covered, options.tie_node_limit, &cut_short);
      if (cut_short) family.truncated = true;
      if (!tie) break;
      ++attempts;
      auto cert = tie_certificate(n, *tie, options.eta);
      family.covered |= cert.members;
      family.clusters.push_back(std::move(cert));
      ++family.tie_clusters;
    }
  }

  family.leftover = greedy_mono_copies(g, h, family.covered.complement());
  if (h.k() < 3 || options.eta <= 0.0 || h.ell() == 0) return family;

  const std::size_t k = h.k();
  const double epsilon = options.eta * static_cast<double>(h.tiling_denominator());
  const std::size_t per_side =
      options.copies_per_side > 0
          ? options.copies_per_side
          : std::max<std::size_t>(
                2, static_cast<std::size_t>(std::ceil(epsilon * static_cast<double>(n) /
                                                      static_cast<double>(k))));

  while (true) {
    const auto reds = of_colour(family.leftover, Colour::red);
    const auto blues = of_colour(family.leftover, Colour::blue);
    if (reds.size() < per_side || blues.size() < per_side) break;
    if (attempts >= options.budget) {
      family.truncated = true;
      break;
    }
    ++attempts;
    ++family.process_attempts;
    Tiling blue_x{Colour::blue, {blues.begin(), blues.begin() + static_cast<std::ptrdiff_t>(per_side)}};
    Tiling red_y{Colour::red, {reds.begin(), reds.begin() + static_cast<std::ptrdiff_t>(per_side)}};
    ProcessOptions process_options;
    process_options.seed = derive_seed({options.seed, attempts});
    auto outcome = cluster_process(g, h, blue_x.vertices(n), red_y.vertices(n), options.eta,
                                   blue_x, red_y, process_options);
    auto* success = std::get_if<ClusterSuccess>(&outcome);
    if (!success || !verify_cluster(g, h, success->certificate)) {
      ++family.probe_failures;
      break;
    }
    const VertexSet& taken = success->certificate.members;
    family.covered |= taken;
    family.clusters.push_back(std::move(success->certificate));
    ++family.process_clusters;

    std::vector<EmbeddedCopy> kept;
    VertexSet free = family.covered.complement();
    for (auto& copy : family.leftover) {
      if (copy.vertices(n).intersects(taken)) continue;
      for (Vertex v : copy.vertex_map) free.erase(v);
      kept.push_back(std::move(copy));
    }
    auto refill = greedy_mono_copies(g, h, free);
    kept.insert(kept.end(), refill.begin(), refill.end());
    family.leftover = std::move(kept);
  }
  return family;
}

namespace {

struct Candidate {
  Tiling tiling;
  std::string source;
};

ExtractionResult trivial_extraction(const ColouredGraph& g, const PatternStats& h,
                                    double eta) {
  // No edges: any k vertices form a copy, monochromatic in either colour.
  ExtractionResult result;
  result.tiling.colour = Colour::red;
  std::vector<Vertex> block;
  for (Vertex v = 0; v < g.order(); ++v) {
    block.push_back(v);
    if (block.size() == h.k()) {
      result.tiling.copies.push_back(EmbeddedCopy{block, Colour::red});
      block.clear();
    }
  }
  result.family.covered = VertexSet(g.order());
  result.report.source = "edgeless";
  result.report.eta = eta;
  return result;
}

ExtractionResult split_matching_extraction(const ColouredGraph& g,
                                           const ExtractionOptions& options) {
  // A 2K2-tiling with m copies splits into a K2-tiling with 2m copies.
  const PatternStats two_edges = named_pattern("matching-2");
  ExtractionOptions inner = options;
  inner.eta.reset();
  ExtractionResult result = extract_tiling(g, two_edges, inner);
  Tiling split{result.tiling.colour, {}};
  for (const auto& copy : result.tiling.copies) {
    split.copies.push_back(EmbeddedCopy{{copy.vertex_map[0], copy.vertex_map[1]}, copy.colour});
    split.copies.push_back(EmbeddedCopy{{copy.vertex_map[2], copy.vertex_map[3]}, copy.colour});
  }
  result.tiling = std::move(split);
  result.report.source += "+split-2K2";
  return result;
}

}  // namespace

ExtractionResult extract_tiling(const ColouredGraph& g, const PatternStats& h,
                                const ExtractionOptions& options) {
  if (!(options.epsilon > 0.0 && options.epsilon < 1.0))
    throw std::invalid_argument("extract_tiling: epsilon must lie in (0, 1)");
  const std::size_t n = g.order();
  const double denominator = static_cast<double>(h.tiling_denominator());
  const double eta = options.eta.value_or(options.epsilon / denominator);

  ExtractionResult result;
  if (h.ell() == 0) {
    result = trivial_extraction(g, h, eta);
  } else if (h.k() < 3) {
    result = split_matching_extraction(g, options);
  } else {
    FamilyOptions family_options;
    family_options.eta = eta;
    family_options.budget = options.budget;
    family_options.seed = options.seed;
    family_options.copies_per_side = std::max<std::size_t>(
        2, static_cast<std::size_t>(std::ceil(options.epsilon * static_cast<double>(n) /
                                              static_cast<double>(h.k()))));
    result.family = maximal_cluster_family(g, h, family_options);
    const ClusterFamily& family = result.family;
    const VertexSet uncovered = family.covered.complement();

    std::vector<Candidate> candidates;
    for (Colour c : {Colour::red, Colour::blue}) {
      Tiling from_clusters{c, {}};
      for (const auto& cluster : family.clusters) {
        const Tiling& part = c == Colour::red ? cluster.red : cluster.blue;
        from_clusters.copies.insert(from_clusters.copies.end(), part.copies.begin(),
                                    part.copies.end());
      }
      Candidate with_greedy{from_clusters, "clusters+greedy"};
      for (auto& copy : greedy_mono_copies(g, h, uncovered, c))
        with_greedy.tiling.copies.push_back(std::move(copy));
      candidates.push_back(std::move(with_greedy));

      Candidate with_leftover{from_clusters, "clusters+leftover"};
      for (const auto& copy : family.leftover)
        if (copy.colour == c) with_leftover.tiling.copies.push_back(copy);
      candidates.push_back(std::move(with_leftover));

      candidates.push_back(
          Candidate{Tiling{c, greedy_mono_copies(g, h, VertexSet::full(n), c)}, "greedy"});
    }
    const auto best = std::max_element(
        candidates.begin(), candidates.end(),
        [](const Candidate& a, const Candidate& b) { return a.tiling.size() < b.tiling.size(); });
    result.tiling = best->tiling;
    result.report.source = best->source;
  }

  ExtractionReport& report = result.report;
  report.target_size = static_cast<double>(n) / denominator - options.epsilon * static_cast<double>(n);
  report.achieved_size = result.tiling.size();
  report.colour = result.tiling.colour;
  report.cluster_vertices = result.family.covered.size();
  report.cluster_count = result.family.clusters.size();
  report.cluster_red_copies = 0;
  report.cluster_blue_copies = 0;
  for (const auto& cluster : result.family.clusters) {
    report.cluster_red_copies += cluster.red.size();
    report.cluster_blue_copies += cluster.blue.size();
  }
  report.probe_failures = result.family.probe_failures;
  report.process_attempts = result.family.process_attempts;
  report.truncated = result.family.truncated;
  report.seed = options.seed;
  report.eta = eta;
  report.epsilon = options.epsilon;
  return result;
}

std::string report_to_json(const ExtractionReport& report, int indent) {
  nlohmann::ordered_json j;
  j["target_size"] = report.target_size;
  j["achieved_size"] = report.achieved_size;
  j["colour"] = std::string(colour_name(report.colour));
  j["cluster_vertices"] = report.cluster_vertices;
  j["probe_failures"] = report.probe_failures;
  j["seed"] = report.seed;
  j["eta"] = report.eta;
  j["epsilon"] = report.epsilon;
  j["rounding_table_version"] = report.rounding_table_version;
  j["cluster_count"] = report.cluster_count;
  j["cluster_red_copies"] = report.cluster_red_copies;
  j["cluster_blue_copies"] = report.cluster_blue_copies;
  j["process_attempts"] = report.process_attempts;
  j["truncated"] = report.truncated;
  j["source"] = report.source;
  return j.dump(indent);
}

}  // namespace rtile
