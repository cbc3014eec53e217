#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "rtile/errors.hpp"
#include "rtile/graph.hpp"
#include "rtile/pattern.hpp"

namespace rtile {

// ---------------------------------------------------------------------------
// Brute-force copy enumeration. Deliberately independent of the matcher used
// by the tiling engine, so the two can be checked against each other.

/// One uncoloured copy of H in a host graph, identified by its edge set.
struct HostCopy {
  std::vector<Vertex> vertices;       // sorted
  std::vector<std::uint32_t> edges;   // sorted indices into host.edges()
  std::uint64_t vertex_mask = 0;      // valid when the host has <= 64 vertices
  std::uint64_t edge_mask = 0;        // valid when the host has <= 64 edges
};

/// All subgraphs of `host` isomorphic to H (each edge set once), found by
/// trying every injective map V(H) -> V(host). Throws BudgetExceeded when the
/// number of maps n(n-1)...(n-k+1) exceeds `budget`.
std::vector<HostCopy> enumerate_copies(const Graph& host, const PatternStats& h,
                                       double budget = kDefaultBudget);

/// Colour of every edge of `copy` under `g`, or nullopt if it is not monochromatic.
std::optional<Colour> copy_colour(const ColouredGraph& g, const HostCopy& copy);

// ---------------------------------------------------------------------------
// (A,B)-good copies.

/// Red with >= alpha(H) vertices in A, or blue with >= alpha(H) vertices in B.
bool is_good_copy(const ColouredGraph& g, const PatternStats& h, const HostCopy& copy,
                  const VertexSet& a, const VertexSet& b);

/// Exact number of (A,B)-good copies of H in G. A and B must partition V(G)
/// with sizes differing by at most one. Throws BudgetExceeded on large n^k.
std::uint64_t good_copy_count(const ColouredGraph& g, const PatternStats& h, const VertexSet& a,
                              const VertexSet& b, double budget = kDefaultBudget);

/// Whether some copy inside G[X u Y] is red with >= alpha vertices in X or
/// blue with >= alpha vertices in Y (the witness required by richness).
bool has_richness_witness(const ColouredGraph& g, std::span<const HostCopy> copies,
                          const PatternStats& h, const VertexSet& x, const VertexSet& y);

// ---------------------------------------------------------------------------
// Exact tiling Ramsey number.

struct RtResult {
  /// Certified lower bound: every colouring examined or implied has a
  /// monochromatic tiling of at least this size.
  std::size_t lower = 0;
  /// Smallest maximum monochromatic tiling over the colourings examined.
  std::size_t upper = 0;
  bool exact = false;
  bool isomorph_rejection = false;
  std::uint64_t colourings_examined = 0;
  /// A colouring attaining `upper` (colours in host edge order).
  std::vector<Colour> witness;
};

/// Largest monochromatic H-tiling in a fixed colouring (exact branch and bound).
std::size_t max_mono_tiling(const ColouredGraph& g, const PatternStats& h,
                            double budget = kDefaultBudget);

/// Minimum over all 2-colourings of G of the largest monochromatic H-tiling.
/// Complete hosts on at most 8 vertices enumerate red graphs up to
/// isomorphism; other hosts enumerate raw colourings with the first edge
/// fixed red. When the colouring count exceeds `budget`, `budget` seeded
/// random colourings are examined instead and the result is a bracket
/// [lower, upper] with exact == false. Requires e(G) <= 64.
RtResult exact_rt(const PatternStats& h, const Graph& g, double budget = kDefaultBudget,
                  std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Richness.

enum class RichnessMode : std::uint8_t { exhaustive, sampled };

struct RichnessVerdict {
  RichnessMode mode = RichnessMode::exhaustive;
  /// Exhaustive: exact richness. Sampled: no counterexample found.
  bool rich = false;
  std::uint64_t colourings_examined = 0;
  std::uint64_t pairs_per_colouring = 0;
  struct Counterexample {
    std::vector<Colour> colouring;
    VertexSet x;
    VertexSet y;
  };
  std::optional<Counterexample> counterexample;
};

/// Decides (H, s)-richness of G by checking every colouring against every
/// ordered pair of disjoint s-sets when (#colourings / 2) x #pairs x #copies
/// fits `budget`; otherwise samples seeded random colourings.
RichnessVerdict richness_decide(const Graph& g, const PatternStats& h, std::size_t s,
                                double budget = kDefaultBudget, std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Auxiliary hypergraph on E(K_n) x {red, blue}.

/// Aux vertex id 2 * (index of e in complete(n).edges()) + colour_code(c).
using AuxVertex = std::uint32_t;

inline AuxVertex aux_vertex(std::uint32_t edge_index, Colour c) {
  return 2 * edge_index + (c == Colour::red ? 0U : 1U);
}
inline std::uint32_t aux_edge_index(AuxVertex v) { return v / 2; }
inline Colour aux_colour(AuxVertex v) { return (v & 1U) ? Colour::blue : Colour::red; }

struct AuxHypergraph {
  std::size_t n = 0;
  VertexSet a;
  VertexSet b;
  std::size_t uniformity = 0;  // e(H)
  double tau = 0.0;            // n^(-1/max{m2(H), 1})
  std::vector<Edge> host_edges;
  /// Sorted aux-vertex lists, one per hyperedge.
  std::vector<std::vector<AuxVertex>> hyperedges;

  std::size_t vertex_count() const { return 2 * host_edges.size(); }
  std::size_t edge_count() const { return hyperedges.size(); }
};

/// Every copy of H in K_n contributes its edge set tagged red when it has
/// >= alpha(H) vertices in A, and tagged blue when it has >= alpha(H) in B.
AuxHypergraph build_aux_hypergraph(std::size_t n, const VertexSet& a, const VertexSet& b,
                                   const PatternStats& h, double budget = kDefaultBudget);

/// Number of hyperedges containing U (0 when U holds both colours of an edge).
std::uint64_t aux_degree(const AuxHypergraph& aux, std::span<const AuxVertex> u);

/// Projection of W onto the edges of K_n.
Graph shadow_graph(const AuxHypergraph& aux, std::span<const AuxVertex> w);

struct AuxDegreeRow {
  std::size_t j = 0;
  std::uint64_t delta = 0;  // max j-degree
  double bound = 0.0;       // e(H)! tau^(j-1) n^(k-2)
  bool pass = false;
};

struct AuxDegreeReport {
  std::vector<AuxDegreeRow> rows;
  /// Max degree of a single aux vertex against e(H) n^(k-2).
  std::uint64_t max_vertex_degree = 0;
  double vertex_degree_bound = 0.0;
  bool vertex_degree_pass = false;
  /// e(aux) <= 2^e(H) n^k.
  double edge_count_bound = 0.0;
  bool edge_count_pass = false;
  /// Hyperedges holding both colours of one host edge (must be 0).
  std::size_t mixed_hyperedges = 0;
  /// Hyperedges whose size differs from e(H) (must be 0).
  std::size_t non_uniform_hyperedges = 0;

  bool all_pass() const;
};

AuxDegreeReport aux_degree_check(const AuxHypergraph& aux, const PatternStats& h);

// ---------------------------------------------------------------------------
// Clique supersaturation.

struct SupersatParams {
  std::size_t t = 3;
  std::size_t r = 3;
  std::size_t s = 0;
  double eta = 0.0;

  /// Throws std::invalid_argument unless t >= R >= 3.
  void validate() const;
};

struct SupersatReport {
  std::uint64_t count = 0;
  /// e(G) >= (1 - 1/t) n^2 / 2.
  bool hypothesis_holds = false;
  /// binom(t, R) (n / t)^R.
  double bound = 0.0;
  /// count >= bound, compared exactly as count t^R >= binom(t, R) n^R.
  bool meets_bound = false;
};

/// Number of K_R subgraphs of G (bitset clique enumeration). Throws
/// BudgetExceeded when binom(n, R) exceeds `budget`.
std::uint64_t count_cliques(const Graph& g, std::size_t r, double budget = kDefaultBudget);

SupersatReport clique_supersat_count(const Graph& g, const SupersatParams& params,
                                     double budget = kDefaultBudget);

/// Two-colour Ramsey numbers R(k, s) from a small table of known values.
std::optional<std::size_t> ramsey_number(std::size_t k, std::size_t s);

}  // namespace rtile
