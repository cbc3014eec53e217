#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "rtile/graph.hpp"

namespace rtile {

/// Exact non-negative-denominator rational kept in lowest terms.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string to_string() const;

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ <=> b.num_ * a.den_;
  }

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Default ceiling on pattern order for the exact brute-force searches.
inline constexpr std::size_t kPatternCeiling = 20;

/// max{(e(F)-1)/(v(F)-2) : F subgraph of H, v(F) >= 3}, or 1/2 when H has
/// fewer than two edges. Only induced subgraphs are scanned, since adding
/// edges on a fixed vertex set never lowers the ratio.
Rational m2_density(const Graph& h);

/// Size of a maximum independent set (exact branch and bound).
/// Throws std::invalid_argument when v(h) exceeds `ceiling`.
std::size_t independence_number(const Graph& h, std::size_t ceiling = kPatternCeiling);

inline constexpr std::size_t kAutomorphismCeiling = 10;

/// Number of automorphisms of h (backtracking over degree-preserving maps).
std::uint64_t count_automorphisms(const Graph& h);

/// A pattern graph H with its cached invariants.
class PatternStats {
 public:
  PatternStats() = default;
  explicit PatternStats(Graph pattern, std::string name = {});

  const Graph& graph() const { return pattern_; }
  const std::string& name() const { return name_; }
  std::size_t k() const { return pattern_.order(); }
  std::size_t alpha() const { return alpha_; }
  const Rational& m2() const { return m2_; }
  std::size_t ell() const { return pattern_.size(); }
  /// |Aut(H)|; 0 when H has more than kAutomorphismCeiling vertices.
  std::uint64_t automorphism_count() const { return automorphism_count_; }

  /// max{m2(H), 1}.
  Rational threshold_density() const;
  /// 1 / max{m2(H), 1}, the exponent in p = C n^{-1/max{m2,1}}.
  double threshold_exponent() const { return 1.0 / threshold_density().to_double(); }
  /// 2k - alpha.
  std::size_t tiling_denominator() const { return 2 * k() - alpha_; }

 private:
  Graph pattern_;
  std::string name_;
  std::size_t alpha_ = 0;
  Rational m2_;
  std::uint64_t automorphism_count_ = 0;
};

Graph complete_graph(std::size_t t);
Graph path_graph(std::size_t vertices);
Graph cycle_graph(std::size_t vertices);
Graph matching_graph(std::size_t edges);

/// Patterns by name: kT (clique), pT (path on T vertices), cT (cycle),
/// matching-T (T disjoint edges). Throws std::invalid_argument otherwise.
PatternStats named_pattern(std::string_view name);

/// Named pattern, or a graph file in the text format when `spec` is not a name.
PatternStats load_pattern(std::string_view spec);

}  // namespace rtile
