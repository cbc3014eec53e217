#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "rtile/tiling.hpp"

namespace rtile {

enum class StepKind : std::uint8_t {
  red_hits_w,   // red copy with >= alpha vertices in W
  blue_hits_u,  // blue copy with >= alpha vertices in U
};

struct ProcessStep {
  StepKind kind = StepKind::red_hits_w;
  EmbeddedCopy copy;
  std::size_t removed_from_ax = 0;
  std::size_t removed_from_ay = 0;
};

/// (A_X, A_Y, X*, Y*, t_X, t_Y).
struct ProcessState {
  VertexSet a_x;
  VertexSet a_y;
  VertexSet x_star;
  VertexSet y_star;
  std::size_t t_x = 0;
  std::size_t t_y = 0;
};

/// Everything needed to replay a run: the halves X1 and Y1, the loop guard
/// and every probe result in order.
struct ProcessRun {
  std::size_t s = 0;
  std::size_t copies_per_half = 0;  // q = floor((s/k) / 2)
  std::size_t loop_guard = 0;       // ceil(eta^2 s), at least 1
  std::uint64_t seed = 0;
  VertexSet x1;
  VertexSet y1;
  std::vector<ProcessStep> steps;
  ProcessState state;
  /// True when the loop stopped with |A_X| >= guard > |A_Y|, so the
  /// assembly ran with the roles of X and Y (and the colours) exchanged.
  bool y_exhausted = false;
};

enum class AssemblyCase : std::uint8_t {
  degenerate,  // eta >= 1: any nonempty coloured graph qualifies
  x_side_full, // t_X >= q: T = X1 u Y~
  y_side_full, // t_Y >= q: T = Y1 u X~
  completion,  // both below q: stored copies of the other half complete T
};

struct ClusterSuccess {
  ClusterCertificate certificate;
  AssemblyCase assembly = AssemblyCase::degenerate;
  double best_eta = 0.0;
  ProcessRun run;
};

/// A probe on (W, U) found no good copy; `run.state` is where it stopped.
struct ClusterFailure {
  ProcessRun run;
};

using ClusterOutcome = std::variant<ClusterSuccess, ClusterFailure>;

struct ProcessOptions {
  std::uint64_t seed = 0;
  /// Flip a seeded coin per iteration to decide which probe runs first.
  bool randomize_probe_order = false;
};

/// Builds an (H, eta)-cluster inside X u Y from a blue tiling covering X and
/// a red tiling covering Y (s/k copies each, s = |X| = |Y|).
///
/// X and Y are split along tiling copies into halves with floor((s/k)/2)
/// copies in X1 and Y1. The probe loop runs while
/// min(|A_X|, |A_Y|) >= ceil(eta^2 s); W and U are the first guard-many
/// surviving vertices of A_X and A_Y in a seeded shuffled order.
///
/// Throws std::invalid_argument on violated preconditions (k < 3, eta <= 0,
/// sets not disjoint or of different sizes, tilings not covering their side,
/// fewer than two copies per side).
ClusterOutcome cluster_process(const ColouredGraph& g, const PatternStats& h, const VertexSet& x,
                               const VertexSet& y, double eta, const Tiling& blue_tiling_x,
                               const Tiling& red_tiling_y, const ProcessOptions& options = {});

/// Replays `run` from X1 and Y1 and reports every broken invariant: step
/// copies inside the live sets with the right colour and hits, k vertices
/// removed per step, at most k - alpha removed from A_X by a blue step, the
/// accounting identity |X1| - |A_X| = k t_X - |Y*| + (A_X removals in blue
/// steps) and its inequality form after every step (and the mirrored pair
/// for Y), termination at the guard, and, for completion assemblies, the
/// exact size of T and its strict upper bound. Empty means clean.
std::vector<std::string> audit_process(const PatternStats& h, const ProcessRun& run,
                                       const ClusterSuccess* success = nullptr,
                                       double eta = 0.0);

}  // namespace rtile
