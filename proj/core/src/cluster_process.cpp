#include "rtile/cluster_process.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "rtile/rng.hpp"

namespace rtile {
namespace {

void require(bool ok, const char* what) {
  if (!ok) throw std::invalid_argument(std::string("cluster_process: ") + what);
}

bool tiling_covers(const ColouredGraph& g, const PatternStats& h, const Tiling& t,
                   const VertexSet& side, Colour c) {
  return t.colour == c && is_valid_tiling(g, h, t, &side) && t.vertices(g.order()) == side;
}

// First `count` members of `order` that are still in `live`.
VertexSet take_live(const std::vector<Vertex>& order, const VertexSet& live, std::size_t count) {
  VertexSet out(live.universe());
  for (Vertex v : order) {
    if (out.size() == count) break;
    if (live.contains(v)) out.insert(v);
  }
  return out;
}

Tiling slice(const Tiling& t, std::size_t from, std::size_t to) {
  Tiling out{t.colour, {}};
  out.copies.assign(t.copies.begin() + static_cast<std::ptrdiff_t>(from),
                    t.copies.begin() + static_cast<std::ptrdiff_t>(to));
  return out;
}

}  // namespace

ClusterOutcome cluster_process(const ColouredGraph& g, const PatternStats& h, const VertexSet& x,
                               const VertexSet& y, double eta, const Tiling& blue_tiling_x,
                               const Tiling& red_tiling_y, const ProcessOptions& options) {
  const std::size_t n = g.order();
  const std::size_t k = h.k();
  require(k >= 3, "pattern needs at least 3 vertices");
  require(eta > 0.0, "eta must be positive");
  require(x.universe() == n && y.universe() == n, "sets must live in the host's vertex universe");
  require(!x.intersects(y), "X and Y must be disjoint");

  if (eta >= 1.0) {
    const VertexSet members = x | y;
    require(!members.empty(), "X u Y must be nonempty");
    ClusterSuccess done;
    done.certificate.members = members;
    done.certificate.eta = eta;
    done.certificate.red = is_valid_tiling(g, h, red_tiling_y, &members) &&
                                   red_tiling_y.colour == Colour::red
                               ? red_tiling_y
                               : Tiling{Colour::red, {}};
    done.certificate.blue = is_valid_tiling(g, h, blue_tiling_x, &members) &&
                                    blue_tiling_x.colour == Colour::blue
                                ? blue_tiling_x
                                : Tiling{Colour::blue, {}};
    done.assembly = AssemblyCase::degenerate;
    done.best_eta = achieved_eta(h, done.certificate);
    done.run.s = x.size();
    done.run.seed = options.seed;
    return done;
  }

  const std::size_t s = x.size();
  require(y.size() == s, "|X| must equal |Y|");
  require(s % k == 0, "|X| must be a multiple of k");
  require(tiling_covers(g, h, blue_tiling_x, x, Colour::blue), "blue tiling must cover X");
  require(tiling_covers(g, h, red_tiling_y, y, Colour::red), "red tiling must cover Y");
  const std::size_t per_side = s / k;
  const std::size_t q = per_side / 2;
  require(q >= 1, "each side needs at least two tiling copies");

  ProcessRun run;
  run.s = s;
  run.copies_per_half = q;
  run.seed = options.seed;
  run.loop_guard = std::max<std::size_t>(
      1, static_cast<std::size_t>(std::ceil(eta * eta * static_cast<double>(s) - 1e-12)));

  const Tiling x1_tiling = slice(blue_tiling_x, 0, q);
  const Tiling x2_tiling = slice(blue_tiling_x, q, per_side);
  const Tiling y1_tiling = slice(red_tiling_y, 0, q);
  const Tiling y2_tiling = slice(red_tiling_y, q, per_side);
  run.x1 = x1_tiling.vertices(n);
  run.y1 = y1_tiling.vertices(n);

  SplitMix64 rng(options.seed);
  std::vector<Vertex> order_x = run.x1.to_vector();
  std::vector<Vertex> order_y = run.y1.to_vector();
  shuffle(std::span<Vertex>(order_x), rng);
  shuffle(std::span<Vertex>(order_y), rng);

  ProcessState& st = run.state;
  st.a_x = run.x1;
  st.a_y = run.y1;
  st.x_star = VertexSet(n);
  st.y_star = VertexSet(n);
  std::vector<VertexSet> y_contrib;  // V(H') n U for each red step
  std::vector<VertexSet> x_contrib;  // V(H') n W for each blue step
  std::vector<EmbeddedCopy> red_copies;
  std::vector<EmbeddedCopy> blue_copies;

  const std::size_t guard = run.loop_guard;
  while (std::min(st.a_x.size(), st.a_y.size()) >= guard) {
    const VertexSet w = take_live(order_x, st.a_x, guard);
    const VertexSet u = take_live(order_y, st.a_y, guard);
    const bool blue_first = options.randomize_probe_order && rng.coin();
    auto probe = richness_probe(g, h, w, u, blue_first);
    if (!probe) return ClusterFailure{std::move(run)};

    const VertexSet used = probe->copy.vertices(n);
    ProcessStep step;
    step.copy = probe->copy;
    step.removed_from_ax = used.count_common(st.a_x);
    step.removed_from_ay = used.count_common(st.a_y);
    if (probe->side_hit == Side::x) {
      step.kind = StepKind::red_hits_w;
      const VertexSet gained = used & u;
      st.y_star |= gained;
      y_contrib.push_back(gained);
      red_copies.push_back(probe->copy);
      ++st.t_x;
    } else {
      step.kind = StepKind::blue_hits_u;
      const VertexSet gained = used & w;
      st.x_star |= gained;
      x_contrib.push_back(gained);
      blue_copies.push_back(probe->copy);
      ++st.t_y;
    }
    st.a_x -= used;
    st.a_y -= used;
    run.steps.push_back(std::move(step));
  }
  run.y_exhausted = st.a_x.size() >= guard;

  ClusterSuccess done;
  ClusterCertificate& cert = done.certificate;
  cert.eta = eta;
  cert.red.colour = Colour::red;
  cert.blue.colour = Colour::blue;
  if (st.t_x >= q) {
    done.assembly = AssemblyCase::x_side_full;
    cert.members = run.x1;
    for (std::size_t i = 0; i < q; ++i) cert.members |= y_contrib[i];
    cert.red.copies.assign(red_copies.begin(), red_copies.begin() + static_cast<std::ptrdiff_t>(q));
    cert.blue = x1_tiling;
  } else if (st.t_y >= q) {
    done.assembly = AssemblyCase::y_side_full;
    cert.members = run.y1;
    for (std::size_t i = 0; i < q; ++i) cert.members |= x_contrib[i];
    cert.blue.copies.assign(blue_copies.begin(),
                            blue_copies.begin() + static_cast<std::ptrdiff_t>(q));
    cert.red = y1_tiling;
  } else if (!run.y_exhausted) {
    done.assembly = AssemblyCase::completion;
    const Tiling z = slice(y2_tiling, 0, q - st.t_x);
    cert.members = run.x1 | st.y_star | z.vertices(n);
    cert.red.copies = red_copies;
    cert.red.copies.insert(cert.red.copies.end(), z.copies.begin(), z.copies.end());
    cert.blue = x1_tiling;
  } else {
    done.assembly = AssemblyCase::completion;
    const Tiling z = slice(x2_tiling, 0, q - st.t_y);
    cert.members = run.y1 | st.x_star | z.vertices(n);
    cert.blue.copies = blue_copies;
    cert.blue.copies.insert(cert.blue.copies.end(), z.copies.begin(), z.copies.end());
    cert.red = y1_tiling;
  }
  done.best_eta = achieved_eta(h, cert);
  done.run = std::move(run);
  return done;
}

std::vector<std::string> audit_process(const PatternStats& h, const ProcessRun& run,
                                       const ClusterSuccess* success, double eta) {
  std::vector<std::string> issues;
  const std::size_t k = h.k();
  const std::size_t alpha = h.alpha();
  const std::size_t n = run.x1.universe();
  auto flag = [&](std::size_t step, const std::string& what) {
    issues.push_back("step " + std::to_string(step) + ": " + what);
  };
  if (success && success->assembly == AssemblyCase::degenerate) return issues;

  VertexSet a_x = run.x1;
  VertexSet a_y = run.y1;
  VertexSet x_star(n);
  VertexSet y_star(n);
  std::size_t t_x = 0;
  std::size_t t_y = 0;
  std::size_t blue_removed_from_ax = 0;
  std::size_t red_removed_from_ay = 0;

  for (std::size_t i = 0; i < run.steps.size(); ++i) {
    const ProcessStep& step = run.steps[i];
    if (std::min(a_x.size(), a_y.size()) < run.loop_guard) flag(i, "ran below the loop guard");
    const VertexSet used = step.copy.vertices(n);
    if (!used.is_subset_of(a_x | a_y)) flag(i, "copy leaves A_X u A_Y");
    const std::size_t rx = used.count_common(a_x);
    const std::size_t ry = used.count_common(a_y);
    if (rx + ry != k) flag(i, "removed " + std::to_string(rx + ry) + " vertices, expected k");
    if (rx != step.removed_from_ax || ry != step.removed_from_ay)
      flag(i, "recorded removals disagree with replay");
    if (step.kind == StepKind::red_hits_w) {
      if (step.copy.colour != Colour::red) flag(i, "step-2 copy is not red");
      if (rx < alpha) flag(i, "red copy meets A_X in fewer than alpha vertices");
      y_star |= used & a_y;
      red_removed_from_ay += ry;
      ++t_x;
    } else {
      if (step.copy.colour != Colour::blue) flag(i, "step-3 copy is not blue");
      if (ry < alpha) flag(i, "blue copy meets A_Y in fewer than alpha vertices");
      if (rx > k - alpha) flag(i, "blue step removed more than k - alpha from A_X");
      x_star |= used & a_x;
      blue_removed_from_ax += rx;
      ++t_y;
    }
    a_x -= used;
    a_y -= used;

    const auto lost_x = static_cast<long long>(run.x1.size() - a_x.size());
    const auto lost_y = static_cast<long long>(run.y1.size() - a_y.size());
    const auto kk = static_cast<long long>(k);
    const auto ka = static_cast<long long>(k - alpha);
    const auto ys = static_cast<long long>(y_star.size());
    const auto xs = static_cast<long long>(x_star.size());
    if (lost_x != kk * static_cast<long long>(t_x) - ys + static_cast<long long>(blue_removed_from_ax))
      flag(i, "A_X accounting identity broken");
    if (kk * static_cast<long long>(t_x) - ys + ka * static_cast<long long>(t_y) < lost_x)
      flag(i, "A_X accounting inequality broken");
    if (lost_y != kk * static_cast<long long>(t_y) - xs + static_cast<long long>(red_removed_from_ay))
      flag(i, "A_Y accounting identity broken");
    if (kk * static_cast<long long>(t_y) - xs + ka * static_cast<long long>(t_x) < lost_y)
      flag(i, "A_Y accounting inequality broken");
    if (x_star.intersects(a_x | a_y) || y_star.intersects(a_x | a_y))
      flag(i, "X* or Y* meets the live sets");
  }

  const ProcessState& st = run.state;
  if (st.a_x != a_x || st.a_y != a_y || st.x_star != x_star || st.y_star != y_star ||
      st.t_x != t_x || st.t_y != t_y)
    issues.push_back("final state disagrees with replay");
  if (!success) return issues;

  if (std::min(a_x.size(), a_y.size()) >= run.loop_guard)
    issues.push_back("process stopped while both live sets met the guard");
  if (run.y_exhausted != (a_x.size() >= run.loop_guard))
    issues.push_back("exhausted side misreported");

  const std::size_t q = run.copies_per_half;
  const double t_size = static_cast<double>(success->certificate.members.size());
  const double guard_real = eta * eta * static_cast<double>(run.s);
  switch (success->assembly) {
    case AssemblyCase::x_side_full:
    case AssemblyCase::y_side_full:
      if (t_size > static_cast<double>(q * (2 * k - alpha)))
        issues.push_back("|T| exceeds q(2k - alpha) in a full-side assembly");
      break;
    case AssemblyCase::completion: {
      const bool swapped = run.y_exhausted;
      const std::size_t star = swapped ? x_star.size() : y_star.size();
      const std::size_t steps = swapped ? t_y : t_x;
      const auto expected = static_cast<long long>(2 * q * k + star) -
                            static_cast<long long>(k * steps);
      if (static_cast<long long>(t_size) != expected)
        issues.push_back("|T| != s + |Y*| - k t_X");
      const double upper = static_cast<double>(2 * q * k) - static_cast<double>(alpha * q) +
                           guard_real;
      if (!(t_size < upper)) issues.push_back("|T| >= s - alpha s/(2k) + eta^2 s");
      break;
    }
    case AssemblyCase::degenerate: break;
  }
  return issues;
}

}  // namespace rtile
