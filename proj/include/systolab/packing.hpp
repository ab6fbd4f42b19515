#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "systolab/cover.hpp"
#include "systolab/surface.hpp"

namespace systolab {

struct BallSystem {
  std::vector<int> centers;
  std::vector<double> radii;
  double base_radius = 0.0;  // the common R of a greedy system, 0 otherwise
  bool maximal_certified = false;
  bool doubled_balls_cover = false;
};

// Greedy maximal system of disjoint open balls of radius R: scan vertices in
// ascending id, keep those at distance >= 2R from every kept center.
inline BallSystem greedy_ball_system(const Surface& s, double R) {
  require(R > 0, ErrorKind::InvalidInput, "radius must be positive");
  BallSystem out;
  out.base_radius = R;
  std::vector<double> nearest(s.vertex_count, kInf);
  for (int v = 0; v < s.vertex_count; ++v) {
    if (nearest[v] < 2 * R - tol::kCount) continue;
    out.centers.push_back(v);
    out.radii.push_back(R);
    auto d = vertex_distances(s, v, 2 * R);
    for (int u = 0; u < s.vertex_count; ++u) nearest[u] = std::min(nearest[u], d[u]);
  }
  out.maximal_certified = true;
  out.doubled_balls_cover = true;
  for (int u = 0; u < s.vertex_count; ++u) {
    if (nearest[u] >= 2 * R - tol::kCount && !std::binary_search(out.centers.begin(),
                                                                 out.centers.end(), u))
      out.maximal_certified = false;  // unreachable by construction
    if (!(nearest[u] < 2 * R + tol::kCount)) out.doubled_balls_cover = false;
  }
  return out;
}

// Abstract simplicial nerve of the system's balls at `factor` times their
// radii, with one vertex set per ball on the (subdivided) surface.
struct NerveComplex {
  int factor = 1;
  int dim_cap = 4;
  // simplices[d] holds the sorted (d+1)-tuples of ball indices present.
  std::vector<std::vector<std::vector<int>>> simplices;

  std::int64_t count(int dim) const {
    if (dim < 0 || dim >= static_cast<int>(simplices.size())) return 0;
    return static_cast<std::int64_t>(simplices[dim].size());
  }
};

inline NerveComplex build_nerve(const Surface& s, const BallSystem& sys, int factor,
                                int dim_cap = 4) {
  require(factor == 1 || factor == 2 || factor == 5, ErrorKind::InvalidInput,
          "factor must be 1, 2 or 5");
  int n = static_cast<int>(sys.centers.size());
  NerveComplex nerve;
  nerve.factor = factor;
  nerve.dim_cap = dim_cap;
  nerve.simplices.assign(dim_cap + 1, {});
  // Balls containing each surface vertex.
  std::vector<std::vector<int>> at_vertex(s.vertex_count);
  for (int i = 0; i < n; ++i) {
    double rho = factor * sys.radii[i];
    auto d = vertex_distances(s, sys.centers[i], rho);
    for (int u = 0; u < s.vertex_count; ++u)
      if (d[u] <= rho + tol::kCount) at_vertex[u].push_back(i);
  }
  std::vector<std::set<std::vector<int>>> seen(dim_cap + 1);
  std::vector<int> tuple;
  for (int u = 0; u < s.vertex_count; ++u) {
    const auto& balls = at_vertex[u];
    int m = static_cast<int>(balls.size());
    if (m == 0) continue;
    // All subsets of size <= dim_cap+1 witness simplices.
    auto rec = [&](auto&& self, int idx) -> void {
      if (!tuple.empty()) seen[tuple.size() - 1].insert(tuple);
      if (static_cast<int>(tuple.size()) == dim_cap + 1 || idx == m) return;
      for (int i = idx; i < m; ++i) {
        tuple.push_back(balls[i]);
        self(self, i + 1);
        tuple.pop_back();
      }
    };
    rec(rec, 0);
  }
  for (int d = 0; d <= dim_cap; ++d)
    nerve.simplices[d].assign(seen[d].begin(), seen[d].end());
  return nerve;
}

// ---------------------------------------------------------------------------
// (alpha, r)-admissible balls
// ---------------------------------------------------------------------------

struct AdmissibilityOptions {
  double epsilon = 0.0;  // lower bound on r, kept distinct from r itself
  int q = 8;             // geometric grid resolution: ratio 5^(1/q)
  double a_n = 0.1;      // configured value of the universal ball constant
};

struct AdmissibilityReport {
  int center = 0;
  double R = 0, alpha = 0, r = 0, R0 = 0;
  bool condition1 = false;
  std::vector<std::pair<double, bool>> condition2;  // (R', verdict)
  bool admissible = false;
  double m0_alpha = 0, c_n_alpha = 0;
  double inner_R = 0, outer_5R = 0;
};

// Certified verdicts from one distance field: condition 1 compares the
// outer bound at 5R against alpha times the inner bound at R (conservative
// for a "holds" answer); condition 2 uses the opposite sides.
inline AdmissibilityReport is_admissible(const Surface& s, int v, double R, double alpha,
                                         double r, double R0,
                                         const AdmissibilityOptions& opt = {}) {
  require(alpha > 25.0, ErrorKind::InvalidAlpha, "alpha must exceed 5^n = 25");
  require(R0 > 0 && opt.epsilon <= r + tol::kCount && r <= R + tol::kCount &&
              R <= R0 + tol::kCount,
          ErrorKind::InvalidRadii, "need epsilon <= r <= R <= R0");
  AdmissibilityReport rep;
  rep.center = v;
  rep.R = R;
  rep.alpha = alpha;
  rep.r = r;
  rep.R0 = R0;
  auto dist = vertex_distances(s, v, 5 * R0 + s.max_edge_len);
  BallAreaTable table(s, dist);
  rep.inner_R = table.inner(R);
  rep.outer_5R = table.outer(5 * R);
  rep.condition1 = rep.outer_5R <= alpha * rep.inner_R;
  bool cond2_all = true;
  if (R < R0 * (1.0 - tol::kInput)) {
    double ratio = std::pow(5.0, 1.0 / opt.q);
    for (double rp = R0; rp > R * (1.0 + tol::kInput); rp /= ratio) {
      bool ok = table.inner(5 * rp) >= alpha * table.outer(rp);
      rep.condition2.push_back({rp, ok});
      cond2_all = cond2_all && ok;
    }
    std::reverse(rep.condition2.begin(), rep.condition2.end());
  }
  rep.admissible = rep.condition1 && cond2_all;
  double vol = s.total_area;
  rep.m0_alpha = (std::log(vol) - 2 * std::log(R0) - std::log(opt.a_n)) /
                 (std::log(alpha) - 2 * std::log(5.0));
  rep.c_n_alpha = std::pow(5.0, -2.0 * rep.m0_alpha) * opt.a_n;
  return rep;
}

// Iterative greedy by descending admissible radius (ties by vertex id); the
// returned per-ball radii come from the geometric grid between r and R0.
inline BallSystem maximal_admissible_system(const Surface& s, double alpha, double r,
                                            double R0, const AdmissibilityOptions& opt = {}) {
  require(alpha > 25.0, ErrorKind::InvalidAlpha, "alpha must exceed 5^n = 25");
  require(r > 0 && r <= R0, ErrorKind::InvalidRadii, "need 0 < r <= R0");
  // Candidate radii: geometric grid of ratio 5^(1/q) from R0 down to r.
  std::vector<double> grid;
  double ratio = std::pow(5.0, 1.0 / opt.q);
  for (double rp = R0; rp >= r * (1.0 - tol::kInput); rp /= ratio) grid.push_back(rp);
  require(!grid.empty(), ErrorKind::InvalidRadii, "empty radius grid");

  // Admissible radii per vertex.
  std::vector<std::vector<double>> admissible(s.vertex_count);
  bool any = false;
  for (int v = 0; v < s.vertex_count; ++v) {
    auto dist = vertex_distances(s, v, 5 * R0 + s.max_edge_len);
    BallAreaTable table(s, dist);
    for (double R : grid) {
      bool cond1 = table.outer(5 * R) <= alpha * table.inner(R);
      bool cond2 = true;
      if (R < R0 * (1.0 - tol::kInput)) {
        for (double rp = R0; rp > R * (1.0 + tol::kInput); rp /= ratio)
          cond2 = cond2 && table.inner(5 * rp) >= alpha * table.outer(rp);
      }
      if (cond1 && cond2) {
        admissible[v].push_back(R);
        any = true;
      }
    }
    std::sort(admissible[v].rbegin(), admissible[v].rend());
  }
  require(any, ErrorKind::NoAdmissibleBall,
          "no (alpha,r)-admissible ball on this surface for r = " + std::to_string(r));

  BallSystem out;
  std::vector<double> allowed(s.vertex_count, kInf);  // max radius disjoint from chosen
  while (true) {
    int best_v = -1;
    double best_R = 0.0;
    for (int v = 0; v < s.vertex_count; ++v) {
      for (double R : admissible[v]) {
        if (R > allowed[v] + tol::kCount) continue;
        if (R > best_R + tol::kCount) {
          best_R = R;
          best_v = v;
        }
        break;  // radii sorted descending: first feasible is the best for v
      }
    }
    if (best_v < 0) break;
    out.centers.push_back(best_v);
    out.radii.push_back(best_R);
    auto d = vertex_distances(s, best_v, best_R + grid.front() + s.max_edge_len);
    for (int u = 0; u < s.vertex_count; ++u)
      allowed[u] = std::min(allowed[u], d[u] - best_R);
  }
  out.maximal_certified = true;
  // Doubled balls cover: every vertex lies within 2 R_j of some center.
  out.doubled_balls_cover = true;
  std::vector<double> cover_margin(s.vertex_count, kInf);
  for (std::size_t i = 0; i < out.centers.size(); ++i) {
    auto d = vertex_distances(s, out.centers[i], 2 * out.radii[i]);
    for (int u = 0; u < s.vertex_count; ++u)
      cover_margin[u] = std::min(cover_margin[u], d[u] - 2 * out.radii[i]);
  }
  for (int u = 0; u < s.vertex_count; ++u)
    if (!(cover_margin[u] <= tol::kCount)) out.doubled_balls_cover = false;
  return out;
}

// ---------------------------------------------------------------------------
// Nerve 1-skeleton realization
// ---------------------------------------------------------------------------

struct RealizedEdge {
  int i = 0, j = 0;
  double length = 0.0;
};

struct RealizedNerve {
  std::vector<RealizedEdge> edges;
  // (i, j, k, total boundary length) per nerve 2-simplex.
  std::vector<std::array<double, 4>> triangle_boundaries;
  double systole = 0.0;
  bool boundaries_below_systole = true;
};

// Maps each nerve edge (balls at factor * radius sharing a vertex) to a
// shortest path between the ball centers.  Requires every effective radius
// below sys/6, which keeps every realized 2-simplex boundary shorter than
// the systole.
inline RealizedNerve realize_nerve_edges(const Surface& s, const BallSystem& sys, int factor,
                                         double systole_hint = 0.0) {
  double sysv = systole_hint > 0 ? systole_hint : homotopy_systole(s).length;
  for (double R : sys.radii)
    require(factor * R < sysv / 6.0 - tol::kCount, ErrorKind::RadiusTooLarge,
            "effective ball radius must stay below sys/6");
  auto nerve = build_nerve(s, sys, factor, 2);
  int n = static_cast<int>(sys.centers.size());
  std::map<std::pair<int, int>, double> dist_between;
  std::vector<std::vector<double>> fields(n);
  double reach = 0.0;
  for (double R : sys.radii) reach = std::max(reach, 2.0 * factor * R);
  for (int i = 0; i < n; ++i) fields[i] = vertex_distances(s, sys.centers[i], reach);
  RealizedNerve out;
  out.systole = sysv;
  for (const auto& e : nerve.simplices[1]) {
    int i = e[0], j = e[1];
    double d = fields[i][sys.centers[j]];
    double bound = factor * (sys.radii[i] + sys.radii[j]);
    require(d <= bound + tol::kCount, ErrorKind::InvalidInput,
            "realized edge longer than the radius sum");
    dist_between[{i, j}] = d;
    out.edges.push_back({i, j, d});
  }
  for (const auto& t : nerve.simplices[2]) {
    double total = dist_between[{t[0], t[1]}] + dist_between[{t[1], t[2]}] +
                   dist_between[{t[0], t[2]}];
    out.triangle_boundaries.push_back({double(t[0]), double(t[1]), double(t[2]), total});
    if (!(total < sysv)) out.boundaries_below_systole = false;
  }
  return out;
}

}  // namespace systolab
