#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <vector>

#include "systolab/homology.hpp"
#include "systolab/surface.hpp"

namespace systolab {

// ---------------------------------------------------------------------------
// Lazy universal-cover development
// ---------------------------------------------------------------------------
//
// Cover vertices are created on demand.  Each cover vertex keeps one slot
// per position of its base vertex's link cycle; the occupant of a slot is
// the cover vertex lying at that link position.  Gluing a triangle fills
// mutually consistent slots; when two partial fans around the same cover
// point meet, their slot sets collide and the two records are merged
// (union-find).  A Dijkstra loop drives the expansion: popping a vertex
// within the requested radius completes its star first, so every shortest
// path inside the radius exists in the developed region.

class CoverBuilder {
 public:
  CoverBuilder(const Surface& s, const Limits& lim = global_limits()) : s_(s), lim_(lim) {
    s_.ensure_links();
  }

  const Surface& surface() const { return s_; }

  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }

  int base_of(int cv) const { return base_[find(cv)]; }
  double dist_of(int cv) const { return dist_[find(cv)]; }
  std::int64_t vertex_records() const { return static_cast<std::int64_t>(base_.size()); }

  // Number of distinct (canonical) cover vertices.
  std::int64_t canonical_count() const {
    std::int64_t n = 0;
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i)
      if (parent_[i] == i) ++n;
    return n;
  }

  // Creates the base lift and develops everything within graph distance
  // `radius` of it, with exact distances.
  int develop(int base_vertex, double radius) {
    root_ = create_vertex(base_vertex);
    set_dist(root_, 0.0, -1);
    run(radius, false, kInf);
    return root_;
  }

  // Split-pair scan for the shortest noncontractible loop through the base
  // vertex.  Two settled distinct lifts of a common base vertex close a
  // noncontractible loop through the root of length (sum of their
  // distances); scanning to half the current bound plus one edge detects
  // the minimum exactly.  On return, pair_sum() is that minimum when it is
  // below `bound`, and +inf otherwise.
  void develop_for_loop_search(int base_vertex, double bound) {
    root_ = create_vertex(base_vertex);
    set_dist(root_, 0.0, -1);
    run(kInf, true, bound / 2.0 + s_.max_edge_len + tol::kCount);
  }

  double pair_sum() const { return pair_sum_; }
  std::pair<int, int> pair_ids() const { return {pair_a_, pair_b_}; }

  // All canonical lifts of `b` with settled distance <= L (sorted by
  // distance, then id).
  std::vector<std::pair<double, int>> lifts_of(int b, double L) const {
    std::vector<std::pair<double, int>> out;
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i) {
      if (parent_[i] != i || base_[i] != b) continue;
      if (settled_[i] && dist_[i] <= L + tol::kCount) out.push_back({dist_[i], i});
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Walks one base edge from a cover vertex whose star is complete.
  int step(int cv, int next_base) {
    cv = find(cv);
    complete_star(cv);
    cv = find(cv);
    int slot = s_.slot_of_neighbor(base_[cv], next_base);
    int occ = slot_at(cv, slot);
    require(occ >= 0, ErrorKind::InvalidInput, "cover step into undeveloped slot");
    return find(occ);
  }

  int root() const { return find(root_); }

  // Shortest settled path from the root to a settled cover vertex, as base
  // vertex ids.
  std::vector<int> path_from_root(int cv) const {
    std::vector<int> out;
    int x = find(cv);
    while (x >= 0) {
      out.push_back(base_[x]);
      x = pred_[x] < 0 ? -1 : find(pred_[x]);
    }
    std::reverse(out.begin(), out.end());
    return out;
  }

 private:
  const Surface& s_;
  Limits lim_;
  int root_ = -1;

  std::vector<int> parent_;
  std::vector<int> base_;
  std::vector<double> dist_;
  std::vector<int> pred_;
  std::vector<char> star_done_;
  std::vector<char> settled_;
  std::vector<std::int64_t> slot_off_;
  std::vector<int> slots_;

  // Split-pair tracking (first settled lift per base vertex).
  std::vector<int> first_lift_;
  std::vector<double> first_dist_;
  double pair_sum_ = kInf;
  int pair_a_ = -1, pair_b_ = -1;

  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq_;

  int slot_at(int cv, int slot) const {
    int occ = slots_[slot_off_[cv] + slot];
    return occ < 0 ? -1 : find(occ);
  }

  int create_vertex(int b) {
    require(static_cast<std::int64_t>(base_.size()) < lim_.max_cover_vertices,
            ErrorKind::ResourceLimit, "cover vertex cap exceeded");
    int id = static_cast<int>(base_.size());
    parent_.push_back(id);
    base_.push_back(b);
    dist_.push_back(kInf);
    pred_.push_back(-1);
    star_done_.push_back(0);
    settled_.push_back(0);
    slot_off_.push_back(slots_.size());
    slots_.resize(slots_.size() + s_.degree(b), -1);
    return id;
  }

  void set_dist(int cv, double d, int from) {
    cv = find(cv);
    if (d < dist_[cv] - 1e-15) {
      dist_[cv] = d;
      pred_[cv] = from;
      pq_.push({d, cv});
    }
  }

  // Union of two records of the same cover point.  Slot conflicts recurse
  // through a work list.
  void merge(int a, int b) {
    std::vector<std::pair<int, int>> work = {{a, b}};
    while (!work.empty()) {
      auto [x, y] = work.back();
      work.pop_back();
      x = find(x);
      y = find(y);
      if (x == y) continue;
      require(base_[x] == base_[y], ErrorKind::InvalidInput, "merging lifts of distinct bases");
      // Canonical record: smaller distance, then smaller id.
      if (std::make_pair(dist_[y], y) < std::make_pair(dist_[x], x)) std::swap(x, y);
      parent_[y] = x;
      int deg = s_.degree(base_[x]);
      for (int j = 0; j < deg; ++j) {
        int sy = slots_[slot_off_[y] + j];
        if (sy < 0) continue;
        int sx = slots_[slot_off_[x] + j];
        if (sx < 0)
          slots_[slot_off_[x] + j] = sy;
        else if (find(sx) != find(sy))
          work.push_back({sx, sy});
      }
      if (star_done_[y]) star_done_[x] = 1;
      if (settled_[y]) settled_[x] = 1;
      pq_.push({dist_[x], x});  // re-relax through the merged adjacency
    }
  }

  // Declares `w` the occupant of (cv, slot); symmetric slot set on w.
  void occupy(int cv, int slot, int w) {
    cv = find(cv);
    w = find(w);
    int cur = slot_at(cv, slot);
    if (cur >= 0) {
      if (cur != w) merge(cur, w);
      return;
    }
    slots_[slot_off_[cv] + slot] = w;
    int back = s_.slot_of_neighbor(base_[w], base_[cv]);
    int curback = slot_at(w, back);
    if (curback < 0)
      slots_[slot_off_[w] + back] = cv;
    else if (curback != cv)
      merge(curback, cv);
  }

  // Ensures every link slot of cv is occupied and every star triangle of
  // its base is glued around it.
  void complete_star(int cv) {
    cv = find(cv);
    if (star_done_[cv]) return;
    int b = base_[cv];
    int deg = s_.degree(b);
    int j0 = 0;
    while (j0 < deg && slot_at(cv, j0) < 0) ++j0;
    if (j0 == deg) {
      // isolated root: seed slot 0 with a fresh lift
      int c0 = s_.link_vertex(b, 0);
      int w = create_vertex(c0);
      occupy(cv, 0, w);
      cv = find(cv);
      j0 = 0;
    }
    for (int stepi = 0; stepi < deg; ++stepi) {
      int j = (j0 + stepi) % deg;
      int jn = (j + 1) % deg;
      cv = find(cv);
      // wj exists: either it started the walk or the previous step filled it.
      int wj = slot_at(cv, j);
      require(wj >= 0, ErrorKind::InvalidInput, "star walk lost its fan");
      int cj = s_.link_vertex(b, j);
      int cjn = s_.link_vertex(b, jn);
      int x = slot_at(cv, jn);
      if (x < 0) {
        // The neighbor fan may already hold the lift of cjn next to us.
        x = slot_at(wj, s_.slot_of_neighbor(cj, cjn));
      }
      if (x < 0) x = create_vertex(cjn);
      occupy(cv, jn, x);
      cv = find(cv);
      // Far edge of the glued triangle: (cj, cjn) between the two fans.
      int wj2 = slot_at(cv, j);
      int x2 = slot_at(cv, jn);
      occupy(wj2, s_.slot_of_neighbor(cj, cjn), x2);
      cv = find(cv);
    }
    star_done_[find(cv)] = 1;
  }

  // Dijkstra expansion.  Stops when the frontier passes `radius` (exact
  // ball development).  In pair mode the scan also stops once the frontier
  // passes `hard_stop` or the current best pair sum, whichever is smaller:
  // later pairs cannot beat either.
  void run(double radius, bool pair_mode, double hard_stop) {
    if (pair_mode) {
      first_lift_.assign(s_.vertex_count, -1);
      first_dist_.assign(s_.vertex_count, kInf);
    }
    while (!pq_.empty()) {
      auto [d, id] = pq_.top();
      pq_.pop();
      int cv = find(id);
      if (d > dist_[cv] + 1e-15) continue;
      if (d > radius + tol::kCount + 1e-15) break;
      if (pair_mode && d > std::min(hard_stop, pair_sum_) + 1e-15) break;
      // Complete the star before anything else: fan conflicts discovered
      // here may merge this record with an earlier lift.
      complete_star(cv);
      cv = find(cv);
      if (dist_[cv] < d - 1e-15) continue;  // improved during a merge; re-popped later
      bool newly_settled = !settled_[cv];
      settled_[cv] = 1;
      if (pair_mode && newly_settled) {
        int b = base_[cv];
        if (first_lift_[b] < 0 || find(first_lift_[b]) == cv) {
          if (first_lift_[b] < 0) {
            first_lift_[b] = cv;
            first_dist_[b] = d;
          }
        } else {
          double cand = first_dist_[b] + d;
          if (cand < pair_sum_) {
            pair_sum_ = cand;
            pair_a_ = find(first_lift_[b]);
            pair_b_ = cv;
          }
        }
      }
      int b = base_[cv];
      int deg = s_.degree(b);
      for (int j = 0; j < deg; ++j) {
        int w = slot_at(cv, j);
        double nd = d + s_.link_edge_len(b, j);
        set_dist(w, nd, cv);
      }
    }
  }
};

// ---------------------------------------------------------------------------
// Covering operations
// ---------------------------------------------------------------------------

struct CoverRegion {
  int base_vertex = 0;
  double radius = 0.0;
  std::vector<std::pair<double, int>> lifts;  // (distance, cover id) of the base vertex
  std::int64_t cover_vertex_count = 0;
};

inline CoverRegion develop(const Surface& s, int v, double L,
                           const Limits& lim = global_limits()) {
  require(L >= 0, ErrorKind::InvalidInput, "radius must be nonnegative");
  CoverBuilder cb(s, lim);
  cb.develop(v, L);
  CoverRegion out;
  out.base_vertex = v;
  out.radius = L;
  out.lifts = cb.lifts_of(v, L);
  out.cover_vertex_count = cb.canonical_count();
  return out;
}

// P_v(L): based homotopy classes with a representative of length <= L,
// counted as lifts of v within cover distance L.
inline std::int64_t loop_class_count(const Surface& s, int v, double L,
                                     const Limits& lim = global_limits()) {
  return static_cast<std::int64_t>(develop(s, v, L, lim).lifts.size());
}

// True iff the closed walk lifts to a closed walk in the universal cover.
inline bool is_contractible(const Surface& s, const Cycle& c,
                            const Limits& lim = global_limits()) {
  if (c.vertices.size() <= 1) return true;
  CoverBuilder cb(s, lim);
  int cur = cb.develop(c.vertices.front(), 0.0);
  for (std::size_t i = 1; i < c.vertices.size(); ++i) cur = cb.step(cur, c.vertices[i]);
  return cb.find(cur) == cb.root();
}

// Shortest noncontractible loop through a fixed base vertex, searched out to
// `bound` (pass a known valid upper bound, e.g. any noncontractible loop
// length).  Returns +inf if every loop through v is longer than `bound`.
struct BasedLoopResult {
  double length = kInf;
  std::vector<int> walk;
};

inline BasedLoopResult based_systole_search(const Surface& s, int v, double bound,
                                            const Limits& lim = global_limits()) {
  CoverBuilder cb(s, lim);
  cb.develop_for_loop_search(v, bound);
  BasedLoopResult out;
  if (cb.pair_sum() == kInf) return out;
  out.length = cb.pair_sum();
  auto [a, b] = cb.pair_ids();
  auto pa = cb.path_from_root(a);  // v .. x
  auto pb = cb.path_from_root(b);  // v .. x (other lift)
  out.walk = pa;
  std::reverse(pb.begin(), pb.end());  // x .. v
  out.walk.insert(out.walk.end(), pb.begin() + 1, pb.end());
  return out;
}

// Exact edge-graph homotopy systole: minimum over base vertices of the
// shortest noncontractible based loop, with the Z2-homology systole as the
// certified search radius.
inline SystoleResult homotopy_systole(const Surface& s, const Limits& lim = global_limits()) {
  auto e = euler_genus(s);
  require(e.chi != 2, ErrorKind::SimplyConnected, "sphere has no noncontractible loop");
  SystoleResult z2 = homology_systole_z2(s);
  double best = z2.length;
  Cycle best_rep = z2.representative;
  for (int v = 0; v < s.vertex_count; ++v) {
    auto r = based_systole_search(s, v, best, lim);
    if (r.length < best - 1e-15) {
      best = r.length;
      best_rep = make_cycle(s, r.walk);
    }
  }
  SystoleResult out;
  out.kind = SystoleKind::Homotopy;
  out.length = best;
  out.representative = best_rep;
  out.certified = true;
  out.search_radius = z2.length;
  return out;
}

}  // namespace systolab
