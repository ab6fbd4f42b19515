#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "systolab/core.hpp"

namespace systolab {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Robust Heron area (Kahan's ordering); throws on degenerate side triples.
inline double heron_area(double a, double b, double c) {
  require(a > 0 && b > 0 && c > 0, ErrorKind::InvalidInput, "edge lengths must be positive");
  double s[3] = {a, b, c};
  std::sort(s, s + 3);  // s[2] >= s[1] >= s[0]
  double x = s[2], y = s[1], z = s[0];
  double expr = (x + (y + z)) * (z - (x - y)) * (z + (x - y)) * (x + (y - z));
  double scale = x * x;
  require(expr > tol::kConservation * scale * scale, ErrorKind::DegenerateTriangle,
          "Heron expression nonpositive for sides (" + std::to_string(a) + ", " +
              std::to_string(b) + ", " + std::to_string(c) + ")");
  return 0.25 * std::sqrt(expr);
}

// Raw input: ordered vertex triples plus, per triangle, the length of the
// edge opposite each corner.
struct SurfaceInput {
  std::vector<std::array<int, 3>> triangles;
  std::vector<std::array<double, 3>> lengths;
};

struct ValidationIssue {
  ErrorKind kind;
  std::string detail;
};

struct ValidationReport {
  bool ok = false;
  std::vector<ValidationIssue> issues;

  std::string summary() const {
    std::string s;
    for (const auto& i : issues) {
      if (!s.empty()) s += "; ";
      s += std::string(error_kind_name(i.kind)) + ": " + i.detail;
    }
    return s.empty() ? "ok" : s;
  }
};

// A validated closed piecewise-flat surface.  Immutable after construction;
// all operations on it are pure.
class Surface {
 public:
  int vertex_count = 0;
  std::vector<std::array<int, 3>> tri;
  std::vector<std::array<double, 3>> tri_len;  // canonical, shared edges agree exactly
  std::vector<double> tri_area;
  double total_area = 0.0;
  double max_edge_len = 0.0;
  double min_edge_len = 0.0;

  // Edge tables.  edge i joins edge_u[i] < edge_v[i]; edge_tri are its two
  // incident triangles; tri_edge[t][c] is the edge opposite corner c.
  std::vector<int> edge_u, edge_v;
  std::vector<double> edge_len;
  std::vector<std::array<int, 2>> edge_tri;
  std::vector<std::array<int, 3>> tri_edge;

  // CSR adjacency of the 1-skeleton (each edge appears in both directions).
  std::vector<std::int64_t> adj_off;
  std::vector<int> adj_v;
  std::vector<double> adj_w;
  std::vector<int> adj_e;

  // Per-vertex link cycles (built on demand): link vertices in cyclic order,
  // the star triangle sitting between consecutive link vertices, and the
  // edge id toward each link vertex.
  mutable std::vector<std::int64_t> link_off;
  mutable std::vector<int> link_vert;
  mutable std::vector<int> link_tri;
  mutable std::vector<int> link_edge;
  mutable bool links_built = false;

  int edge_count() const { return static_cast<int>(edge_u.size()); }
  int triangle_count() const { return static_cast<int>(tri.size()); }

  int degree(int v) const { return static_cast<int>(link_off[v + 1] - link_off[v]); }
  int link_vertex(int v, int slot) const { return link_vert[link_off[v] + slot]; }
  int star_triangle(int v, int slot) const { return link_tri[link_off[v] + slot]; }
  double link_edge_len(int v, int slot) const { return edge_len[link_edge[link_off[v] + slot]]; }

  int slot_of_neighbor(int v, int nb) const {
    for (std::int64_t i = link_off[v]; i < link_off[v + 1]; ++i)
      if (link_vert[i] == nb) return static_cast<int>(i - link_off[v]);
    fail(ErrorKind::InvalidInput, "vertices are not adjacent");
  }

  int find_edge(int u, int v) const {
    for (std::int64_t i = adj_off[u]; i < adj_off[u + 1]; ++i)
      if (adj_v[i] == v) return adj_e[i];
    return -1;
  }

  void ensure_links() const;
};

struct EulerData {
  int chi = 0;
  int genus = 0;
  bool orientable = true;
};

namespace detail {

struct EdgeRec {
  std::int64_t key;
  int tri;
  int corner;  // corner opposite the edge
  double len;
};

inline std::int64_t edge_key(int u, int v, int V) {
  if (u > v) std::swap(u, v);
  return static_cast<std::int64_t>(u) * V + v;
}

// Walks the star of every vertex and appends link cycles; returns false on
// the first vertex whose link is not a single cycle (issue recorded).
inline bool build_links(const Surface& s, std::vector<ValidationIssue>* issues) {
  int V = s.vertex_count;
  std::vector<int> deg(V, 0);
  for (const auto& t : s.tri)
    for (int c = 0; c < 3; ++c) ++deg[t[c]];
  s.link_off.assign(V + 1, 0);
  for (int v = 0; v < V; ++v) s.link_off[v + 1] = s.link_off[v] + deg[v];
  s.link_vert.assign(s.link_off[V], -1);
  s.link_tri.assign(s.link_off[V], -1);
  s.link_edge.assign(s.link_off[V], -1);

  // For each (vertex, incident edge) remember the one or two triangles.
  // Incident edges of v are recoverable from the CSR adjacency.
  std::vector<int> first_tri(V, -1);
  for (int t = 0; t < s.triangle_count(); ++t)
    for (int c = 0; c < 3; ++c)
      if (first_tri[s.tri[t][c]] < 0) first_tri[s.tri[t][c]] = t;

  bool all_ok = true;
  std::vector<int> seen_stamp(s.triangle_count(), -1);
  for (int v = 0; v < V; ++v) {
    int t0 = first_tri[v];
    if (t0 < 0) {
      if (issues) issues->push_back({ErrorKind::NonManifoldVertex,
                                     "vertex " + std::to_string(v) + " has empty star"});
      all_ok = false;
      continue;
    }
    int c0 = 0;
    while (s.tri[t0][c0] != v) ++c0;
    int start = s.tri[t0][(c0 + 1) % 3];
    int cur = s.tri[t0][(c0 + 2) % 3];
    int t = t0;
    std::int64_t base = s.link_off[v];
    int count = 0;
    s.link_vert[base + count] = start;
    s.link_tri[base + count] = t0;
    s.link_edge[base + count] = s.find_edge(v, start);
    ++count;
    seen_stamp[t0] = v;
    // Rotate: the next star triangle is the other triangle on edge (v, cur).
    while (cur != start && count <= deg[v]) {
      int e = s.find_edge(v, cur);
      int tn = (s.edge_tri[e][0] == t) ? s.edge_tri[e][1] : s.edge_tri[e][0];
      if (tn < 0 || seen_stamp[tn] == v) break;
      seen_stamp[tn] = v;
      int cn = 0;
      while (s.tri[tn][cn] != v) ++cn;
      int a = s.tri[tn][(cn + 1) % 3], b = s.tri[tn][(cn + 2) % 3];
      int nxt = (a == cur) ? b : a;
      s.link_vert[base + count] = cur;
      s.link_tri[base + count] = tn;
      s.link_edge[base + count] = e;
      ++count;
      t = tn;
      cur = nxt;
    }
    if (cur != start || count != deg[v]) {
      if (issues) issues->push_back({ErrorKind::NonManifoldVertex,
                                     "link of vertex " + std::to_string(v) +
                                         " is not a single cycle"});
      all_ok = false;
    }
  }
  return all_ok;
}

}  // namespace detail

inline void Surface::ensure_links() const {
  if (links_built) return;
  bool ok = detail::build_links(*this, nullptr);
  require(ok, ErrorKind::NonManifoldVertex, "surface has a non-manifold vertex");
  links_built = true;
}

namespace detail {

// Shared builder.  When `validate` is set, all pseudo-manifold and metric
// violations are collected into `issues` and construction stops at the first
// barrier that makes further derived structure meaningless.
inline bool build_surface(const SurfaceInput& in, Surface& s,
                          std::vector<ValidationIssue>* issues, bool validate) {
  auto push = [&](ErrorKind k, const std::string& d) {
    if (issues) issues->push_back({k, d});
  };

  if (in.triangles.empty()) {
    push(ErrorKind::InvalidInput, "triangle list is empty");
    return false;
  }
  if (in.lengths.size() != in.triangles.size()) {
    push(ErrorKind::InvalidInput, "lengths must have one triple per triangle");
    return false;
  }
  int V = 0;
  bool ids_ok = true;
  for (const auto& t : in.triangles) {
    for (int c = 0; c < 3; ++c) {
      if (t[c] < 0) ids_ok = false;
      V = std::max(V, t[c] + 1);
    }
  }
  if (!ids_ok) {
    push(ErrorKind::InvalidInput, "negative vertex id");
    return false;
  }

  bool simplicial_ok = true;
  bool metric_ok = true;
  for (std::size_t t = 0; t < in.triangles.size(); ++t) {
    const auto& tv = in.triangles[t];
    if (tv[0] == tv[1] || tv[1] == tv[2] || tv[0] == tv[2]) {
      push(ErrorKind::InvalidTriangle, "triangle " + std::to_string(t) + " repeats a vertex");
      simplicial_ok = false;
    }
    const auto& tl = in.lengths[t];
    bool positive = true;
    for (int c = 0; c < 3; ++c)
      if (!(tl[c] > 0) || !std::isfinite(tl[c])) {
        push(ErrorKind::InvalidInput, "triangle " + std::to_string(t) + " has nonpositive length");
        positive = false;
        metric_ok = false;
      }
    if (positive) {
      double a = tl[0], b = tl[1], c = tl[2];
      double scale = std::max({a, b, c});
      if (!(a + b > c + tol::kConservation * scale && b + c > a + tol::kConservation * scale &&
            c + a > b + tol::kConservation * scale)) {
        push(ErrorKind::TriangleInequality,
             "triangle " + std::to_string(t) + " violates the strict triangle inequality");
        metric_ok = false;
      }
    }
  }
  if (validate) {
    std::vector<std::array<int, 3>> sorted_tris(in.triangles.begin(), in.triangles.end());
    for (auto& t : sorted_tris) std::sort(t.begin(), t.end());
    std::sort(sorted_tris.begin(), sorted_tris.end());
    for (std::size_t i = 1; i < sorted_tris.size(); ++i)
      if (sorted_tris[i] == sorted_tris[i - 1]) {
        push(ErrorKind::InvalidTriangle,
             "duplicate triangle on vertices (" + std::to_string(sorted_tris[i][0]) + "," +
                 std::to_string(sorted_tris[i][1]) + "," + std::to_string(sorted_tris[i][2]) + ")");
        simplicial_ok = false;
      }
  }
  if (!simplicial_ok) return false;  // edge tables would be meaningless

  s.vertex_count = V;
  s.tri.assign(in.triangles.begin(), in.triangles.end());
  s.tri_len.assign(in.lengths.begin(), in.lengths.end());

  // Edge grouping by sorted key.
  std::vector<detail::EdgeRec> recs;
  recs.reserve(in.triangles.size() * 3);
  for (std::size_t t = 0; t < in.triangles.size(); ++t) {
    const auto& tv = in.triangles[t];
    for (int c = 0; c < 3; ++c) {
      int u = tv[(c + 1) % 3], v = tv[(c + 2) % 3];
      recs.push_back({detail::edge_key(u, v, V), static_cast<int>(t), c, in.lengths[t][c]});
    }
  }
  std::sort(recs.begin(), recs.end(),
            [](const detail::EdgeRec& a, const detail::EdgeRec& b) { return a.key < b.key; });

  bool closed = true;
  s.tri_edge.assign(in.triangles.size(), {-1, -1, -1});
  for (std::size_t i = 0; i < recs.size();) {
    std::size_t j = i;
    while (j < recs.size() && recs[j].key == recs[i].key) ++j;
    int mult = static_cast<int>(j - i);
    int u = static_cast<int>(recs[i].key / V), v = static_cast<int>(recs[i].key % V);
    if (mult != 2) {
      push(ErrorKind::NotClosed, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                     ") lies in " + std::to_string(mult) + " triangles");
      closed = false;
      i = j;
      continue;
    }
    double l0 = recs[i].len, l1 = recs[i + 1].len;
    if (std::fabs(l0 - l1) > tol::kInput * std::max(1.0, std::max(l0, l1))) {
      push(ErrorKind::EdgeLengthMismatch,
           "edge (" + std::to_string(u) + "," + std::to_string(v) + ") has lengths " +
               std::to_string(l0) + " and " + std::to_string(l1));
      closed = false;
      i = j;
      continue;
    }
    int e = static_cast<int>(s.edge_u.size());
    s.edge_u.push_back(u);
    s.edge_v.push_back(v);
    s.edge_len.push_back(0.5 * (l0 + l1));  // canonicalized
    s.edge_tri.push_back({recs[i].tri, recs[i + 1].tri});
    s.tri_edge[recs[i].tri][recs[i].corner] = e;
    s.tri_edge[recs[i + 1].tri][recs[i + 1].corner] = e;
    i = j;
  }
  if (!closed || !metric_ok) return false;

  // Canonical per-triangle lengths and areas.
  s.tri_area.resize(s.tri.size());
  s.total_area = 0.0;
  s.max_edge_len = 0.0;
  s.min_edge_len = kInf;
  for (double l : s.edge_len) {
    s.max_edge_len = std::max(s.max_edge_len, l);
    s.min_edge_len = std::min(s.min_edge_len, l);
  }
  long double area_acc = 0.0L;
  for (std::size_t t = 0; t < s.tri.size(); ++t) {
    for (int c = 0; c < 3; ++c) s.tri_len[t][c] = s.edge_len[s.tri_edge[t][c]];
    s.tri_area[t] = heron_area(s.tri_len[t][0], s.tri_len[t][1], s.tri_len[t][2]);
    area_acc += s.tri_area[t];
  }
  s.total_area = static_cast<double>(area_acc);

  // CSR adjacency.
  s.adj_off.assign(V + 1, 0);
  for (int e = 0; e < s.edge_count(); ++e) {
    ++s.adj_off[s.edge_u[e] + 1];
    ++s.adj_off[s.edge_v[e] + 1];
  }
  for (int v = 0; v < V; ++v) s.adj_off[v + 1] += s.adj_off[v];
  s.adj_v.resize(s.adj_off[V]);
  s.adj_w.resize(s.adj_off[V]);
  s.adj_e.resize(s.adj_off[V]);
  {
    std::vector<std::int64_t> cursor(s.adj_off.begin(), s.adj_off.end() - 1);
    for (int e = 0; e < s.edge_count(); ++e) {
      int u = s.edge_u[e], v = s.edge_v[e];
      s.adj_v[cursor[u]] = v;
      s.adj_w[cursor[u]] = s.edge_len[e];
      s.adj_e[cursor[u]++] = e;
      s.adj_v[cursor[v]] = u;
      s.adj_w[cursor[v]] = s.edge_len[e];
      s.adj_e[cursor[v]++] = e;
    }
  }

  if (validate) {
    // Strong connexity of the triangle adjacency graph.
    std::vector<char> seen(s.tri.size(), 0);
    std::vector<int> stack = {0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      for (int c = 0; c < 3; ++c) {
        int e = s.tri_edge[t][c];
        int tn = (s.edge_tri[e][0] == t) ? s.edge_tri[e][1] : s.edge_tri[e][0];
        if (!seen[tn]) {
          seen[tn] = 1;
          ++reached;
          stack.push_back(tn);
        }
      }
    }
    if (reached != s.tri.size()) {
      push(ErrorKind::Disconnected, "triangle adjacency graph has more than one component");
      return false;
    }
    if (!detail::build_links(s, issues)) return false;
    s.links_built = true;
  }
  return true;
}

}  // namespace detail

inline ValidationReport validate_surface(const SurfaceInput& in) {
  ValidationReport rep;
  Surface s;
  rep.ok = detail::build_surface(in, s, &rep.issues, true);
  return rep;
}

inline Surface make_surface(const SurfaceInput& in) {
  Surface s;
  std::vector<ValidationIssue> issues;
  bool ok = detail::build_surface(in, s, &issues, true);
  if (!ok) {
    ValidationReport rep{false, issues};
    ErrorKind kind = issues.empty() ? ErrorKind::InvalidInput : issues.front().kind;
    fail(kind, rep.summary());
  }
  return s;
}

// Construction fast path for programmatic generators whose combinatorics are
// correct by construction; still verifies closedness and edge consistency.
inline Surface make_surface_trusted(const SurfaceInput& in) {
  Surface s;
  std::vector<ValidationIssue> issues;
  bool ok = detail::build_surface(in, s, &issues, false);
  if (!ok) {
    ValidationReport rep{false, issues};
    fail(issues.empty() ? ErrorKind::InvalidInput : issues.front().kind, rep.summary());
  }
  return s;
}

inline double area(const Surface& s) { return s.total_area; }

inline EulerData euler_genus(const Surface& s) {
  EulerData out;
  out.chi = s.vertex_count - s.edge_count() + s.triangle_count();
  // Orientation propagation over the triangle adjacency graph.
  std::vector<int> orient(s.triangle_count(), 0);
  out.orientable = true;
  std::vector<int> stack;
  for (int seed = 0; seed < s.triangle_count(); ++seed) {
    if (orient[seed]) continue;
    orient[seed] = 1;
    stack.push_back(seed);
    while (!stack.empty()) {
      int t = stack.back();
      stack.pop_back();
      for (int c = 0; c < 3; ++c) {
        int e = s.tri_edge[t][c];
        int tn = (s.edge_tri[e][0] == t) ? s.edge_tri[e][1] : s.edge_tri[e][0];
        // The shared edge must be traversed in opposite directions by
        // consistently oriented neighbors.
        int u = s.tri[t][(c + 1) % 3], v = s.tri[t][(c + 2) % 3];
        int cn = 0;
        while (s.tri_edge[tn][cn] != e) ++cn;
        int un = s.tri[tn][(cn + 1) % 3], vn = s.tri[tn][(cn + 2) % 3];
        bool same_dir = (u == un && v == vn);
        int want = same_dir ? -orient[t] : orient[t];
        if (orient[tn] == 0) {
          orient[tn] = want;
          stack.push_back(tn);
        } else if (orient[tn] != want) {
          out.orientable = false;
        }
      }
    }
  }
  out.genus = out.orientable ? (2 - out.chi) / 2 : (2 - out.chi);
  return out;
}

// Midpoint 4-to-1 subdivision, k rounds.  New edge lengths are exact halves
// of the parent lengths, so the flat geometry and total area are preserved.
inline Surface subdivide(const Surface& s, int k, const Limits& lim = global_limits()) {
  require(k >= 0, ErrorKind::InvalidInput, "k must be nonnegative");
  if (k == 0) return s;
  double faces = static_cast<double>(s.triangle_count()) * std::pow(4.0, k);
  require(faces <= static_cast<double>(lim.max_faces), ErrorKind::ResourceLimit,
          "subdivision would exceed the face cap");
  const Surface* cur = &s;
  Surface tmp;
  for (int round = 0; round < k; ++round) {
    SurfaceInput next;
    next.triangles.reserve(cur->triangle_count() * 4);
    next.lengths.reserve(cur->triangle_count() * 4);
    int V = cur->vertex_count;
    auto mid = [&](int e) { return V + e; };
    for (int t = 0; t < cur->triangle_count(); ++t) {
      int A = cur->tri[t][0], B = cur->tri[t][1], C = cur->tri[t][2];
      double a = cur->tri_len[t][0], b = cur->tri_len[t][1], c = cur->tri_len[t][2];
      int mBC = mid(cur->tri_edge[t][0]), mCA = mid(cur->tri_edge[t][1]),
          mAB = mid(cur->tri_edge[t][2]);
      next.triangles.push_back({A, mAB, mCA});
      next.lengths.push_back({a / 2, b / 2, c / 2});
      next.triangles.push_back({B, mBC, mAB});
      next.lengths.push_back({b / 2, c / 2, a / 2});
      next.triangles.push_back({C, mCA, mBC});
      next.lengths.push_back({c / 2, a / 2, b / 2});
      next.triangles.push_back({mAB, mBC, mCA});
      next.lengths.push_back({c / 2, a / 2, b / 2});
    }
    tmp = make_surface_trusted(next);
    cur = &tmp;
  }
  return tmp;
}

// Single-source shortest paths on the 1-skeleton; vertices beyond `bound`
// keep distance +inf.
inline std::vector<double> vertex_distances(const Surface& s, int source, double bound = kInf) {
  require(source >= 0 && source < s.vertex_count, ErrorKind::InvalidInput, "bad source vertex");
  std::vector<double> dist(s.vertex_count, kInf);
  using Item = std::pair<double, int>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  dist[source] = 0.0;
  pq.push({0.0, source});
  while (!pq.empty()) {
    auto [d, u] = pq.top();
    pq.pop();
    if (d > dist[u]) continue;
    if (d > bound) break;
    for (std::int64_t i = s.adj_off[u]; i < s.adj_off[u + 1]; ++i) {
      double nd = d + s.adj_w[i];
      if (nd < dist[s.adj_v[i]] && nd <= bound + s.max_edge_len) {
        dist[s.adj_v[i]] = nd;
        pq.push({nd, s.adj_v[i]});
      }
    }
  }
  return dist;
}

// Certified inner/outer ball areas derived from one distance field: a
// triangle counts toward the inner sum when all three vertices lie within
// the radius and toward the outer sum when at least one does.
class BallAreaTable {
 public:
  BallAreaTable(const Surface& s, const std::vector<double>& dist) {
    int T = s.triangle_count();
    min_d_.reserve(T);
    max_d_.reserve(T);
    for (int t = 0; t < T; ++t) {
      double d0 = dist[s.tri[t][0]], d1 = dist[s.tri[t][1]], d2 = dist[s.tri[t][2]];
      min_d_.push_back({std::min({d0, d1, d2}), s.tri_area[t]});
      max_d_.push_back({std::max({d0, d1, d2}), s.tri_area[t]});
    }
    auto by_key = [](const std::pair<double, double>& a, const std::pair<double, double>& b) {
      return a.first < b.first;
    };
    std::sort(min_d_.begin(), min_d_.end(), by_key);
    std::sort(max_d_.begin(), max_d_.end(), by_key);
    double acc = 0.0;
    for (auto& p : min_d_) {
      acc += p.second;
      p.second = acc;
    }
    acc = 0.0;
    for (auto& p : max_d_) {
      acc += p.second;
      p.second = acc;
    }
  }

  double inner(double r) const { return prefix(max_d_, r); }
  double outer(double r) const { return prefix(min_d_, r); }

 private:
  static double prefix(const std::vector<std::pair<double, double>>& v, double r) {
    double key = r + tol::kCount;
    auto it = std::upper_bound(v.begin(), v.end(), key,
                               [](double k, const std::pair<double, double>& p) {
                                 return k < p.first;
                               });
    if (it == v.begin()) return 0.0;
    return (it - 1)->second;
  }

  std::vector<std::pair<double, double>> min_d_, max_d_;  // sorted key -> prefix area
};

struct BallRegion {
  int center = 0;
  double radius = 0.0;
  std::vector<int> vertices;  // sorted ids within graph distance <= radius
  double area_lower = 0.0;
  double area_upper = 0.0;
};

inline BallRegion ball(const Surface& s, int v, double R) {
  require(R >= 0, ErrorKind::InvalidInput, "radius must be nonnegative");
  BallRegion out;
  out.center = v;
  out.radius = R;
  auto dist = vertex_distances(s, v, R);
  for (int u = 0; u < s.vertex_count; ++u)
    if (dist[u] <= R + tol::kCount) out.vertices.push_back(u);
  BallAreaTable table(s, dist);
  out.area_lower = table.inner(R);
  out.area_upper = table.outer(R);
  return out;
}

// Closed edge walk; length is the sum of traversed edge lengths.
struct Cycle {
  std::vector<int> vertices;  // first == last
  double length = 0.0;
};

inline Cycle make_cycle(const Surface& s, const std::vector<int>& verts) {
  require(verts.size() >= 1, ErrorKind::InvalidInput, "empty walk");
  require(verts.front() == verts.back(), ErrorKind::InvalidInput, "walk must be closed");
  Cycle c;
  c.vertices = verts;
  for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
    int e = s.find_edge(verts[i], verts[i + 1]);
    require(e >= 0, ErrorKind::InvalidInput,
            "walk step (" + std::to_string(verts[i]) + "," + std::to_string(verts[i + 1]) +
                ") is not an edge");
    c.length += s.edge_len[e];
  }
  return c;
}

}  // namespace systolab
