#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <vector>

#include "systolab/lattice.hpp"
#include "systolab/surface.hpp"

namespace systolab {

// ---------------------------------------------------------------------------
// Closed-form small complexes
// ---------------------------------------------------------------------------

inline SurfaceInput tetrahedron_input(double edge = 1.0) {
  SurfaceInput in;
  in.triangles = {{0, 1, 2}, {0, 3, 1}, {0, 2, 3}, {1, 3, 2}};
  in.lengths.assign(4, {edge, edge, edge});
  return in;
}

// Minimal 6-vertex projective plane (antipodal icosahedron quotient); every
// pair of vertices is an edge and all edges share one length.
inline SurfaceInput rp2_six_input(double edge = 1.0) {
  SurfaceInput in;
  in.triangles = {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                  {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}};
  in.lengths.assign(10, {edge, edge, edge});
  return in;
}

// Great-circle arc length between adjacent icosahedron vertices on the unit
// sphere; the quotient metric of the 6-vertex projective plane.
inline double icosa_arc_edge() { return std::atan(2.0); }

inline SurfaceInput rp2_icosa_input() { return rp2_six_input(icosa_arc_edge()); }

// ---------------------------------------------------------------------------
// Grid tori
// ---------------------------------------------------------------------------

namespace detail {

inline std::array<double, 3> side_lengths(const std::array<std::array<double, 2>, 3>& p) {
  auto d = [&](int i, int j) {
    return std::hypot(p[i][0] - p[j][0], p[i][1] - p[j][1]);
  };
  // length opposite each corner
  return {d(1, 2), d(2, 0), d(0, 1)};
}

}  // namespace detail

// Unit-square torus on an m x m grid with alternating cell diagonals
// (criss-cross), spacing 1/m.  Requires even m >= 4 so that the diagonal
// pattern is periodic and the complex is simplicial.
inline SurfaceInput square_torus_grid_input(int m = 4, double width = 1.0, double height = 1.0,
                                            int rows = 0) {
  int n = rows > 0 ? rows : m;
  require(m >= 3 && n >= 3, ErrorKind::InvalidInput, "grid must be at least 3x3");
  require(m % 2 == 0 && n % 2 == 0, ErrorKind::InvalidInput,
          "criss-cross grid needs even dimensions");
  double hx = width / m, hy = height / n;
  SurfaceInput in;
  auto id = [&](int i, int j) { return ((j % n + n) % n) * m + ((i % m + m) % m); };
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < m; ++i) {
      std::array<double, 2> p00 = {0, 0}, p10 = {hx, 0}, p01 = {0, hy}, p11 = {hx, hy};
      int v00 = id(i, j), v10 = id(i + 1, j), v01 = id(i, j + 1), v11 = id(i + 1, j + 1);
      if ((i + j) % 2 == 0) {
        in.triangles.push_back({v00, v10, v11});
        in.lengths.push_back(detail::side_lengths({p00, p10, p11}));
        in.triangles.push_back({v00, v11, v01});
        in.lengths.push_back(detail::side_lengths({p00, p11, p01}));
      } else {
        in.triangles.push_back({v00, v10, v01});
        in.lengths.push_back(detail::side_lengths({p00, p10, p01}));
        in.triangles.push_back({v10, v11, v01});
        in.lengths.push_back(detail::side_lengths({p10, p11, p01}));
      }
    }
  }
  return in;
}

inline SurfaceInput rect_torus_grid_input(double aspect = 2.0, int m = 4) {
  int rows = static_cast<int>(std::lround(aspect * m));
  require(std::fabs(rows - aspect * m) < 1e-9, ErrorKind::InvalidInput,
          "aspect * m must be an integer");
  return square_torus_grid_input(m, 1.0, aspect, rows);
}

// Hexagonal torus: quotient of the rhombus spanned by (1,0) and
// (1/2, sqrt(3)/2), triangulated by equilateral triangles of side 1/m.
inline SurfaceInput hex_torus_grid_input(int m = 3) {
  require(m >= 3, ErrorKind::InvalidInput, "hex grid must be at least 3x3");
  SurfaceInput in;
  double h = 1.0 / m;
  auto id = [&](int i, int j) { return ((j % m + m) % m) * m + ((i % m + m) % m); };
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < m; ++i) {
      in.triangles.push_back({id(i, j), id(i + 1, j), id(i, j + 1)});
      in.lengths.push_back({h, h, h});
      in.triangles.push_back({id(i + 1, j), id(i + 1, j + 1), id(i, j + 1)});
      in.lengths.push_back({h, h, h});
    }
  }
  return in;
}

inline FlatTorus square_lattice() { return FlatTorus::from_rows({{1, 0}, {0, 1}}); }
inline FlatTorus hex_lattice() {
  return FlatTorus::from_rows({{1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}});
}
inline FlatTorus rect_lattice(double aspect) {
  return FlatTorus::from_rows({{1.0, 0.0}, {0.0, aspect}});
}

// ---------------------------------------------------------------------------
// Genus-2 flat octagon
// ---------------------------------------------------------------------------

// Regular flat octagon with the side pairing a b a^-1 b^-1 c d c^-1 d^-1.
// All eight corners collapse to one cone point of angle 6*pi; each side is
// split at its quarter points and an interior ring keeps the quotient
// simplicial.  Side length 1.
inline SurfaceInput genus2_octagon_input() {
  const double rc = 0.5 / std::sin(M_PI / 8.0);  // circumradius for side 1
  std::array<std::array<double, 2>, 8> corner;
  for (int i = 0; i < 8; ++i) {
    double ang = M_PI / 8.0 + i * M_PI / 4.0;
    corner[i] = {rc * std::cos(ang), rc * std::sin(ang)};
  }
  // Boundary slots, counterclockwise: corner, then the three quarter points
  // of the following side.  32 slots in total.
  std::vector<std::array<double, 2>> slot_pos(32);
  std::vector<int> slot_class(32);
  // Vertex classes: 0 = cone point; 1..12 = side interior points; the side
  // pairing identifies side s with side partner[s] reversed.
  int partner[8] = {2, 3, 0, 1, 6, 7, 4, 5};
  auto side_class = [&](int s, int quarter) {
    // quarter in {1,2,3}; side s at parameter q/4 equals partner side at
    // parameter (4-q)/4.
    int canon_s = std::min(s, partner[s]);
    int canon_q = (s == canon_s) ? quarter : 4 - quarter;
    int pair_index = (canon_s < 2) ? canon_s : canon_s - 2;  // sides 0,1,4,5 are canonical
    if (canon_s >= 4) pair_index = 2 + (canon_s - 4);
    return 1 + pair_index * 3 + (canon_q - 1);
  };
  for (int s = 0; s < 8; ++s) {
    const auto& a = corner[s];
    const auto& b = corner[(s + 1) % 8];
    slot_pos[s * 4] = a;
    slot_class[s * 4] = 0;
    for (int q = 1; q <= 3; ++q) {
      double t = q / 4.0;
      slot_pos[s * 4 + q] = {a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
      slot_class[s * 4 + q] = side_class(s, q);
    }
  }
  // Ring vertices at half radius, one per slot, plus the center.
  const int ring0 = 13, center = 13 + 32;
  SurfaceInput in;
  auto ring_pos = [&](int i) {
    return std::array<double, 2>{0.5 * slot_pos[i][0], 0.5 * slot_pos[i][1]};
  };
  for (int i = 0; i < 32; ++i) {
    int j = (i + 1) % 32;
    std::array<double, 2> bi = slot_pos[i], bj = slot_pos[j], ri = ring_pos(i), rj = ring_pos(j);
    in.triangles.push_back({slot_class[i], slot_class[j], ring0 + i});
    in.lengths.push_back(detail::side_lengths({bi, bj, ri}));
    in.triangles.push_back({slot_class[j], ring0 + j, ring0 + i});
    in.lengths.push_back(detail::side_lengths({bj, rj, ri}));
    in.triangles.push_back({ring0 + i, ring0 + j, center});
    in.lengths.push_back(detail::side_lengths({ri, rj, {0.0, 0.0}}));
  }
  return in;
}

// ---------------------------------------------------------------------------
// Geodesic-arrangement square torus
// ---------------------------------------------------------------------------
//
// A unit-square torus triangulation whose edge set contains, through the
// base vertex (0,0), the closed geodesics in a configurable family of
// rational directions.  Grid triangulations realize only three edge
// directions, so their graph metric is a crystalline norm that misses
// Euclidean distances by up to ~8%; enriching the direction family makes
// graph distances between lattice lifts exact in every listed direction and
// near-exact in between.  Built with exact rational arithmetic.

namespace arrangement {

struct Frac {
  std::int64_t n = 0, d = 1;

  static Frac make(std::int64_t n, std::int64_t d) {
    require(d != 0, ErrorKind::InvalidInput, "zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    std::int64_t g = std::gcd(n < 0 ? -n : n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    return {n, d};
  }
  Frac operator+(const Frac& o) const { return make(n * o.d + o.n * d, d * o.d); }
  Frac operator-(const Frac& o) const { return make(n * o.d - o.n * d, d * o.d); }
  Frac operator*(std::int64_t k) const { return make(n * k, d); }
  bool operator==(const Frac& o) const { return n == o.n && d == o.d; }
  bool operator<(const Frac& o) const { return n * o.d < o.n * d; }
  Frac frac() const {  // representative in [0,1)
    std::int64_t r = n % d;
    if (r < 0) r += d;
    return {r, d};
  }
  double value() const { return static_cast<double>(n) / static_cast<double>(d); }
};

struct Point {
  Frac x, y;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
};

// Angular order of integer directions; full circle, exact.
inline bool angle_less(const std::array<int, 2>& a, const std::array<int, 2>& b) {
  auto half = [](const std::array<int, 2>& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; };
  if (half(a) != half(b)) return half(a) < half(b);
  long cross = static_cast<long>(a[0]) * b[1] - static_cast<long>(a[1]) * b[0];
  return cross > 0;
}

}  // namespace arrangement

inline const std::vector<std::array<int, 2>>& default_geodesic_directions() {
  static const std::vector<std::array<int, 2>> dirs = {
      {1, 0},  {0, 1},  {1, 1},  {1, -1}, {2, 1},  {1, 2},  {2, -1}, {1, -2},
      {3, 4},  {4, 3},  {3, -4}, {4, -3}, {4, 1},  {1, 4},  {4, -1}, {1, -4}};
  return dirs;
}

inline SurfaceInput square_torus_geodesic_input(
    const std::vector<std::array<int, 2>>& dirs = default_geodesic_directions()) {
  using arrangement::Frac;
  using arrangement::Point;
  int nd = static_cast<int>(dirs.size());
  for (auto& d : dirs)
    require(std::gcd(std::abs(d[0]), std::abs(d[1])) == 1, ErrorKind::InvalidInput,
            "directions must be primitive");

  // 1. Collect intersection points of every pair of closed geodesics.  The
  // geodesic in direction (p,q) through the origin is { q x - p y in Z }.
  std::map<Point, int> point_id;
  std::vector<Point> points;
  auto add_point = [&](const Point& p) {
    auto it = point_id.find(p);
    if (it != point_id.end()) return it->second;
    int id = static_cast<int>(points.size());
    point_id.emplace(p, id);
    points.push_back(p);
    return id;
  };
  add_point({Frac{0, 1}, Frac{0, 1}});
  for (int i = 0; i < nd; ++i) {
    for (int j = i + 1; j < nd; ++j) {
      std::int64_t p1 = dirs[i][0], q1 = dirs[i][1], p2 = dirs[j][0], q2 = dirs[j][1];
      std::int64_t det = p1 * q2 - p2 * q1;
      if (det == 0) continue;
      std::int64_t bk = std::abs(p1) + std::abs(q1), bl = std::abs(p2) + std::abs(q2);
      for (std::int64_t k = -bk; k <= bk; ++k) {
        for (std::int64_t l = -bl; l <= bl; ++l) {
          // Solve q1 x - p1 y = k, q2 x - p2 y = l.
          Frac x = Frac::make(-p2 * k + p1 * l, det).frac();
          Frac y = Frac::make(-q2 * k + q1 * l, det).frac();
          // Verify membership (k,l enumeration overshoots the unit square).
          auto on_line = [&](std::int64_t p, std::int64_t q) {
            Frac v = (x * q) - (y * p);
            return v.frac().n == 0;
          };
          if (on_line(p1, q1) && on_line(p2, q2)) add_point({x, y});
        }
      }
    }
  }

  // 2. Split each geodesic at the points lying on it; consecutive points
  // bound the arcs of the arrangement.
  struct Arc {
    int a, b;                  // endpoint ids
    std::array<int, 2> dir;    // direction a -> b
    Frac dt;                   // parameter advance in [0,1]
  };
  std::vector<Arc> arcs;
  for (int i = 0; i < nd; ++i) {
    std::int64_t p = dirs[i][0], q = dirs[i][1];
    // Bezout coefficients: ap + bq = 1 gives the curve parameter t = ax + by.
    std::int64_t a = 0, b = 0;
    for (std::int64_t ta = -5; ta <= 5 && !(a || b); ++ta)
      for (std::int64_t tb = -5; tb <= 5; ++tb)
        if (ta * p + tb * q == 1) {
          a = ta;
          b = tb;
          break;
        }
    require(a != 0 || b != 0, ErrorKind::InvalidInput, "no Bezout pair found");
    std::vector<std::pair<Frac, int>> on_curve;
    for (int pid = 0; pid < static_cast<int>(points.size()); ++pid) {
      Frac v = (points[pid].x * q) - (points[pid].y * p);
      if (v.frac().n != 0) continue;
      Frac t = ((points[pid].x * a) + (points[pid].y * b)).frac();
      on_curve.push_back({t, pid});
    }
    std::sort(on_curve.begin(), on_curve.end());
    int cnt = static_cast<int>(on_curve.size());
    require(cnt >= 2, ErrorKind::InvalidInput, "geodesic with fewer than two points");
    for (int s = 0; s < cnt; ++s) {
      auto [t0, a0] = on_curve[s];
      auto [t1, a1] = on_curve[(s + 1) % cnt];
      Frac dt = (s + 1 < cnt) ? (t1 - t0) : (t1 + Frac{1, 1} - t0);
      arcs.push_back({a0, a1, dirs[i], dt});
    }
  }

  // Duplicate unordered endpoint pairs would collapse to one simplicial
  // edge; split such arcs at their midpoint (denominators double, still
  // exact).
  for (bool again = true; again;) {
    again = false;
    std::map<std::pair<int, int>, int> seen;
    for (std::size_t k = 0; k < arcs.size(); ++k) {
      auto key = std::minmax(arcs[k].a, arcs[k].b);
      auto it = seen.find({key.first, key.second});
      if (it == seen.end()) {
        seen[{key.first, key.second}] = static_cast<int>(k);
        continue;
      }
      Arc arc = arcs[k];
      Frac halfdt = Frac::make(arc.dt.n, arc.dt.d * 2);
      Point mid = {(points[arc.a].x + halfdt * arc.dir[0]).frac(),
                   (points[arc.a].y + halfdt * arc.dir[1]).frac()};
      int mid_id = add_point(mid);
      arcs[k] = {arc.a, mid_id, arc.dir, halfdt};
      arcs.push_back({mid_id, arc.b, arc.dir, halfdt});
      again = true;
      break;
    }
  }

  // 3. Face tracing over darts with the exact angular rotation at each
  // vertex.  next(dart) continues the face on the left of the dart.
  struct Dart {
    int from, to, arc;
    std::array<int, 2> dir;
  };
  std::vector<Dart> darts;
  for (std::size_t k = 0; k < arcs.size(); ++k) {
    const Arc& a = arcs[k];
    darts.push_back({a.a, a.b, static_cast<int>(k), a.dir});
    darts.push_back({a.b, a.a, static_cast<int>(k), {-a.dir[0], -a.dir[1]}});
  }
  int V = static_cast<int>(points.size());
  std::vector<std::vector<int>> out(V);
  for (std::size_t d = 0; d < darts.size(); ++d) out[darts[d].from].push_back(static_cast<int>(d));
  for (int v = 0; v < V; ++v)
    std::sort(out[v].begin(), out[v].end(), [&](int a, int b) {
      if (arrangement::angle_less(darts[a].dir, darts[b].dir)) return true;
      if (arrangement::angle_less(darts[b].dir, darts[a].dir)) return false;
      return a < b;
    });
  // twin of dart d is d^1; successor: at the head vertex, take the rotation
  // predecessor of the twin.
  std::vector<int> next(darts.size());
  std::vector<int> pos_in_rot(darts.size());
  for (int v = 0; v < V; ++v)
    for (std::size_t i = 0; i < out[v].size(); ++i) pos_in_rot[out[v][i]] = static_cast<int>(i);
  for (std::size_t d = 0; d < darts.size(); ++d) {
    int twin = static_cast<int>(d ^ 1);
    int v = darts[twin].from;  // head of d
    int deg = static_cast<int>(out[v].size());
    int idx = pos_in_rot[twin];
    next[d] = out[v][(idx - 1 + deg) % deg];
  }

  // 4. Each face becomes a fan around its centroid; lifted coordinates stay
  // exact until the final double conversion.
  SurfaceInput in;
  std::vector<char> used(darts.size(), 0);
  int face_vertex = V;
  std::vector<std::array<double, 2>> coords(V);
  for (int pid = 0; pid < V; ++pid)
    coords[pid] = {points[pid].x.value(), points[pid].y.value()};
  for (std::size_t d0 = 0; d0 < darts.size(); ++d0) {
    if (used[d0]) continue;
    std::vector<int> cycle_vertex;
    std::vector<std::array<double, 2>> lifted;
    double lx = 0.0, ly = 0.0;
    int d = static_cast<int>(d0);
    do {
      used[d] = 1;
      cycle_vertex.push_back(darts[d].from);
      lifted.push_back({lx, ly});
      const Arc& a = arcs[darts[d].arc];
      double step = a.dt.value();
      lx += step * darts[d].dir[0];
      ly += step * darts[d].dir[1];
      d = next[d];
    } while (d != static_cast<int>(d0));
    require(std::fabs(lx) < 1e-9 && std::fabs(ly) < 1e-9, ErrorKind::InvalidInput,
            "face walk does not close");
    // Signed area decides orientation; both orientations fan identically.
    int n = static_cast<int>(lifted.size());
    require(n >= 3, ErrorKind::InvalidInput, "degenerate face");
    double cx = 0, cy = 0;
    for (auto& p : lifted) {
      cx += p[0];
      cy += p[1];
    }
    cx /= n;
    cy /= n;
    int centroid = face_vertex++;
    for (int i = 0; i < n; ++i) {
      int j = (i + 1) % n;
      in.triangles.push_back({cycle_vertex[i], cycle_vertex[j], centroid});
      in.lengths.push_back(
          detail::side_lengths({lifted[i], lifted[j], {cx, cy}}));
    }
  }
  return in;
}

// ---------------------------------------------------------------------------
// Named generator dispatch (CLI layer)
// ---------------------------------------------------------------------------

inline SurfaceInput generate_builtin(const std::string& name, int k) {
  require(k >= 0, ErrorKind::InvalidParams, "subdivision k must be nonnegative");
  SurfaceInput base;
  if (name == "torus-square") {
    base = square_torus_grid_input(4);
  } else if (name == "torus-hex") {
    base = hex_torus_grid_input(3);
  } else if (name == "torus-rect") {
    base = rect_torus_grid_input(2.0, 4);
  } else if (name == "genus2-octagon") {
    base = genus2_octagon_input();
  } else if (name == "rp2-icosa") {
    base = rp2_icosa_input();
  } else if (name == "sphere-tetra") {
    base = tetrahedron_input();
  } else {
    fail(ErrorKind::UnknownGenerator, "unknown generator '" + name + "'");
  }
  Surface s = make_surface(base);
  if (k > 0) s = subdivide(s, k);
  SurfaceInput out;
  out.triangles = s.tri;
  out.lengths = s.tri_len;
  return out;
}

}  // namespace systolab
