#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <queue>
#include <vector>

#include "systolab/surface.hpp"

namespace systolab {

enum class SystoleKind { Homotopy, HomologyZ2 };

struct SystoleResult {
  double length = 0.0;
  Cycle representative;
  SystoleKind kind = SystoleKind::Homotopy;
  bool certified = false;
  double search_radius = 0.0;
};

// Z2 edge labels from a tree-cotree decomposition: a cycle's homology class
// is the xor of the labels of its edges.  Labels live in Z2^{b1} packed into
// one machine word (b1 <= 8 enforced by callers that build state spaces).
struct Z2Labels {
  int b1 = 0;
  std::vector<std::uint32_t> edge_label;  // per edge id

  std::uint32_t cycle_class(const Surface& s, const Cycle& c) const {
    std::uint32_t cls = 0;
    for (std::size_t i = 0; i + 1 < c.vertices.size(); ++i)
      cls ^= edge_label[s.find_edge(c.vertices[i], c.vertices[i + 1])];
    return cls;
  }
};

inline Z2Labels z2_labels(const Surface& s) {
  int V = s.vertex_count, E = s.edge_count();
  // BFS spanning tree.
  std::vector<char> tree_edge(E, 0), visited(V, 0);
  std::vector<int> bfs = {0};
  visited[0] = 1;
  for (std::size_t head = 0; head < bfs.size(); ++head) {
    int u = bfs[head];
    for (std::int64_t i = s.adj_off[u]; i < s.adj_off[u + 1]; ++i) {
      int v = s.adj_v[i];
      if (!visited[v]) {
        visited[v] = 1;
        tree_edge[s.adj_e[i]] = 1;
        bfs.push_back(v);
      }
    }
  }
  // Non-tree edges index the cycle space Z2^m.
  std::vector<int> cotree_index(E, -1);
  int m = 0;
  for (int e = 0; e < E; ++e)
    if (!tree_edge[e]) cotree_index[e] = m++;

  // Face relations as bit rows over the non-tree coordinates.
  int words = (m + 63) / 64;
  std::vector<std::vector<std::uint64_t>> rows;
  rows.reserve(s.triangle_count());
  for (int t = 0; t < s.triangle_count(); ++t) {
    std::vector<std::uint64_t> row(words, 0);
    bool any = false;
    for (int c = 0; c < 3; ++c) {
      int idx = cotree_index[s.tri_edge[t][c]];
      if (idx >= 0) {
        row[idx / 64] ^= 1ull << (idx % 64);
        any = true;
      }
    }
    if (any) rows.push_back(std::move(row));
  }
  // Gaussian elimination; remember pivot columns.
  std::vector<int> pivot_col;
  std::vector<std::vector<std::uint64_t>> basis;
  for (auto& row : rows) {
    for (std::size_t r = 0; r < basis.size(); ++r) {
      int p = pivot_col[r];
      if (row[p / 64] >> (p % 64) & 1)
        for (int w = 0; w < words; ++w) row[w] ^= basis[r][w];
    }
    int p = -1;
    for (int w = 0; w < words && p < 0; ++w)
      if (row[w]) p = w * 64 + std::countr_zero(row[w]);
    if (p < 0) continue;
    pivot_col.push_back(p);
    basis.push_back(row);
  }
  std::vector<char> is_pivot(m, 0);
  for (int p : pivot_col) is_pivot[p] = 1;
  std::vector<int> free_cols;
  for (int c = 0; c < m; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Z2Labels out;
  out.b1 = m - static_cast<int>(pivot_col.size());
  out.edge_label.assign(E, 0);
  for (int e = 0; e < E; ++e) {
    int idx = cotree_index[e];
    if (idx < 0) continue;
    // Reduce the unit vector and read off its free coordinates.
    std::vector<std::uint64_t> x(words, 0);
    x[idx / 64] = 1ull << (idx % 64);
    for (std::size_t r = 0; r < basis.size(); ++r) {
      int p = pivot_col[r];
      if (x[p / 64] >> (p % 64) & 1)
        for (int w = 0; w < words; ++w) x[w] ^= basis[r][w];
    }
    std::uint32_t label = 0;
    for (std::size_t f = 0; f < free_cols.size(); ++f) {
      int c = free_cols[f];
      if (x[c / 64] >> (c % 64) & 1) label |= 1u << f;
    }
    out.edge_label[e] = label;
  }
  return out;
}

inline int betti1_z2(const Surface& s) { return z2_labels(s).b1; }

namespace detail {

struct Z2SearchResult {
  double length = kInf;
  std::vector<int> walk;  // closed walk, first == last
};

// Shortest closed walk through `source` with nonzero Z2 class.  States are
// (vertex, class); the split-pair detection lets the scan stop at half the
// answer: for each vertex only the first-popped class is remembered, and a
// later pop with a different class closes a nontrivial loop.
inline Z2SearchResult shortest_nontrivial_through(const Surface& s, const Z2Labels& lab,
                                                  int source, double abort_above,
                                                  std::vector<double>& dist,
                                                  std::vector<int>& stamp,
                                                  std::vector<std::int64_t>& pred, int epoch) {
  int V = s.vertex_count;
  std::uint32_t classes = 1u << lab.b1;
  auto sid = [&](int v, std::uint32_t c) { return static_cast<std::int64_t>(c) * V + v; };
  using Item = std::pair<double, std::int64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
  auto relax = [&](std::int64_t st, double d, std::int64_t from) {
    if (stamp[st] != epoch || d < dist[st] - 1e-15) {
      stamp[st] = epoch;
      dist[st] = d;
      pred[st] = from;
      pq.push({d, st});
    }
  };
  relax(sid(source, 0), 0.0, -1);

  std::vector<int> first_class(V, -1);
  std::vector<double> first_dist(V, kInf);
  Z2SearchResult best;
  std::int64_t best_a = -1, best_b = -1;

  while (!pq.empty()) {
    auto [d, st] = pq.top();
    pq.pop();
    if (stamp[st] != epoch || d > dist[st] + 1e-15) continue;
    if (d > best.length || d > abort_above) break;
    int v = static_cast<int>(st % V);
    std::uint32_t cls = static_cast<std::uint32_t>(st / V);
    if (first_class[v] < 0) {
      first_class[v] = static_cast<int>(cls);
      first_dist[v] = d;
    } else if (static_cast<std::uint32_t>(first_class[v]) != cls) {
      double cand = first_dist[v] + d;
      if (cand < best.length) {
        best.length = cand;
        best_a = sid(v, static_cast<std::uint32_t>(first_class[v]));
        best_b = st;
      }
    }
    for (std::int64_t i = s.adj_off[v]; i < s.adj_off[v + 1]; ++i) {
      std::uint32_t ncls = cls ^ lab.edge_label[s.adj_e[i]];
      if (ncls >= classes) continue;
      relax(sid(s.adj_v[i], ncls), d + s.adj_w[i], st);
    }
  }
  if (best_a >= 0) {
    auto path_to = [&](std::int64_t st) {
      std::vector<int> p;
      while (st >= 0) {
        p.push_back(static_cast<int>(st % V));
        st = pred[st];
      }
      std::reverse(p.begin(), p.end());
      return p;  // source .. v
    };
    auto pa = path_to(best_a);
    auto pb = path_to(best_b);
    best.walk = pa;
    for (auto it = pb.rbegin() + 1; it != pb.rend(); ++it) best.walk.push_back(*it);
  }
  return best;
}

}  // namespace detail

// Shortest cycle with nonzero Z2 homology class; exact on the edge graph.
inline SystoleResult homology_systole_z2(const Surface& s) {
  auto lab = z2_labels(s);
  require(lab.b1 > 0, ErrorKind::TrivialHomology, "b1(Z2) = 0");
  require(lab.b1 <= 8, ErrorKind::ResourceLimit, "b1(Z2) > 8 state space too large");
  int V = s.vertex_count;
  std::int64_t states = static_cast<std::int64_t>(V) << lab.b1;
  std::vector<double> dist(states);
  std::vector<int> stamp(states, -1);
  std::vector<std::int64_t> pred(states);

  double best = kInf;
  std::vector<int> best_walk;
  int best_src = -1;
  for (int src = 0; src < V; ++src) {
    auto r = detail::shortest_nontrivial_through(s, lab, src, best / 2.0 + s.max_edge_len + 1e-12,
                                                 dist, stamp, pred, src);
    if (r.length < best - 1e-15) {
      best = r.length;
      best_walk = r.walk;
      best_src = src;
    }
  }
  require(best_src >= 0, ErrorKind::TrivialHomology, "no nontrivial cycle found");
  SystoleResult out;
  out.kind = SystoleKind::HomologyZ2;
  out.length = best;
  out.representative = make_cycle(s, best_walk);
  out.certified = true;
  out.search_radius = best;
  // The reported walk length must equal the reported systole.
  require(std::fabs(out.representative.length - best) <= tol::kInput * std::max(1.0, best),
          ErrorKind::InvalidInput, "representative length mismatch");
  return out;
}

}  // namespace systolab
