#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <vector>

#include "systolab/core.hpp"

namespace systolab {

// Flat torus R^n / Lambda, n in {2,3,4}.  Rows of `basis` generate Lambda.
struct FlatTorus {
  int n = 2;
  std::array<std::array<double, 4>, 4> basis{};  // row-major, top-left n x n block

  static FlatTorus from_rows(const std::vector<std::vector<double>>& rows) {
    FlatTorus t;
    require(rows.size() >= 2 && rows.size() <= 4, ErrorKind::InvalidInput,
            "lattice dimension must be 2..4");
    t.n = static_cast<int>(rows.size());
    for (int i = 0; i < t.n; ++i) {
      require(static_cast<int>(rows[i].size()) == t.n, ErrorKind::InvalidInput,
              "basis matrix must be square");
      for (int j = 0; j < t.n; ++j) t.basis[i][j] = rows[i][j];
    }
    return t;
  }

  // Upper-half-plane shorthand: the torus with rows (1,0),(x,y).
  static FlatTorus from_tau(double x, double y) {
    require(y > 0, ErrorKind::InvalidStart, "tau must satisfy y > 0");
    return from_rows({{1.0, 0.0}, {x, y}});
  }

  std::vector<std::vector<double>> rows() const {
    std::vector<std::vector<double>> out(n, std::vector<double>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out[i][j] = basis[i][j];
    return out;
  }
};

struct LatticeVector {
  std::array<std::int64_t, 4> coeffs{};
  std::array<double, 4> embedded{};
  double norm = 0.0;
};

namespace detail {

inline double det_n(const FlatTorus& t) {
  // Gaussian elimination with partial pivoting; n <= 4.
  int n = t.n;
  std::array<std::array<double, 4>, 4> a = t.basis;
  double det = 1.0;
  for (int c = 0; c < n; ++c) {
    int p = c;
    for (int r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[p][c])) p = r;
    if (std::fabs(a[p][c]) == 0.0) return 0.0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (int r = c + 1; r < n; ++r) {
      double f = a[r][c] / a[c][c];
      for (int k = c; k < n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

inline std::array<std::array<double, 4>, 4> inverse_n(const FlatTorus& t) {
  int n = t.n;
  std::array<std::array<double, 8>, 4> a{};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = t.basis[i][j];
    a[i][n + i] = 1.0;
  }
  for (int c = 0; c < n; ++c) {
    int p = c;
    for (int r = c + 1; r < n; ++r)
      if (std::fabs(a[r][c]) > std::fabs(a[p][c])) p = r;
    require(std::fabs(a[p][c]) > 1e-14, ErrorKind::SingularBasis, "basis is singular");
    if (p != c) std::swap(a[p], a[c]);
    double piv = a[c][c];
    for (int k = 0; k < 2 * n; ++k) a[c][k] /= piv;
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      double f = a[r][c];
      if (f == 0.0) continue;
      for (int k = 0; k < 2 * n; ++k) a[r][k] -= f * a[c][k];
    }
  }
  std::array<std::array<double, 4>, 4> inv{};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

inline double row_dot(const FlatTorus& t, int i, int j) {
  double s = 0.0;
  for (int k = 0; k < t.n; ++k) s += t.basis[i][k] * t.basis[j][k];
  return s;
}

inline double row_norm(const FlatTorus& t, int i) { return std::sqrt(row_dot(t, i, i)); }

}  // namespace detail

inline double kInfLattice() { return std::numeric_limits<double>::infinity(); }

inline double volume(const FlatTorus& t) {
  double d = std::fabs(detail::det_n(t));
  require(d > 1e-12, ErrorKind::SingularBasis, "|det| must exceed 1e-12");
  return d;
}

// Pairwise greedy reduction: subtract rounded projections until stable and
// keep rows sorted by norm.  For n = 2 this is Gauss reduction and ends with
// |b1| <= |b2| and |<b1,b2>| <= |b1|^2 / 2.
inline FlatTorus reduce_basis(const FlatTorus& torus) {
  volume(torus);  // SingularBasis check
  FlatTorus t = torus;
  int n = t.n;
  auto sort_rows = [&] {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (detail::row_dot(t, j, j) < detail::row_dot(t, i, i)) std::swap(t.basis[i], t.basis[j]);
  };
  sort_rows();
  for (int pass = 0; pass < 64; ++pass) {
    bool changed = false;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        double q = std::round(detail::row_dot(t, i, j) / detail::row_dot(t, j, j));
        if (q == 0.0) continue;
        for (int k = 0; k < n; ++k) t.basis[i][k] -= q * t.basis[j][k];
        changed = true;
      }
    }
    sort_rows();
    if (!changed) break;
  }
  return t;
}

// Enumerate all lattice vectors of norm <= bound inside the certified
// coefficient box |c_i| <= bound * ||column i of B^-1|| and apply `fn`.
// The zero vector is included.
template <typename Fn>
inline void enumerate_up_to(const FlatTorus& t, double bound, Fn&& fn,
                            std::int64_t cap = global_limits().max_orbit_count) {
  volume(t);
  auto inv = detail::inverse_n(t);
  int n = t.n;
  std::array<std::int64_t, 4> box{};
  for (int i = 0; i < n; ++i) {
    double colnorm = 0.0;
    for (int k = 0; k < n; ++k) colnorm += inv[k][i] * inv[k][i];
    box[i] = static_cast<std::int64_t>(std::floor(bound * std::sqrt(colnorm) + tol::kCount)) + 1;
  }
  std::int64_t boxsize = 1;
  for (int i = 0; i < n; ++i) {
    boxsize *= 2 * box[i] + 1;
    require(boxsize <= cap, ErrorKind::ResourceLimit, "orbit enumeration box too large");
  }
  std::array<std::int64_t, 4> c{};
  double bound2 = bound * bound * (1.0 + 4.0 * tol::kCount) + tol::kCount;
  auto rec = [&](auto&& self, int i) -> void {
    if (i == n) {
      std::array<double, 4> x{};
      for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j) x[j] += static_cast<double>(c[k]) * t.basis[k][j];
      double n2 = 0.0;
      for (int j = 0; j < n; ++j) n2 += x[j] * x[j];
      if (n2 <= bound2) {
        LatticeVector v;
        v.coeffs = c;
        v.embedded = x;
        v.norm = std::sqrt(n2);
        fn(v);
      }
      return;
    }
    for (c[i] = -box[i]; c[i] <= box[i]; ++c[i]) self(self, i + 1);
  };
  rec(rec, 0);
}

// Shortest nonzero lattice vector; among ties the lexicographically smallest
// coefficient vector is returned, which pins the sign deterministically.
inline LatticeVector shortest_vector(const FlatTorus& torus) {
  FlatTorus r = reduce_basis(torus);
  double bound = detail::row_norm(r, 0);
  std::vector<LatticeVector> minima;
  double best_norm = kInfLattice();
  enumerate_up_to(r, bound, [&](const LatticeVector& v) {
    bool zero = true;
    for (int i = 0; i < r.n; ++i) zero = zero && v.coeffs[i] == 0;
    if (zero) return;
    if (v.norm < best_norm * (1.0 - tol::kInput)) {
      best_norm = v.norm;
      minima.clear();
      minima.push_back(v);
    } else if (v.norm <= best_norm * (1.0 + tol::kInput)) {
      minima.push_back(v);
    }
  });
  require(!minima.empty(), ErrorKind::SingularBasis, "no nonzero vector found");
  // Ties break on the lexicographically smallest coefficient vector with
  // respect to the caller's basis: c = x * B^-1.
  auto invb = detail::inverse_n(torus);
  LatticeVector best;
  bool found = false;
  for (auto& v : minima) {
    std::array<std::int64_t, 4> orig{};
    for (int j = 0; j < torus.n; ++j) {
      double s = 0.0;
      for (int k = 0; k < torus.n; ++k) s += v.embedded[k] * invb[k][j];
      orig[j] = static_cast<std::int64_t>(std::llround(s));
    }
    v.coeffs = orig;
    if (!found || v.coeffs < best.coeffs) {
      best = v;
      found = true;
    }
  }
  return best;
}

inline double systole_torus(const FlatTorus& t) { return shortest_vector(t).norm; }

// vol / sys^n; scale- and unimodular-invariant.
inline double systolic_ratio_torus(const FlatTorus& t) {
  double sys = systole_torus(t);
  return volume(t) / std::pow(sys, t.n);
}

// vol / inj^n with inj = sys/2 on a flat torus.
inline double embolic_torus(const FlatTorus& t) {
  double inj = systole_torus(t) / 2.0;
  return volume(t) / std::pow(inj, t.n);
}

// Number of lattice vectors of norm <= L, zero included.
inline std::int64_t orbit_count(const FlatTorus& t, double L,
                                std::int64_t cap = global_limits().max_orbit_count) {
  require(L >= 0, ErrorKind::InvalidInput, "L must be nonnegative");
  FlatTorus r = reduce_basis(t);
  std::int64_t count = 0;
  enumerate_up_to(
      r, L, [&](const LatticeVector& v) { if (v.norm <= L + tol::kCount) ++count; }, cap);
  require(count <= cap, ErrorKind::ResourceLimit, "orbit count exceeds cap");
  return count;
}

// Moduli point tau = (x, y), y > 0, for the torus with basis (1,0),(x,y).
struct ModuliPoint {
  double x = 0.0;
  double y = 1.0;
};

// Map a 2-torus to its representative in the standard fundamental domain
// |x| <= 1/2, x^2 + y^2 >= 1 (up to scale).  Boundary representatives are
// normalized to x = +1/2 and to x >= 0 on the unit circle; `snap` absorbs
// optimizer noise near those boundaries.
inline ModuliPoint reduce_to_fundamental_domain(const FlatTorus& torus, double snap = 1e-6) {
  require(torus.n == 2, ErrorKind::InvalidInput, "moduli reduction is 2-dimensional");
  FlatTorus r = reduce_basis(torus);
  double b1 = detail::row_norm(r, 0);
  double dot = detail::row_dot(r, 0, 1);
  double cross = r.basis[0][0] * r.basis[1][1] - r.basis[0][1] * r.basis[1][0];
  ModuliPoint tau;
  tau.x = dot / (b1 * b1);
  tau.y = std::fabs(cross) / (b1 * b1);
  if (tau.x < -0.5 + snap && tau.x >= -0.5 - snap) tau.x = 0.5;  // glue |x| = 1/2 edges
  if (std::fabs(tau.x * tau.x + tau.y * tau.y - 1.0) < snap && tau.x < 0) tau.x = -tau.x;
  if (std::fabs(tau.x) < snap) tau.x = std::fabs(tau.x);
  return tau;
}

}  // namespace systolab
