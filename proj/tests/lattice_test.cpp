#include "systolab/lattice.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace systolab;

namespace {

// Independent oracle: plain exhaustive scan over |m|,|n| <= box without any
// basis reduction.  Returns (min norm, number of minima up to the scan box).
std::pair<double, int> brute_shortest_2d(const FlatTorus& t, int box = 20) {
  double best = 1e300;
  int count = 0;
  for (int m = -box; m <= box; ++m) {
    for (int n = -box; n <= box; ++n) {
      if (m == 0 && n == 0) continue;
      double x = m * t.basis[0][0] + n * t.basis[1][0];
      double y = m * t.basis[0][1] + n * t.basis[1][1];
      double nrm = std::hypot(x, y);
      if (nrm < best - 1e-12) {
        best = nrm;
        count = 1;
      } else if (nrm <= best + 1e-12) {
        ++count;
      }
    }
  }
  return {best, count};
}

std::int64_t brute_orbit_count_z2(double L, int box) {
  std::int64_t c = 0;
  for (int m = -box; m <= box; ++m)
    for (int n = -box; n <= box; ++n)
      if (std::hypot(m, n) <= L + 1e-9) ++c;
  return c;
}

FlatTorus hexagonal() { return FlatTorus::from_rows({{1.0, 0.0}, {0.5, std::sqrt(3.0) / 2.0}}); }

}  // namespace

TEST(Lattice, ShortestVectorIdentity) {
  auto t = FlatTorus::from_rows({{1, 0}, {0, 1}});
  EXPECT_NEAR(shortest_vector(t).norm, 1.0, 1e-12);
}

TEST(Lattice, ShortestVectorSkewedAgainstBruteForce) {
  auto t = FlatTorus::from_rows({{1.0, 0.0}, {0.5, 0.1}});
  auto sv = shortest_vector(t);
  auto [oracle, _] = brute_shortest_2d(t);
  EXPECT_NEAR(sv.norm, oracle, 1e-12);
  EXPECT_NEAR(sv.norm, 0.2, 1e-12);
  EXPECT_EQ(sv.coeffs[0], -1);
  EXPECT_EQ(sv.coeffs[1], 2);
  EXPECT_NEAR(sv.embedded[0], 0.0, 1e-12);
  EXPECT_NEAR(sv.embedded[1], 0.2, 1e-12);
}

TEST(Lattice, HexagonalMinimaCountIsSix) {
  auto t = hexagonal();
  auto [oracle, count] = brute_shortest_2d(t);
  EXPECT_NEAR(oracle, 1.0, 1e-12);
  EXPECT_EQ(count, 6);
  EXPECT_NEAR(shortest_vector(t).norm, 1.0, 1e-12);
}

TEST(Lattice, SystolicRatioExamples) {
  EXPECT_NEAR(systolic_ratio_torus(FlatTorus::from_rows({{1, 0}, {0, 1}})), 1.0, 1e-12);
  EXPECT_NEAR(systolic_ratio_torus(hexagonal()), std::sqrt(3.0) / 2.0, 1e-12);
  EXPECT_NEAR(systolic_ratio_torus(FlatTorus::from_rows({{1, 0}, {0, 3}})), 3.0, 1e-12);
}

TEST(Lattice, ReduceBasisByHand) {
  auto r = reduce_basis(FlatTorus::from_rows({{1, 0}, {10, 1}}));
  // Same lattice as Z^2, rows of norm 1 and orthogonal.
  EXPECT_NEAR(detail::row_norm(r, 0), 1.0, 1e-12);
  EXPECT_NEAR(detail::row_norm(r, 1), 1.0, 1e-12);
  EXPECT_NEAR(detail::row_dot(r, 0, 1), 0.0, 1e-12);
  EXPECT_NEAR(std::fabs(detail::det_n(r)), 1.0, 1e-12);
}

TEST(Lattice, ReduceBasisHexAlreadyReduced) {
  auto r = reduce_basis(hexagonal());
  EXPECT_NEAR(detail::row_norm(r, 0), 1.0, 1e-12);
  EXPECT_NEAR(detail::row_norm(r, 1), 1.0, 1e-12);
  EXPECT_NEAR(std::fabs(detail::row_dot(r, 0, 1)), 0.5, 1e-12);
}

TEST(Lattice, SingularBasisRejected) {
  EXPECT_THROW(reduce_basis(FlatTorus::from_rows({{0, 0}, {0, 1}})), Error);
  EXPECT_THROW(shortest_vector(FlatTorus::from_rows({{1, 1}, {2, 2}})), Error);
}

TEST(Lattice, OrbitCountExamples) {
  auto z2 = FlatTorus::from_rows({{1, 0}, {0, 1}});
  EXPECT_EQ(orbit_count(z2, 0.0), 1);
  EXPECT_EQ(orbit_count(z2, 1.0), 5);
  EXPECT_EQ(orbit_count(z2, 2.0), 13);
  EXPECT_EQ(orbit_count(z2, 1.0), brute_orbit_count_z2(1.0, 2));
  EXPECT_EQ(orbit_count(z2, 2.0), brute_orbit_count_z2(2.0, 3));
  for (int L = 3; L <= 8; ++L)
    EXPECT_EQ(orbit_count(z2, L), brute_orbit_count_z2(L, L + 2)) << "L=" << L;
}

TEST(Lattice, OrbitCountMonotone) {
  auto t = hexagonal();
  std::int64_t prev = 0;
  for (double L = 0.0; L <= 4.0; L += 0.25) {
    auto c = orbit_count(t, L);
    EXPECT_GE(c, 1);
    EXPECT_GE(c, prev);
    prev = c;
  }
}

TEST(Lattice, EmbolicValues) {
  EXPECT_NEAR(embolic_torus(FlatTorus::from_rows({{1, 0}, {0, 1}})), 4.0, 1e-12);
  EXPECT_NEAR(embolic_torus(hexagonal()), 2.0 * std::sqrt(3.0), 1e-12);
  double berger2 = 4.0 / M_PI;
  EXPECT_GE(embolic_torus(FlatTorus::from_rows({{1, 0}, {0, 1}})), berger2);
  EXPECT_GE(embolic_torus(hexagonal()), berger2);
}

TEST(Lattice, ScaleEquivariance) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-2.0, 2.0), up(0.2, 3.0), uc(0.1, 5.0);
  for (int i = 0; i < 50; ++i) {
    auto t = FlatTorus::from_rows({{up(rng), u(rng)}, {u(rng), up(rng)}});
    if (std::fabs(detail::det_n(t)) < 0.05) continue;
    double c = uc(rng);
    FlatTorus s = t;
    for (int r = 0; r < 2; ++r)
      for (int k = 0; k < 2; ++k) s.basis[r][k] *= c;
    EXPECT_NEAR(shortest_vector(s).norm, c * shortest_vector(t).norm,
                1e-12 * std::max(1.0, c * shortest_vector(t).norm));
    EXPECT_NEAR(systolic_ratio_torus(s), systolic_ratio_torus(t),
                1e-12 * std::max(1.0, systolic_ratio_torus(t)));
  }
}

TEST(Lattice, UnimodularInvariance100Cases) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> pick(-3, 3);
  auto base = hexagonal();
  double ratio0 = systolic_ratio_torus(base);
  double sys0 = systole_torus(base);
  auto orbit0 = orbit_count(base, 2.5);
  for (int i = 0; i < 100; ++i) {
    // Random SL(2,Z) word built from shears, applied to the coefficient grid.
    long a = 1, b = 0, c = 0, d = 1;
    for (int s = 0; s < 6; ++s) {
      int k = pick(rng);
      if (s % 2 == 0) {
        a += static_cast<long>(k) * c;
        b += static_cast<long>(k) * d;
      } else {
        c += static_cast<long>(k) * a;
        d += static_cast<long>(k) * b;
      }
    }
    FlatTorus t = base;
    for (int col = 0; col < 2; ++col) {
      t.basis[0][col] = a * base.basis[0][col] + b * base.basis[1][col];
      t.basis[1][col] = c * base.basis[0][col] + d * base.basis[1][col];
    }
    ASSERT_NEAR(std::fabs(detail::det_n(t)), std::fabs(detail::det_n(base)), 1e-9);
    EXPECT_NEAR(systole_torus(t), sys0, 1e-9);
    EXPECT_NEAR(systolic_ratio_torus(t), ratio0, 1e-12);
    EXPECT_EQ(orbit_count(t, 2.5), orbit0);
  }
}

TEST(Lattice, LoewnerLowerBound1000RandomTori) {
  std::mt19937 rng(2024);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  double bound = std::sqrt(3.0) / 2.0 - 1e-9;
  for (int i = 0; i < 1000; ++i) {
    double a = u(rng), b = u(rng), c = u(rng), d = u(rng);
    if (std::fabs(a * d - b * c) < 1e-3) continue;
    auto t = FlatTorus::from_rows({{a, b}, {c, d}});
    EXPECT_GE(systolic_ratio_torus(t), bound);
  }
}

TEST(Lattice, FundamentalDomainReduction) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> ux(-2.0, 2.0), uy(0.05, 3.0);
  for (int i = 0; i < 100; ++i) {
    double x = ux(rng), y = uy(rng);
    auto t = FlatTorus::from_tau(x, y);
    auto tau = reduce_to_fundamental_domain(t);
    EXPECT_LE(std::fabs(tau.x), 0.5 + 1e-9);
    EXPECT_GE(tau.x * tau.x + tau.y * tau.y, 1.0 - 1e-9);
    // Same torus up to scale: the ratio agrees to 1e-12.
    auto t2 = FlatTorus::from_tau(tau.x, tau.y);
    EXPECT_NEAR(systolic_ratio_torus(t2), systolic_ratio_torus(t), 1e-12);
  }
}

TEST(Lattice, FourDimensionalShortestVector) {
  auto t = FlatTorus::from_rows(
      {{1, 0, 0, 0}, {0.5, 1, 0, 0}, {0.5, 0.5, 1, 0}, {0.5, 0.5, 0.5, 0.25}});
  // Independent oracle: plain scan over |c_i| <= 4.
  double oracle = 1e300;
  for (int a = -4; a <= 4; ++a)
    for (int b = -4; b <= 4; ++b)
      for (int c = -4; c <= 4; ++c)
        for (int d = -4; d <= 4; ++d) {
          if (!a && !b && !c && !d) continue;
          double x[4] = {0, 0, 0, 0};
          int coef[4] = {a, b, c, d};
          for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j) x[j] += coef[i] * t.basis[i][j];
          double n2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2] + x[3] * x[3];
          oracle = std::min(oracle, std::sqrt(n2));
        }
  auto sv = shortest_vector(t);
  EXPECT_NEAR(sv.norm, oracle, 1e-12);
  EXPECT_NEAR(systolic_ratio_torus(t), volume(t) / std::pow(oracle, 4), 1e-9);
}

TEST(Lattice, TauShorthandRequiresPositiveY) {
  EXPECT_THROW(FlatTorus::from_tau(0.0, -1.0), Error);
}
