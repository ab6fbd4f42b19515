#include "systolab/cover.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "systolab/builders.hpp"
#include "systolab/lattice.hpp"

using namespace systolab;

namespace {

Surface grid_torus(int m = 4, int k = 0) {
  auto s = make_surface(square_torus_grid_input(m));
  return k ? subdivide(s, k) : s;
}

}  // namespace

TEST(Develop, TetrahedronHasOneLift) {
  auto s = make_surface(tetrahedron_input());
  for (double L : {0.5, 2.0, 7.0}) {
    auto r = develop(s, 0, L);
    EXPECT_EQ(r.lifts.size(), 1u);
    EXPECT_EQ(r.cover_vertex_count, 4);  // the cover is the sphere itself
  }
}

TEST(Develop, SquareTorusLiftCountsMatchLattice) {
  auto s = grid_torus();
  auto z2 = square_lattice();
  // Euclidean lattice counts: the criss-cross grid realizes axis and both
  // diagonal directions exactly, so these radii see equal counts.
  EXPECT_EQ(loop_class_count(s, 0, 1.5), orbit_count(z2, 1.5));  // 9: includes the 4 diagonals
  EXPECT_EQ(loop_class_count(s, 0, 2.0), 13);
  EXPECT_EQ(orbit_count(z2, 2.0), 13);
  auto r = develop(s, 0, 1.0);
  ASSERT_EQ(r.lifts.size(), 5u);
  EXPECT_NEAR(r.lifts[0].first, 0.0, 1e-12);
  for (int i = 1; i < 5; ++i) EXPECT_NEAR(r.lifts[i].first, 1.0, 1e-12);
}

TEST(Develop, CountsIndependentOfVertexLabeling) {
  auto in = square_torus_grid_input(4);
  auto s = make_surface(in);
  std::mt19937 rng(17);
  std::vector<int> perm(16);
  for (int i = 0; i < 16; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);
  auto relabeled = in;
  for (auto& t : relabeled.triangles)
    for (auto& v : t) v = perm[v];
  auto s2 = make_surface(relabeled);
  for (double L : {1.0, 1.5, 2.0, 2.5}) {
    EXPECT_EQ(loop_class_count(s, 3, L), loop_class_count(s2, perm[3], L)) << L;
  }
}

TEST(Develop, ResourceCapTriggers) {
  auto s = grid_torus(4, 2);
  Limits lim;
  lim.max_cover_vertices = 50;
  EXPECT_THROW(develop(s, 0, 3.0, lim), Error);
}

TEST(Develop, OctagonLoopClassesAtSideLength) {
  // Based classes at the cone point with representatives of length <= 1:
  // the trivial class plus the eight oriented side loops.
  auto s = make_surface(genus2_octagon_input());
  EXPECT_EQ(loop_class_count(s, 0, 0.0), 1);
  EXPECT_EQ(loop_class_count(s, 0, 1.0), 9);
}

TEST(Contractible, TriangleBoundaryAndBacktrack) {
  auto s = grid_torus();
  int a = s.tri[0][0], b = s.tri[0][1], c = s.tri[0][2];
  EXPECT_TRUE(is_contractible(s, make_cycle(s, {a, b, c, a})));
  EXPECT_TRUE(is_contractible(s, make_cycle(s, {a, b, a})));
}

TEST(Contractible, MeridianOfTorusIsNot) {
  auto s = grid_torus();
  EXPECT_FALSE(is_contractible(s, make_cycle(s, {0, 1, 2, 3, 0})));
}

TEST(Contractible, AllSmallWalksOnSphereContract) {
  auto s = make_surface(tetrahedron_input());
  EXPECT_TRUE(is_contractible(s, make_cycle(s, {0, 1, 2, 3, 0})));
  EXPECT_TRUE(is_contractible(s, make_cycle(s, {0, 1, 2, 0, 3, 1, 0})));
}

TEST(HomotopySystole, SquareTorus) {
  for (int k = 0; k <= 2; ++k) {
    auto s = grid_torus(4, k);
    auto r = homotopy_systole(s);
    EXPECT_NEAR(r.length, 1.0, 1e-9) << "k=" << k;
    EXPECT_TRUE(r.certified);
    EXPECT_NEAR(r.representative.length, r.length, 1e-9);
    EXPECT_FALSE(is_contractible(s, r.representative));
  }
}

TEST(HomotopySystole, HexTorusMatchesLattice) {
  auto s = make_surface(hex_torus_grid_input(3));
  auto r = homotopy_systole(s);
  EXPECT_NEAR(r.length, systole_torus(hex_lattice()), 1e-9);
  EXPECT_FALSE(is_contractible(s, r.representative));
}

TEST(HomotopySystole, SphereRejected) {
  auto s = make_surface(tetrahedron_input());
  EXPECT_THROW(homotopy_systole(s), Error);
}

TEST(HomotopySystole, OctagonSideLoop) {
  auto s = make_surface(genus2_octagon_input());
  auto r = homotopy_systole(s);
  EXPECT_NEAR(r.length, 1.0, 1e-9);
  EXPECT_FALSE(is_contractible(s, r.representative));
}

TEST(HomotopySystole, AtMostHomologySystole) {
  for (auto in : {square_torus_grid_input(4), hex_torus_grid_input(3), genus2_octagon_input(),
                  rp2_icosa_input()}) {
    auto s = make_surface(in);
    auto hom = homotopy_systole(s);
    auto z2 = homology_systole_z2(s);
    EXPECT_LE(hom.length, z2.length + 1e-12);
  }
}

TEST(HomotopySystole, SubdivisionMonotone) {
  auto base = make_surface(rp2_icosa_input());
  double prev = kInf;
  for (int k = 0; k <= 2; ++k) {
    auto s = subdivide(base, k);
    auto r = homotopy_systole(s);
    EXPECT_LE(r.length, prev + 1e-12) << "k=" << k;
    prev = r.length;
  }
}

TEST(Lemma57, SquareGeodesicTorusIntegerRadii) {
  // Exact equality of the two counters on the direction-enriched square
  // torus: graph and lattice distances agree on every lattice vector of
  // norm <= 6.
  auto s = make_surface(square_torus_geodesic_input());
  auto z2 = square_lattice();
  for (int L = 0; L <= 6; ++L) {
    EXPECT_EQ(loop_class_count(s, 0, L), orbit_count(z2, L)) << "L=" << L;
  }
}

TEST(Lemma57, HexTorusIntegerRadii) {
  auto s = make_surface(hex_torus_grid_input(3));
  auto hexl = hex_lattice();
  for (int L = 0; L <= 6; ++L) {
    EXPECT_EQ(loop_class_count(s, 0, L), orbit_count(hexl, L)) << "L=" << L;
  }
}

TEST(Lemma57, SubdividedGeodesicTorusStaysExact) {
  auto s = subdivide(make_surface(square_torus_geodesic_input()), 1);
  auto z2 = square_lattice();
  for (int L = 0; L <= 4; ++L) {
    EXPECT_EQ(loop_class_count(s, 0, L), orbit_count(z2, L)) << "L=" << L;
  }
}
