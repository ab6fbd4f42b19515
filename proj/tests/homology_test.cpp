#include "systolab/homology.hpp"

#include <gtest/gtest.h>

#include "systolab/builders.hpp"
#include "systolab/cover.hpp"

using namespace systolab;

TEST(Z2Labels, BettiNumbers) {
  EXPECT_EQ(betti1_z2(make_surface(tetrahedron_input())), 0);
  EXPECT_EQ(betti1_z2(make_surface(square_torus_grid_input(4))), 2);
  EXPECT_EQ(betti1_z2(make_surface(hex_torus_grid_input(3))), 2);
  EXPECT_EQ(betti1_z2(make_surface(rp2_six_input())), 1);
  EXPECT_EQ(betti1_z2(make_surface(genus2_octagon_input())), 4);
}

TEST(Z2Labels, FaceBoundariesAreTrivial) {
  auto s = make_surface(genus2_octagon_input());
  auto lab = z2_labels(s);
  for (int t = 0; t < s.triangle_count(); ++t) {
    auto c = make_cycle(s, {s.tri[t][0], s.tri[t][1], s.tri[t][2], s.tri[t][0]});
    EXPECT_EQ(lab.cycle_class(s, c), 0u);
  }
}

TEST(HomologySystole, SquareTorusAxis) {
  auto s = make_surface(square_torus_grid_input(4));
  auto r = homology_systole_z2(s);
  EXPECT_NEAR(r.length, 1.0, 1e-9);
  EXPECT_TRUE(r.certified);
  auto lab = z2_labels(s);
  EXPECT_NE(lab.cycle_class(s, r.representative), 0u);
}

TEST(HomologySystole, Rp2AgainstBruteForce) {
  // Every pair of the six vertices is a unit edge; enumerate all closed
  // 3-step walks and test triviality via the cover, entirely independent of
  // the labeled search.
  auto s = make_surface(rp2_six_input());
  double oracle = kInf;
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b)
      for (int c = 0; c < 6; ++c) {
        if (a == b || b == c || a == c) continue;
        auto cyc = make_cycle(s, {a, b, c, a});
        if (!is_contractible(s, cyc)) oracle = std::min(oracle, cyc.length);
      }
  EXPECT_NEAR(oracle, 3.0, 1e-12);
  auto r = homology_systole_z2(s);
  EXPECT_NEAR(r.length, 3.0, 1e-9);
  auto lab = z2_labels(s);
  EXPECT_NE(lab.cycle_class(s, r.representative), 0u);
  EXPECT_FALSE(is_contractible(s, r.representative));
}

TEST(HomologySystole, TetrahedronTrivial) {
  auto s = make_surface(tetrahedron_input());
  EXPECT_THROW(homology_systole_z2(s), Error);
}

TEST(HomologySystole, SubdividedTorusStaysOne) {
  auto s = subdivide(make_surface(square_torus_grid_input(4)), 2);
  auto r = homology_systole_z2(s);
  EXPECT_NEAR(r.length, 1.0, 1e-9);
}

TEST(HomologySystole, RepresentativeLengthMatches) {
  for (auto in : {square_torus_grid_input(4), hex_torus_grid_input(3), rp2_icosa_input(),
                  genus2_octagon_input()}) {
    auto s = make_surface(in);
    auto r = homology_systole_z2(s);
    EXPECT_NEAR(r.representative.length, r.length, 1e-9);
  }
}
