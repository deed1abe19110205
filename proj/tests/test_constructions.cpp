#include <gtest/gtest.h>

#include <cstdio>

#include "arcsys/constructions.hpp"
#include "arcsys/extremal.hpp"
#include "arcsys/regions.hpp"
#include "arcsys/taut.hpp"

using namespace arcsys;

namespace {

long choose(long n, long k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

// Gap holding the integer root m when r_i sits at i - 1/2.
int gap_of_root(int n, int m) {
  if (m == 0) return 1;
  if (m == n - 2) return n - 1;
  return m + 1;
}

// Reads alpha_abc off the sign pattern of (x+1)(x-a)(x-b)(x-c).
ArcClass quartic_arc(int n, int a, int b, int c) {
  std::vector<int> roots{a, b, c};
  std::vector<int> crossings;
  for (int m : roots) {
    int mult = static_cast<int>(std::count(roots.begin(), roots.end(), m));
    if (mult % 2 == 1) crossings.push_back(gap_of_root(n, m));
  }
  // Just right of -1 every factor (x - root) is negative.
  int sign = (roots.size() % 2 == 0) ? 1 : -1;
  return reduce(SurfaceSpec(n), sign > 0 ? Side::Upper : Side::Lower, crossings);
}

}  // namespace

TEST(TwoSystem, SizeAndPartition) {
  EXPECT_EQ(max_two_system(3).size(), 1);
  EXPECT_EQ(max_two_system(3).classes[0].seq, std::vector<int>{});
  for (int n = 3; n <= 9; ++n) {
    ArcSystem sys = max_two_system(n);
    EXPECT_EQ(sys.size(), choose(n, 3));
    EXPECT_LE(sys.max_crossing(), 2);
    int below = 0, dbl = 0, triple = 0, ij = 0;
    for (const auto& lab : sys.labels) {
      int x = 0, y = 0, z = 0;
      int got = std::sscanf(lab.c_str(), "alpha_%d,%d,%d", &x, &y, &z);
      if (lab == "alpha_<-1") ++below;
      else if (got == 2) ++ij;
      else if (got == 3 && y == z) ++dbl;
      else if (got == 3) ++triple;
    }
    EXPECT_EQ(below, 1) << n;
    EXPECT_EQ(dbl, n - 3) << n;
    EXPECT_EQ(triple, choose(n - 1, 3)) << n;
    EXPECT_EQ(ij, choose(n - 2, 2)) << n;
  }
  EXPECT_THROW(max_two_system(2), std::domain_error);
}

TEST(TwoSystem, CountIdentity) {
  for (long n = 3; n <= 50; ++n) EXPECT_EQ(1 + (n - 3) + choose(n - 1, 3) + choose(n - 2, 2), choose(n, 3));
}

TEST(TwoSystem, QuarticArcsMatchSignPattern) {
  EXPECT_EQ(alpha_abc(5, 1, 2, 3), reduce(SurfaceSpec(5), Side::Lower, {2, 3}));
  for (int n = 4; n <= 8; ++n)
    for (int a = 0; a <= n - 2; ++a)
      for (int b = a + 1; b <= n - 2; ++b) {
        for (int c = b + 1; c <= n - 2; ++c) EXPECT_EQ(alpha_abc(n, a, b, c), quartic_arc(n, a, b, c));
        if (a > 0 && b == n - 2) EXPECT_EQ(alpha_abc(n, a, b, b), quartic_arc(n, a, b, b));
      }
}

TEST(TwoSystem, TwistArcsAndRootGaps) {
  for (int n = 4; n <= 8; ++n) {
    for (int m = 0; m <= n - 2; ++m) EXPECT_EQ(root_gap(m), gap_of_root(n, m));
    for (int i = 1; i <= n - 2; ++i)
      for (int j = i + 1; j <= n - 2; ++j) EXPECT_EQ(alpha_ij(n, i, j), reduce(SurfaceSpec(n), Side::Upper, {i + 1, 0, j}));
  }
  EXPECT_EQ(alpha_below(5), reduce(SurfaceSpec(5), Side::Upper, {}));
}

TEST(TwoSystem, CaseTable) {
  for (int n = 4; n <= 8; ++n)
    for (int i = 1; i <= n - 2; ++i)
      for (int j = i + 1; j <= n - 2; ++j)
        for (int i2 = i; i2 <= n - 2; ++i2)
          for (int j2 = i2 + 1; j2 <= n - 2; ++j2) {
            if (i2 == i && j2 <= j) continue;
            int want = (i2 < j && j <= j2) ? 0 : (i2 < j2 && j2 < j) ? 1 : 2;
            EXPECT_EQ(intersection_number(alpha_ij(n, i, j), alpha_ij(n, i2, j2)), want) << n << " " << i << j << i2 << j2;
          }
}

TEST(TwoSystem, TwistArcsVersusOthers) {
  for (int n = 4; n <= 7; ++n)
    for (int i = 1; i <= n - 2; ++i)
      for (int j = i + 1; j <= n - 2; ++j) {
        ArcClass t = alpha_ij(n, i, j);
        EXPECT_EQ(intersection_number(t, alpha_below(n)), 1);
        EXPECT_EQ(reduce(alpha_ij_drawing(n, i, j).cls), t);
        for (int a = 0; a <= n - 2; ++a)
          for (int b = a + 1; b <= n - 2; ++b)
            for (int c = b; c <= n - 2; ++c) {
              if (c == b && !(a > 0 && b == n - 2)) continue;
              EmbeddedArc d = alpha_abc_drawing(n, a, b, c);
              EXPECT_EQ(reduce(d.cls), alpha_abc(n, a, b, c));
              // The pictures meet exactly twice; the minimum may be lower.
              Configuration pic = configuration_of({alpha_ij_drawing(n, i, j), d});
              EXPECT_EQ(pic.crossings(0, 1), 2);
              EXPECT_LE(intersection_number(t, alpha_abc(n, a, b, c)), 2);
            }
      }
}

TEST(TwoSystem, TwistVersusQuarticCanBeDisjoint) {
  // n = 4: alpha_12 = U[2,0,2], alpha_012 = U[2]. Putting the U[2] point between
  // the two gap-2 points of U[2,0,2] removes both crossings.
  EXPECT_EQ(intersection_number(alpha_ij(4, 1, 2), alpha_abc(4, 0, 1, 2)), 0);
}

TEST(TwoSystem, PassesVerifier) {
  for (int n = 3; n <= 7; ++n) {
    ArcSystem sys = max_two_system(n);
    EXPECT_TRUE(verify_k_system(sys, 2).ok) << n;
    for (int x = 0; x < sys.size(); ++x)
      for (int y = x + 1; y < sys.size(); ++y) EXPECT_FALSE(is_homotopic(sys.classes[x], sys.classes[y]));
  }
}

TEST(TwoSystem, GammaCertificates) {
  for (int n = 4; n <= 7; ++n)
    for (int k = 1; k <= n - 3; ++k) {
      ArcClass g = gamma_arc(n, k);
      EXPECT_EQ(g.from, Puncture::r(k));
      EXPECT_EQ(g.to, Puncture::r(k + 1));
      EXPECT_TRUE(is_realizable(g));
    }
}

TEST(ZeroSystem, OncePuncturedStrips) {
  for (int n = 3; n <= 8; ++n) {
    ArcSystem z = zero_system(n);
    ASSERT_EQ(z.size(), n - 2);
    EXPECT_EQ(z.max_crossing(), 0);
    ComplementReport rep = complement_regions(z.classes);
    EXPECT_EQ(static_cast<int>(rep.regions.size()), n - 2);
    for (const auto& reg : rep.regions) {
      // With a single arc the lone face is not a strip between two arcs.
      if (n > 3) EXPECT_EQ(reg.kind, RegionKind::Strip);
      EXPECT_EQ(reg.interior_punctures.size(), 1u);
    }
    for (int x = 0; x < z.size(); ++x)
      for (int y = x + 1; y < z.size(); ++y) EXPECT_FALSE(is_homotopic(z.classes[x], z.classes[y]));
  }
  EXPECT_THROW(zero_system(2), std::domain_error);
}
