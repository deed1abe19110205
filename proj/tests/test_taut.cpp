#include <gtest/gtest.h>

#include <random>

#include "arcsys/arrangement.hpp"
#include "arcsys/constructions.hpp"
#include "arcsys/regions.hpp"
#include "arcsys/taut.hpp"
#include "oracles.hpp"

using namespace arcsys;

namespace {

ArcClass cls(int n, Side s, std::vector<int> seq) {
  ArcClass c;
  c.n = n;
  c.side = s;
  c.seq = std::move(seq);
  return c;
}

std::vector<ArcClass> sample(int n, int len, std::size_t count, unsigned seed) {
  auto all = enumerate_classes(SurfaceSpec(n), len);
  std::mt19937 rng(seed);
  std::shuffle(all.begin(), all.end(), rng);
  if (all.size() > count) all.resize(count);
  return all;
}

}  // namespace

TEST(Embed, PointsAndChords) {
  EmbeddedArc e = embed(cls(4, Side::Upper, {}));
  EXPECT_EQ(e.chord_count(), 1);
  EXPECT_TRUE(e.params.empty());
  EmbeddedArc a13 = embed(alpha_ij(5, 1, 3));
  EXPECT_EQ(a13.chord_count(), 4);
  ASSERT_EQ(a13.params.size(), 3u);
  for (int i = 0; i < 3; ++i) {
    int g = a13.cls.seq[i];
    EXPECT_GT(a13.params[i], Rational(g));
    EXPECT_LT(a13.params[i], Rational(g + 1));
  }
  EXPECT_THROW(embed(cls(3, Side::Upper, {2, 1})), std::domain_error);
}

TEST(Intersection, MatchesInterleavingOracleOnSample) {
  for (int n = 3; n <= 5; ++n) {
    auto cl = sample(n, 3, 25, 100 + n);
    for (std::size_t i = 0; i < cl.size(); ++i)
      for (std::size_t j = i; j < cl.size(); ++j)
        EXPECT_EQ(intersection_number(cl[i], cl[j]), oracle::min_interleaving_crossings(cl[i], cl[j]))
            << to_string(cl[i]) << " " << to_string(cl[j]);
  }
}

TEST(Intersection, SymmetricAndZeroOnDiagonal) {
  auto cl = sample(6, 5, 40, 7);
  for (std::size_t i = 0; i < cl.size(); ++i) {
    EXPECT_EQ(intersection_number(cl[i], cl[i]), 0);
    for (std::size_t j = i + 1; j < cl.size(); ++j)
      EXPECT_EQ(intersection_number(cl[i], cl[j]), intersection_number(cl[j], cl[i]));
  }
}

TEST(Intersection, RejectsUnrealizable) {
  EXPECT_THROW(intersection_number(cls(3, Side::Upper, {2, 1}), cls(3, Side::Upper, {})), std::domain_error);
}

TEST(Tighten, TraceStrictlyDecreasesToIntersectionNumber) {
  auto cl = sample(5, 4, 30, 11);
  for (std::size_t i = 0; i < cl.size(); ++i)
    for (std::size_t j = i + 1; j < cl.size(); ++j) {
      TightenResult r = tighten(embed(cl[i]), embed(cl[j]));
      ASSERT_FALSE(r.trace.empty());
      for (std::size_t t = 1; t < r.trace.size(); ++t) EXPECT_LT(r.trace[t], r.trace[t - 1]);
      EXPECT_EQ(r.trace.back(), r.crossings);
      EXPECT_EQ(r.crossings, intersection_number(cl[i], cl[j]));
      EXPECT_EQ(r.a.cls, cl[i]);
      EXPECT_EQ(r.b.cls, cl[j]);
    }
}

TEST(Tighten, PairsFromStackedReachPairwiseMinimum) {
  for (unsigned seed = 0; seed < 15; ++seed) {
    auto cl = sample(5, 4, 5, seed);
    Configuration cfg = stacked_configuration(SurfaceSpec(5), cl);
    std::vector<int> trace;
    tighten_pairs(cfg, &trace);
    for (std::size_t t = 1; t < trace.size(); ++t) EXPECT_LT(trace[t], trace[t - 1]);
    auto mat = cfg.crossing_matrix();
    for (std::size_t i = 0; i < cl.size(); ++i)
      for (std::size_t j = i + 1; j < cl.size(); ++j) EXPECT_EQ(mat[i][j], intersection_number(cl[i], cl[j]));
  }
}

TEST(MinimalPosition, PairwiseMinimalAndPlanar) {
  for (unsigned seed = 0; seed < 15; ++seed) {
    auto cl = sample(6, 4, 6, 40 + seed);
    Configuration cfg = minimal_position(cl);
    auto mat = cfg.crossing_matrix();
    int total = 0;
    for (std::size_t i = 0; i < cl.size(); ++i)
      for (std::size_t j = i + 1; j < cl.size(); ++j) {
        EXPECT_EQ(mat[i][j], intersection_number(cl[i], cl[j]));
        total += mat[i][j];
      }
    Arrangement arr = build_arrangement(cfg);
    EXPECT_EQ(arr.euler_characteristic(), 2);
    EXPECT_EQ(static_cast<int>(arr.crossings().size()), total);
    // Arcs joining p to q with c crossings: V = 2 + c, E = k + 2c, so F = k + c.
    EXPECT_EQ(static_cast<int>(arr.regions().size()), static_cast<int>(cl.size()) + total);
  }
}

TEST(Regions, NoEmptyBigonsAfterTightening) {
  for (unsigned seed = 0; seed < 20; ++seed) {
    auto cl = sample(5, 4, 4, 70 + seed);
    ComplementReport rep = complement_regions(cl);
    for (const auto& reg : rep.regions) {
      if (reg.kind == RegionKind::Bigon || reg.kind == RegionKind::HalfBigon) {
        // A bigon or half-bigon between two arcs must hold a puncture.
        bool two_arcs = reg.bounding_arcs.size() == 2;
        if (two_arcs) EXPECT_FALSE(reg.interior_punctures.empty());
      }
    }
  }
}

TEST(Regions, TwoDisjointArcsGiveTwoFaces) {
  ArcClass a = alpha_ij(6, 1, 3), b = alpha_ij(6, 2, 4);
  ASSERT_EQ(intersection_number(a, b), 0);
  ComplementReport rep = complement_regions({a, b});
  EXPECT_EQ(rep.regions.size(), 2u);
  for (const auto& reg : rep.regions) EXPECT_EQ(reg.kind, RegionKind::Strip);
}

TEST(Regions, SingleArcOneFace) {
  ComplementReport rep = complement_regions({cls(3, Side::Upper, {})});
  EXPECT_EQ(rep.regions.size(), 1u);
  EXPECT_TRUE(rep.p_isolated.empty());
}

TEST(Regions, EmptyChordsBoundStripThroughG0) {
  EmbeddedArc up = embed(cls(4, Side::Upper, {}));
  EmbeddedArc lo = up;
  lo.cls.side = Side::Lower;
  Arrangement arr = build_arrangement({up, lo});
  EXPECT_TRUE(arr.crossings().empty());
  bool found = false;
  for (const auto& reg : arr.regions())
    if (reg.interior_punctures.empty()) {
      auto b = reg.boundary_punctures;
      std::sort(b.begin(), b.end());
      found |= b == std::vector<Puncture>{Puncture::q(), Puncture::p()};
    }
  EXPECT_TRUE(found);
}

TEST(Regions, IntersectingOneSystemHasIsolatedPuncture) {
  ArcClass a = alpha_below(5), b = alpha_ij(5, 1, 3);
  ASSERT_EQ(intersection_number(a, b), 1);
  ComplementReport rep = complement_regions({a, b});
  EXPECT_FALSE(rep.p_isolated.empty());
}

TEST(Homotopy, GeometricAgreesWithNormalForm) {
  auto cl = sample(5, 4, 30, 3);
  for (std::size_t i = 0; i < cl.size(); ++i)
    for (std::size_t j = i; j < cl.size(); ++j) EXPECT_EQ(is_homotopic_geometric(cl[i], cl[j]), is_homotopic(cl[i], cl[j]));
  EXPECT_FALSE(is_homotopic(alpha_ij(5, 1, 3), alpha_below(5)));
}

TEST(RHomotopy, KindsAndPreimages) {
  for (int n = 4; n <= 5; ++n) {
    auto cl = enumerate_classes(SurfaceSpec(n), 3);
    for (int k = 1; k <= n - 2; ++k) {
      Puncture r = Puncture::r(k);
      for (std::size_t i = 0; i < cl.size(); ++i)
        for (std::size_t j = i + 1; j < cl.size(); ++j) {
          int c = intersection_number(cl[i], cl[j]);
          if (c > 2) {
            EXPECT_THROW(r_homotopic_configuration(cl[i], cl[j], r), std::domain_error);
            continue;
          }
          RConfigurationReport rep = r_homotopic_report(cl[i], cl[j], r);
          bool same = forget_puncture(cl[i], r) == forget_puncture(cl[j], r);
          EXPECT_EQ(rep.kind != RConfiguration::NotRHomotopic, same);
          if (!same) continue;
          EXPECT_EQ(rep.crossings, c);
          switch (rep.kind) {
            case RConfiguration::DisjointStrip:
              EXPECT_EQ(c, 0);
              EXPECT_EQ(rep.region_of_r.kind, RegionKind::Strip);
              break;
            case RConfiguration::OneCrossingHalfBigon:
              EXPECT_EQ(c, 1);
              EXPECT_EQ(rep.region_of_r.kind, RegionKind::HalfBigon);
              break;
            case RConfiguration::TwoCrossingBigon:
              EXPECT_EQ(c, 2);
              EXPECT_EQ(rep.region_of_r.kind, RegionKind::Bigon);
              break;
            case RConfiguration::TwoCrossingDoubleHalfBigon:
              EXPECT_EQ(c, 2);
              break;
            default:
              break;
          }
          auto in = rep.region_of_r.interior_punctures;
          EXPECT_TRUE(std::find(in.begin(), in.end(), r) != in.end());
        }
    }
  }
}

TEST(RHomotopy, EqualClassesRejected) {
  ArcClass a = alpha_ij(5, 1, 3);
  EXPECT_THROW(r_homotopic_configuration(a, a, Puncture::r(1)), std::invalid_argument);
}
