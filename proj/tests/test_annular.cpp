#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "arcsys/annular.hpp"
#include "arcsys/annulus.hpp"
#include "arcsys/arrangement.hpp"
#include "arcsys/constructions.hpp"

using namespace arcsys;

namespace {

// Crossings of the straight segments (i, 0)-(T_i, 1) and their translates by
// multiples of m, counted exactly: two segments cross iff their endpoint
// differences change sign.
int strip_crossings(const AnnulusArcSpec& s, int i, int j) {
  const int m = s.size();
  const int ti = s.top[i] + m * s.winding[i], tj = s.top[j] + m * s.winding[j];
  int count = 0;
  for (int k = -4 * m - 8; k <= 4 * m + 8; ++k) {
    long lo = i - (j + static_cast<long>(k) * m), hi = ti - (tj + static_cast<long>(k) * m);
    if ((lo < 0) != (hi < 0)) ++count;
  }
  return count;
}

int upper_sum(const std::vector<std::vector<int>>& mat) {
  int s = 0;
  for (std::size_t i = 0; i < mat.size(); ++i)
    for (std::size_t j = i + 1; j < mat.size(); ++j) s += mat[i][j];
  return s;
}

std::set<int> corner_oracle(const AnnularDiagram& d, int which) {
  DiagramFaces f = diagram_faces(d);
  auto rot = d.map.rotations();
  std::set<int> out;
  int st = d.boundary[which], x = st;
  do {
    int v = d.map.vertex[x];
    if (rot[v].size() == 2) {
      for (int e : rot[v]) {
        int face = f.face_of[e];
        if (face != f.boundary_face[0] && face != f.boundary_face[1]) out.insert(v);
      }
    }
    x = d.map.face_next(x);
  } while (x != st);
  return out;
}

AnnularDiagram relabel(const AnnularDiagram& d, std::mt19937& rng) {
  const int nd = d.map.dart_count();
  std::vector<int> dp(nd), vp(d.map.vertex_count);
  std::iota(dp.begin(), dp.end(), 0);
  std::iota(vp.begin(), vp.end(), 0);
  std::shuffle(dp.begin(), dp.end(), rng);
  std::shuffle(vp.begin(), vp.end(), rng);
  AnnularDiagram r;
  r.map.vertex_count = d.map.vertex_count;
  r.map.vertex.assign(nd, 0);
  r.map.opposite.assign(nd, 0);
  r.map.next.assign(nd, 0);
  for (int x = 0; x < nd; ++x) {
    r.map.vertex[dp[x]] = vp[d.map.vertex[x]];
    r.map.opposite[dp[x]] = dp[d.map.opposite[x]];
    r.map.next[dp[x]] = dp[d.map.next[x]];
  }
  r.boundary = {dp[d.boundary[0]], dp[d.boundary[1]]};
  return r;
}

// Splits the edge of dart d with a new degree-2 vertex.
AnnularDiagram subdivide(const AnnularDiagram& d, int dart) {
  AnnularDiagram r = d;
  PlaneMap& m = r.map;
  const int o = m.opposite[dart];
  const int x = m.dart_count(), y = x + 1, w = m.vertex_count++;
  m.vertex.push_back(w);
  m.vertex.push_back(w);
  m.opposite.push_back(dart);
  m.opposite.push_back(o);
  m.next.push_back(y);
  m.next.push_back(x);
  m.opposite[dart] = x;
  m.opposite[o] = y;
  return r;
}

const std::vector<TautEnumerated>& small_family() {
  static const auto fam = enumerate_taut_annulus_diagrams(4, 1, 1);
  return fam;
}

}  // namespace

TEST(Cycle, NoSquaresAndDisjointCurves) {
  for (int m = 1; m <= 6; ++m) {
    AnnularDiagram c = make_cycle(m);
    std::string why;
    EXPECT_TRUE(validate(c, &why)) << why;
    EXPECT_TRUE(is_cycle(c));
    EXPECT_EQ(square_count(c), 0);
    DualCurveReport rep = trace_dual_curves(c);
    EXPECT_EQ(static_cast<int>(rep.curves.size()), m);
    EXPECT_EQ(upper_sum(rep.crossings), 0);
    EXPECT_TRUE(is_k_system_diagram(c, 0));
    EXPECT_FALSE(find_corner(c, 0).has_value());
  }
}

TEST(AnnulusDiagram, SquaresMatchStripCrossings) {
  ASSERT_FALSE(small_family().empty());
  for (const auto& t : small_family()) {
    const auto& s = t.spec;
    std::string why;
    ASSERT_TRUE(validate(t.diagram, &why)) << to_string(s) << ": " << why;
    int total = 0, worst = 0;
    auto mat = annulus_crossings(s);
    for (int i = 0; i < s.size(); ++i)
      for (int j = i + 1; j < s.size(); ++j) {
        int c = strip_crossings(s, i, j);
        EXPECT_EQ(mat[i][j], c) << to_string(s);
        total += c;
        worst = std::max(worst, c);
      }
    EXPECT_EQ(square_count(t.diagram), total) << to_string(s);
    DualCurveReport rep = trace_dual_curves(t.diagram);
    EXPECT_EQ(static_cast<int>(rep.curves.size()), s.size());
    EXPECT_TRUE(rep.all_join_boundaries);
    EXPECT_EQ(upper_sum(rep.crossings), total);
    EXPECT_TRUE(is_k_system_diagram(t.diagram, worst));
    if (worst > 0) EXPECT_FALSE(is_k_system_diagram(t.diagram, worst - 1));
  }
}

TEST(AnnulusDiagram, DoubleCrossingIsNotOneSystem) {
  AnnulusArcSpec s{{0, 1}, {0, 2}};
  ASSERT_EQ(strip_crossings(s, 0, 1), 2);
  AnnularDiagram d = annulus_diagram(s);
  EXPECT_TRUE(validate(d));
  EXPECT_EQ(square_count(d), 2);
  EXPECT_FALSE(is_k_system_diagram(d, 1));
  EXPECT_TRUE(is_k_system_diagram(d, 2));
}

TEST(Validate, PentagonRejected) {
  AnnularDiagram d = annulus_diagram({{0, 1}, {0, 1}});
  ASSERT_TRUE(validate(d));
  DiagramFaces f = diagram_faces(d);
  ASSERT_EQ(f.squares.size(), 1u);
  int dart = f.faces[f.squares[0]][0];
  std::string why;
  EXPECT_FALSE(validate(subdivide(d, dart), &why));
  EXPECT_FALSE(why.empty());
}

TEST(Validate, BrokenMapRejected) {
  AnnularDiagram d = make_cycle(3);
  d.map.next[0] = d.map.next[1];
  EXPECT_FALSE(validate(d));
}

TEST(OneSquare, CornersCornsquareAndRemoval) {
  AnnularDiagram d = annulus_diagram({{0, 1}, {0, 1}});
  ASSERT_EQ(square_count(d), 1);
  DiagramFaces f = diagram_faces(d);
  for (int w = 0; w < 2; ++w) {
    auto corners = find_corners(d, w);
    ASSERT_EQ(corners.size(), 1u);
    auto cs = find_cornsquares(d, w);
    ASSERT_FALSE(cs.empty());
    // The path has two darts; both orders reach the square, and exactly one
    // of the two test loops is null-homotopic.
    int st = d.boundary[w], nx = d.map.face_next(st);
    ASSERT_EQ(d.map.face_next(nx), st);
    auto w1 = test_loop_winding(d, f.squares[0], st, nx), w2 = test_loop_winding(d, f.squares[0], nx, st);
    ASSERT_TRUE(w1 && w2);
    EXPECT_EQ(std::abs(*w1 - *w2), 1);
    EXPECT_EQ((*w1 == 0) + (*w2 == 0), 1);
    AnnularDiagram r = remove_corner(d, corners[0]);
    std::string why;
    EXPECT_TRUE(validate(r, &why)) << why;
    EXPECT_TRUE(is_cycle(r));
    EXPECT_EQ(canonical_code(r), canonical_code(make_cycle(2)));
  }
}

TEST(Corners, MatchOracleAndTheorem) {
  for (const auto& t : small_family()) {
    const auto& d = t.diagram;
    for (int w = 0; w < 2; ++w) {
      auto got = find_corners(d, w);
      EXPECT_EQ(std::set<int>(got.begin(), got.end()), corner_oracle(d, w)) << to_string(t.spec);
      if (!is_cycle(d)) EXPECT_FALSE(got.empty()) << to_string(t.spec);
    }
  }
}

TEST(Corners, RemovalDropsOneSquare) {
  for (const auto& t : small_family()) {
    if (is_cycle(t.diagram)) continue;
    int before = square_count(t.diagram);
    int v = find_corners(t.diagram, 0).front();
    AnnularDiagram r = remove_corner(t.diagram, v);
    std::string why;
    EXPECT_TRUE(validate(r, &why)) << to_string(t.spec) << ": " << why;
    EXPECT_EQ(square_count(r), before - 1);
    EXPECT_EQ(upper_sum(trace_dual_curves(r).crossings), before - 1);
  }
  AnnularDiagram c = make_cycle(3);
  EXPECT_THROW(remove_corner(c, 0), std::domain_error);
}

TEST(Cornsquares, NullHomotopicTestLoops) {
  for (const auto& t : small_family())
    for (int w = 0; w < 2; ++w)
      for (const auto& c : find_cornsquares(t.diagram, w)) {
        auto wd = test_loop_winding(t.diagram, c.square, c.first, c.second);
        ASSERT_TRUE(wd.has_value());
        EXPECT_EQ(*wd, 0);
      }
}

TEST(Hexagon, InvariantsAndInvolution) {
  std::mt19937 rng(99);
  int moves = 0;
  for (const auto& t : small_family()) {
    AnnularDiagram d = t.diagram;
    auto keyed = keyed_crossings(d);
    int sq = square_count(d);
    for (int step = 0; step < 8; ++step) {
      auto loci = hexagon_loci(d);
      if (loci.empty()) break;
      int c = loci[rng() % loci.size()];
      AnnularDiagram e = hexagon_move(d, c);
      ++moves;
      std::string why;
      ASSERT_TRUE(validate(e, &why)) << why;
      EXPECT_EQ(square_count(e), sq);
      EXPECT_EQ(keyed_crossings(e), keyed);
      AnnularDiagram back = hexagon_move(e, c);
      // The second move returns the spokes one position further round, so
      // the result agrees with d up to relabeling.
      EXPECT_EQ(canonical_code(back, true), canonical_code(d, true));
      d = e;
    }
  }
  EXPECT_GT(moves, 0);
  EXPECT_THROW(hexagon_move(make_cycle(3), 0), std::domain_error);
}

TEST(Hexagon, ReduceToCornerKeepsInvariants) {
  for (const auto& t : small_family()) {
    if (is_cycle(t.diagram)) continue;
    for (int w = 0; w < 2; ++w) {
      CornerSearch s = reduce_to_corner(t.diagram, w);
      ASSERT_TRUE(s.found) << to_string(t.spec);
      EXPECT_TRUE(s.moves.empty());  // a corner is already present
      auto corners = find_corners(s.result, w);
      EXPECT_NE(std::find(corners.begin(), corners.end(), s.corner), corners.end());
    }
    for (int v : hexagon_loci(t.diagram)) {
      AnnularDiagram moved = hexagon_move(t.diagram, v);
      for (int w = 0; w < 2; ++w) {
        CornerSearch s = reduce_to_corner(moved, w);
        ASSERT_TRUE(s.found);
        AnnularDiagram replay = moved;
        for (int c : s.moves) replay = hexagon_move(replay, c);
        EXPECT_EQ(replay.map.next, s.result.map.next);
        EXPECT_EQ(square_count(s.result), square_count(t.diagram));
        EXPECT_EQ(keyed_crossings(s.result), keyed_crossings(t.diagram));
      }
    }
  }
}

TEST(CanonicalCode, InvariantUnderRelabeling) {
  std::mt19937 rng(4);
  for (const auto& t : small_family()) {
    AnnularDiagram r = relabel(t.diagram, rng);
    EXPECT_TRUE(validate(r));
    EXPECT_EQ(canonical_code(r), canonical_code(t.diagram));
    EXPECT_EQ(canonical_code(r, true), canonical_code(t.diagram, true));
  }
  // Distinct enumerated diagrams are pairwise non-isomorphic.
  std::set<std::vector<int>> codes;
  for (const auto& t : small_family()) codes.insert(canonical_code(t.diagram));
  EXPECT_EQ(codes.size(), small_family().size());
}

TEST(SphereDual, DisjointArcsGiveCycle) {
  for (int n = 3; n <= 6; ++n) {
    ArcSystem z = zero_system(n);
    AnnularDiagram d = dual_diagram(build_arrangement(minimal_position(z.classes)));
    std::string why;
    EXPECT_TRUE(validate(d, &why)) << why;
    EXPECT_TRUE(is_cycle(d));
    EXPECT_EQ(static_cast<int>(trace_dual_curves(d).curves.size()), n - 2);
  }
}

TEST(SphereDual, CrossingLimit) {
  ArcSystem two = max_two_system(5);
  Arrangement arr = build_arrangement(minimal_position(two.classes));
  EXPECT_THROW(dual_diagram(arr, 1), std::domain_error);
  AnnularDiagram d = dual_diagram(arr, 2);
  EXPECT_EQ(square_count(d), upper_sum(two.matrix));
}
