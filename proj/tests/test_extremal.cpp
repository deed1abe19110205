#include <gtest/gtest.h>

#include <random>

#include "arcsys/constructions.hpp"
#include "arcsys/extremal.hpp"
#include "arcsys/taut.hpp"

using namespace arcsys;

namespace {

int brute_clique(const std::vector<std::vector<char>>& adj) {
  const int v = static_cast<int>(adj.size());
  int best = 0;
  for (unsigned mask = 0; mask < (1u << v); ++mask) {
    bool ok = true;
    for (int a = 0; a < v && ok; ++a)
      for (int b = a + 1; b < v && ok; ++b)
        if ((mask >> a & 1) && (mask >> b & 1) && !adj[a][b]) ok = false;
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

bool chords_meet(std::pair<int, int> x, std::pair<int, int> y, bool shared) {
  auto [a, b] = x;
  auto [c, d] = y;
  if (a == c || a == d || b == c || b == d) return shared;
  bool c_in = a < c && c < b, d_in = a < d && d < b;
  return c_in != d_in;
}

// Plain backtracking over all chords of l points in convex position.
int erdos_oracle(int l, bool shared) {
  std::vector<std::pair<int, int>> ch;
  for (int a = 0; a < l; ++a)
    for (int b = a + 1; b < l; ++b) ch.push_back({a, b});
  int best = 0;
  std::vector<int> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    best = std::max(best, static_cast<int>(cur.size()));
    for (std::size_t i = from; i < ch.size(); ++i) {
      bool ok = true;
      for (int j : cur) ok = ok && chords_meet(ch[j], ch[i], shared);
      if (!ok) continue;
      cur.push_back(static_cast<int>(i));
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return best;
}

RelationInstance four_arcs() {
  RelationInstance r;
  r.n = 5;
  r.arc_count = 4;
  r.order = {0, 1, 2, 3};
  r.to_p = {1, 1, 0, 0};
  r.crossings.assign(4, std::vector<int>(4, 0));
  return r;
}

}  // namespace

TEST(Clique, MatchesBruteForce) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    int v = 1 + static_cast<int>(rng() % 14);
    double density = 0.2 + 0.7 * (rng() % 100) / 100.0;
    std::vector<std::vector<char>> adj(v, std::vector<char>(v, 0));
    for (int a = 0; a < v; ++a)
      for (int b = a + 1; b < v; ++b) adj[a][b] = adj[b][a] = (rng() % 1000) < density * 1000;
    CliqueResult r = maximum_clique(adj);
    EXPECT_EQ(static_cast<int>(r.members.size()), brute_clique(adj));
    EXPECT_TRUE(std::is_sorted(r.members.begin(), r.members.end()));
    for (std::size_t x = 0; x < r.members.size(); ++x)
      for (std::size_t y = x + 1; y < r.members.size(); ++y) EXPECT_TRUE(adj[r.members[x]][r.members[y]]);
  }
}

TEST(Clique, KeepsIncumbentWhenOptimal) {
  std::vector<std::vector<char>> adj(4, std::vector<char>(4, 0));
  adj[0][1] = adj[1][0] = adj[2][3] = adj[3][2] = 1;
  EXPECT_EQ(maximum_clique(adj, {2, 3}).members, (std::vector<int>{2, 3}));
}

TEST(Erdos, MatchesBacktracking) {
  for (int l = 2; l <= 7; ++l)
    for (bool shared : {true, false}) {
      EXPECT_EQ(erdos_max_crossing(l, shared), erdos_oracle(l, shared)) << l << " " << shared;
      auto w = erdos_witness(l, shared);
      EXPECT_EQ(static_cast<int>(w.size()), erdos_max_crossing(l, shared));
      for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j) {
          auto a = std::minmax(w[i].first, w[i].second), b = std::minmax(w[j].first, w[j].second);
          EXPECT_TRUE(chords_meet(a, b, shared));
        }
    }
  EXPECT_THROW(erdos_max_crossing(1), std::invalid_argument);
}

TEST(Verify, TwoSystemAndViolations) {
  ArcSystem sys = max_two_system(5);
  EXPECT_TRUE(verify_k_system(sys, 2).ok);
  KSystemCertificate c1 = verify_k_system(sys, 1);
  EXPECT_FALSE(c1.ok);
  EXPECT_EQ(c1.crossings, 2);
  EXPECT_EQ(intersection_number(sys.classes[c1.a], sys.classes[c1.b]), 2);

  ArcSystem dup = make_system(SurfaceSpec(5), {alpha_below(5), alpha_ij(5, 1, 3), alpha_below(5)});
  EXPECT_FALSE(verify_k_system(dup, 2).ok);

  ArcSystem bad = sys;
  bad.classes[1].seq = {2, 2};
  EXPECT_FALSE(verify_k_system(bad, 2).ok);
}

TEST(SearchMax, AgreesWithSubsetEnumeration) {
  for (int n = 3; n <= 4; ++n)
    for (int k = 0; k <= 2; ++k) {
      const int len = 3;
      auto cl = enumerate_classes(SurfaceSpec(n), len);
      ASSERT_LE(cl.size(), 20u);
      std::vector<std::vector<char>> adj(cl.size(), std::vector<char>(cl.size(), 0));
      for (std::size_t a = 0; a < cl.size(); ++a)
        for (std::size_t b = a + 1; b < cl.size(); ++b) adj[a][b] = adj[b][a] = intersection_number(cl[a], cl[b]) <= k;
      SearchReport rep = search_max(n, k, len);
      EXPECT_EQ(rep.candidates, static_cast<int>(cl.size()));
      EXPECT_EQ(static_cast<int>(rep.witness.size()), brute_clique(adj)) << n << " " << k;
      EXPECT_TRUE(verify_k_system(make_system(SurfaceSpec(n), rep.witness), k).ok);
    }
}

TEST(Relation, InterleavedPairsPass) {
  RelationInstance r = four_arcs();
  r.crossings[0][1] = r.crossings[1][0] = 1;
  r.pairs = {{0, 2}, {1, 3}};
  RelationCertificate c = check_relation_conditions(r);
  EXPECT_TRUE(c.ok()) << c.violation;
  EXPECT_EQ(c.size, 2);
  EXPECT_EQ(c.bound, 6);
}

TEST(Relation, NestedIntersectingPairsFail) {
  RelationInstance r = four_arcs();
  r.crossings[0][1] = r.crossings[1][0] = 1;
  r.pairs = {{0, 3}, {1, 2}};
  RelationCertificate c = check_relation_conditions(r);
  EXPECT_TRUE(c.condition_i);
  EXPECT_FALSE(c.condition_ii);
  EXPECT_FALSE(c.violation.empty());
}

TEST(Relation, DoubleMeetingFails) {
  RelationInstance r = four_arcs();
  r.crossings[0][1] = r.crossings[1][0] = 1;
  r.crossings[2][3] = r.crossings[3][2] = 1;
  r.pairs = {{0, 2}, {1, 3}};
  EXPECT_FALSE(check_relation_conditions(r).condition_i);
}

TEST(Relation, BoundAndMalformed) {
  RelationInstance r = four_arcs();
  r.n = 3;
  r.pairs = {{0, 2}, {1, 3}};
  RelationCertificate c = check_relation_conditions(r);
  EXPECT_EQ(c.bound, 1);
  EXPECT_FALSE(c.within_bound);

  RelationInstance m = four_arcs();
  m.pairs = {{2, 0}};
  EXPECT_THROW(check_relation_conditions(m), std::invalid_argument);
  m = four_arcs();
  m.order = {0, 2, 1, 3};
  EXPECT_THROW(check_relation_conditions(m), std::invalid_argument);
  m = four_arcs();
  m.order = {0, 0, 1, 2};
  EXPECT_THROW(check_relation_conditions(m), std::invalid_argument);
  m = four_arcs();
  m.crossings[0][2] = m.crossings[2][0] = 1;
  EXPECT_THROW(check_relation_conditions(m), std::invalid_argument);
}

TEST(Fibers, SingleClassAndBadPuncture) {
  ArcSystem one = make_system(SurfaceSpec(4), {alpha_below(4)});
  FiberAnalysis fa = fiber_analysis(one, Puncture::r(1));
  ASSERT_EQ(fa.fibers.size(), 1u);
  EXPECT_EQ(fa.fibers[0].members.size(), 1u);
  EXPECT_EQ(fa.fibers[0].disjoint_pairs, 0);
  EXPECT_TRUE(fa.all_identity);
  EXPECT_THROW(fiber_analysis(one, Puncture::p()), std::domain_error);
}

TEST(Fibers, ExtensionOfConstruction) {
  for (int n = 4; n <= 5; ++n) {
    ArcSystem sys = max_two_system(n);
    for (int k = 1; k <= n - 2; ++k) {
      Puncture r = Puncture::r(k);
      FiberAnalysis before = fiber_analysis(sys, r);
      int members = 0;
      for (const auto& f : before.fibers) members += static_cast<int>(f.members.size());
      EXPECT_EQ(members, sys.size());
      ExtensionResult ext = extend_fibers(sys, r);
      ASSERT_TRUE(ext.ok) << ext.failure;
      EXPECT_TRUE(ext.analysis.all_identity);
      EXPECT_TRUE(verify_k_system(ext.system, 2).ok);
      for (int i = 0; i < sys.size(); ++i) EXPECT_EQ(ext.system.classes[i], sys.classes[i]);
      EXPECT_LE(ext.analysis.system_size - ext.analysis.image_size, binomial(n - 1, 2));
      RelationInstance rel = relation_from_fibers(ext.system, r);
      RelationCertificate cert = check_relation_conditions(rel);
      EXPECT_TRUE(cert.ok()) << cert.violation;
    }
  }
}

TEST(Binomial, Pascal) {
  for (int n = 1; n <= 40; ++n)
    for (int k = 1; k < n; ++k) EXPECT_EQ(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
  EXPECT_EQ(binomial(5, 0), 1);
  EXPECT_EQ(binomial(3, 5), 0);
}
