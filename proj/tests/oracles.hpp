#pragma once
// Brute-force reference computations used only by the tests.

#include <algorithm>
#include <climits>
#include <functional>
#include <vector>

#include "arcsys/arc_class.hpp"

namespace oracle {

using arcsys::ArcClass;
using arcsys::Side;

struct Chord {
  long a, b;
  Side side;
  int arc;
};

inline bool cross(const Chord& x, const Chord& y) {
  if (x.side != y.side) return false;
  if (x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b) return false;
  long lo = std::min(x.a, x.b), hi = std::max(x.a, x.b);
  bool i1 = lo < y.a && y.a < hi, i2 = lo < y.b && y.b < hi;
  return i1 != i2;
}

// Minimum number of crossings between two arcs over every choice of point
// order in every gap, among choices where each arc alone is embedded.
// Returns -1 if no such choice exists.
inline int min_interleaving_crossings(const ArcClass& A, const ArcClass& B) {
  const int n = A.n;
  const ArcClass* arcs[2] = {&A, &B};
  struct Pt { int arc, idx; };
  std::vector<std::vector<Pt>> gap_pts(n);
  for (int k = 0; k < 2; ++k)
    for (int i = 0; i < static_cast<int>(arcs[k]->seq.size()); ++i) gap_pts[arcs[k]->seq[i]].push_back({k, i});
  long stride = 2;
  for (auto& v : gap_pts) stride = std::max<long>(stride, static_cast<long>(v.size()) + 2);
  std::vector<std::vector<long>> key(2);
  for (int k = 0; k < 2; ++k) key[k].assign(arcs[k]->seq.size(), -1);

  auto chords = [&](int k) {
    std::vector<Chord> out;
    const ArcClass& c = *arcs[k];
    int m = static_cast<int>(c.seq.size());
    for (int j = 0; j <= m; ++j) {
      long a = j == 0 ? c.from.pos * stride : key[k][j - 1];
      long b = j == m ? c.to.pos * stride : key[k][j];
      if (a < 0 || b < 0) continue;
      out.push_back({a, b, (j % 2 == 0) ? c.side : arcsys::flip(c.side), k});
    }
    return out;
  };
  auto self_ok = [&]() {
    for (int k = 0; k < 2; ++k) {
      auto ch = chords(k);
      for (std::size_t x = 0; x < ch.size(); ++x)
        for (std::size_t y = x + 1; y < ch.size(); ++y)
          if (cross(ch[x], ch[y])) return false;
    }
    return true;
  };
  int best = INT_MAX;
  std::function<void(int)> rec = [&](int g) {
    if (g == n) {
      auto ca = chords(0), cb = chords(1);
      int cnt = 0;
      for (auto& x : ca)
        for (auto& y : cb) cnt += cross(x, y);
      best = std::min(best, cnt);
      return;
    }
    std::vector<int> perm(gap_pts[g].size());
    for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
    do {
      for (std::size_t r = 0; r < perm.size(); ++r) {
        Pt pt = gap_pts[g][perm[r]];
        key[pt.arc][pt.idx] = g * stride + static_cast<long>(r) + 1;
      }
      if (self_ok()) rec(g + 1);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (auto pt : gap_pts[g]) key[pt.arc][pt.idx] = -1;
  };
  rec(0);
  return best == INT_MAX ? -1 : best;
}

}  // namespace oracle

namespace oracle {

// Whether some order of the arc's own points in every gap leaves its chords
// pairwise non-crossing; plain enumeration of all permutations.
inline bool single_arc_embeddable(const ArcClass& c) {
  const int n = c.n;
  const int m = static_cast<int>(c.seq.size());
  std::vector<std::vector<int>> pts(n);
  for (int i = 0; i < m; ++i) pts[c.seq[i]].push_back(i);
  const long stride = m + 2;
  std::vector<long> key(m, -1);
  bool found = false;
  std::function<void(int)> rec = [&](int g) {
    if (found) return;
    if (g == n) {
      std::vector<Chord> ch;
      for (int j = 0; j <= m; ++j) {
        long a = j == 0 ? c.from.pos * stride : key[j - 1];
        long b = j == m ? c.to.pos * stride : key[j];
        ch.push_back({a, b, (j % 2 == 0) ? c.side : arcsys::flip(c.side), 0});
      }
      for (std::size_t x = 0; x < ch.size(); ++x)
        for (std::size_t y = x + 1; y < ch.size(); ++y)
          if (cross(ch[x], ch[y])) return;
      found = true;
      return;
    }
    std::vector<int> perm = pts[g];
    std::sort(perm.begin(), perm.end());
    do {
      for (std::size_t r = 0; r < perm.size(); ++r) key[perm[r]] = g * stride + static_cast<long>(r) + 1;
      rec(g + 1);
    } while (!found && std::next_permutation(perm.begin(), perm.end()));
  };
  rec(0);
  return found;
}

}  // namespace oracle
