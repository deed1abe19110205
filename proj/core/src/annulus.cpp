#include "arcsys/annulus.hpp"

#include "arcsys/taut.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace arcsys {

namespace {

struct Geometry {
  std::vector<double> bottom, dx;
  double period;
};

Geometry geometry(const AnnulusArcSpec& s) {
  const int m = s.size();
  if (m < 1 || static_cast<int>(s.winding.size()) != m) throw std::invalid_argument("malformed annulus spec");
  std::vector<int> seen(m, 0);
  for (int t : s.top) {
    if (t < 0 || t >= m || seen[t]++) throw std::invalid_argument("top slots must be a permutation");
  }
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> jitter(-1e-3, 1e-3);
  Geometry g;
  g.period = m;
  for (int i = 0; i < m; ++i) {
    double b = i + jitter(rng);
    double t = s.top[i] + static_cast<double>(m) * s.winding[i] + jitter(rng);
    g.bottom.push_back(b);
    g.dx.push_back(t - b);
  }
  return g;
}

struct Event {
  double y;
  int other;
  int crossing;
};

// Crossings of arc i with the lifts of arc j, as heights in (0, 1).
std::vector<double> crossing_heights(const Geometry& g, int i, int j) {
  std::vector<double> out;
  double slope = g.dx[i] - g.dx[j];
  if (slope == 0) return out;
  const int reach = static_cast<int>(std::abs(slope) / g.period) + 2;
  for (int k = -reach; k <= reach; ++k) {
    double y = (g.bottom[j] + k * g.period - g.bottom[i]) / slope;
    if (y > 0 && y < 1) out.push_back(y);
  }
  return out;
}

}  // namespace

std::string to_string(const AnnulusArcSpec& s) {
  std::ostringstream os;
  os << "top=[";
  for (int i = 0; i < s.size(); ++i) os << (i ? "," : "") << s.top[i];
  os << "] winding=[";
  for (int i = 0; i < s.size(); ++i) os << (i ? "," : "") << s.winding[i];
  os << "]";
  return os.str();
}

std::vector<std::vector<int>> annulus_crossings(const AnnulusArcSpec& s) {
  Geometry g = geometry(s);
  const int m = s.size();
  std::vector<std::vector<int>> out(m, std::vector<int>(m, 0));
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) out[i][j] = out[j][i] = static_cast<int>(crossing_heights(g, i, j).size());
  return out;
}

PlaneMap annulus_arc_map(const AnnulusArcSpec& s) {
  Geometry g = geometry(s);
  const int m = s.size();
  std::vector<std::vector<Event>> along(m);
  int crossings = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (double y : crossing_heights(g, i, j)) {
        along[i].push_back({y, j, crossings});
        along[j].push_back({y, i, crossings});
        ++crossings;
      }
  // Segment k of arc i has up dart up[i][k] and down dart up[i][k] + 1.
  PlaneMap map;
  map.vertex_count = 2 + crossings;
  std::vector<std::vector<int>> up(m);
  for (int i = 0; i < m; ++i) {
    std::sort(along[i].begin(), along[i].end(), [](const Event& a, const Event& b) { return a.y < b.y; });
    int from = 0;
    for (std::size_t k = 0; k <= along[i].size(); ++k) {
      int to = k < along[i].size() ? 2 + along[i][k].crossing : 1;
      int d = map.dart_count();
      up[i].push_back(d);
      map.vertex.push_back(from);
      map.vertex.push_back(to);
      map.opposite.push_back(d + 1);
      map.opposite.push_back(d);
      from = to;
    }
  }
  map.next.assign(map.dart_count(), -1);
  auto cycle = [&](const std::vector<int>& darts) {
    for (std::size_t k = 0; k < darts.size(); ++k) map.next[darts[k]] = darts[(k + 1) % darts.size()];
  };
  // Counterclockwise in the strip (x right, y up): the collapsed inner
  // boundary sees the arcs by decreasing slot, the outer one by increasing.
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::vector<int> rot;
  for (auto it = order.rbegin(); it != order.rend(); ++it) rot.push_back(up[*it].front());
  cycle(rot);
  auto top_slot = [&](int a) {
    double t = std::fmod(g.bottom[a] + g.dx[a], g.period);
    return t < -0.5 ? t + g.period : t;
  };
  std::sort(order.begin(), order.end(), [&](int a, int b) { return top_slot(a) < top_slot(b); });
  rot.clear();
  for (int i : order) rot.push_back(up[i].back() + 1);
  cycle(rot);
  std::vector<std::vector<std::pair<int, int>>> at(crossings);  // (arc, index on arc)
  for (int i = 0; i < m; ++i)
    for (std::size_t k = 0; k < along[i].size(); ++k) at[along[i][k].crossing].push_back({i, static_cast<int>(k)});
  for (auto& c : at) {
    auto [i, ki] = c[0];
    auto [j, kj] = c[1];
    if (g.dx[i] < g.dx[j]) {
      std::swap(i, j);
      std::swap(ki, kj);
    }
    cycle({up[i][ki + 1], up[j][kj + 1], up[i][ki] + 1, up[j][kj] + 1});
  }
  return map;
}

AnnularDiagram annulus_diagram(const AnnulusArcSpec& s) { return dual_of_map(annulus_arc_map(s), 0, 1); }

AnnularDiagram dual_diagram(const Arrangement& arr, int max_crossing) {
  for (const auto& a : arr.arcs())
    if (!a.cls.joins_p_q()) throw std::invalid_argument("dual diagrams need arcs from p to q");
  auto cm = arr.crossing_matrix();
  for (std::size_t a = 0; a < cm.size(); ++a)
    for (std::size_t b = 0; b < cm.size(); ++b)
      if (a != b && cm[a][b] > max_crossing)
        throw std::domain_error("arcs " + std::to_string(a) + " and " + std::to_string(b) + " cross " + std::to_string(cm[a][b]) + " times");
  int vp = -1, vq = -1;
  for (int v = 0; v < static_cast<int>(arr.vertices().size()); ++v) {
    const auto& x = arr.vertices()[v];
    if (x.kind != VertexKind::Puncture) continue;
    if (x.puncture.is_p()) vp = v;
    if (x.puncture.is_q()) vq = v;
  }
  return dual_of_map(arr.arc_map(), vp, vq);
}

namespace {

template <class F>
void for_each_spec(int m_max, int w_max, F&& f) {
  for (int m = 1; m <= m_max; ++m) {
    std::vector<int> rest(m - 1);
    std::iota(rest.begin(), rest.end(), 1);
    do {
      AnnulusArcSpec s;
      s.top.push_back(0);
      s.top.insert(s.top.end(), rest.begin(), rest.end());
      s.winding.assign(m, -w_max);
      s.winding[0] = 0;
      for (;;) {
        f(s);
        int k = m - 1;
        while (k >= 1 && s.winding[k] == w_max) s.winding[k--] = -w_max;
        if (k < 1) break;
        ++s.winding[k];
      }
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
}

std::vector<TautEnumerated> enumerate(int m_max, int w_max, int k, int* examined) {
  std::vector<TautEnumerated> out;
  std::set<std::vector<int>> seen;
  for_each_spec(m_max, w_max, [&](const AnnulusArcSpec& s) {
    if (examined) ++*examined;
    auto cm = annulus_crossings(s);
    int mx = 0;
    for (auto& row : cm)
      for (int x : row) mx = std::max(mx, x);
    if (mx > k) return;
    AnnularDiagram d = annulus_diagram(s);
    if (!seen.insert(canonical_code(d)).second) return;
    out.push_back({s, std::move(d), mx});
  });
  return out;
}

}  // namespace

std::vector<TautEnumerated> enumerate_taut_annulus_diagrams(int m_max, int w_max, int k) {
  return enumerate(m_max, w_max, k, nullptr);
}

namespace {

bool two_system_without_corner(const AnnularDiagram& d, int* path) {
  if (square_count(d) == 0 || !is_k_system_diagram(d, 2)) return false;
  for (int which = 0; which < 2; ++which)
    if (!find_corner(d, which)) {
      *path = which;
      return true;
    }
  return false;
}

// Calls f on every subset of 2..max_arcs classes whose pairwise intersection
// numbers are at most k and at least one pair reaches `need`.
template <class F>
void for_each_subsystem(const std::vector<ArcClass>& cl, int max_arcs, int k, int need, F&& f) {
  const int n = static_cast<int>(cl.size());
  std::vector<std::vector<int>> x(n, std::vector<int>(n, 0));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) x[a][b] = x[b][a] = intersection_number(cl[a], cl[b]);
  std::vector<int> cur;
  auto rec = [&](auto&& self, int from) -> bool {
    if (cur.size() >= 2) {
      int mx = 0;
      for (int a : cur)
        for (int b : cur)
          if (a < b) mx = std::max(mx, x[a][b]);
      if (mx >= need) {
        std::vector<ArcClass> sys;
        for (int a : cur) sys.push_back(cl[a]);
        if (f(sys)) return true;
      }
    }
    if (static_cast<int>(cur.size()) == max_arcs) return false;
    for (int c = from; c < n; ++c) {
      bool ok = true;
      for (int a : cur) ok = ok && x[a][c] <= k;
      if (!ok) continue;
      cur.push_back(c);
      if (self(self, c + 1)) return true;
      cur.pop_back();
    }
    return false;
  };
  rec(rec, 0);
}

}  // namespace

std::optional<TwoSystemWitness> sphere_two_system_witness(int n, int max_len, int max_arcs) {
  std::optional<TwoSystemWitness> out;
  for (int size = 2; size <= max_arcs && !out; ++size)
    for_each_subsystem(enumerate_classes(SurfaceSpec(n), max_len), size, 2, 2, [&](const std::vector<ArcClass>& sys) {
      if (static_cast<int>(sys.size()) != size) return false;
      AnnularDiagram d = dual_diagram(build_arrangement(minimal_position(sys)), 2);
      int path = -1;
      if (!two_system_without_corner(d, &path)) return false;
      out = TwoSystemWitness{"punctured sphere, n=" + std::to_string(n), std::nullopt, sys, std::move(d), path};
      return true;
    });
  return out;
}

CornerTheoremReport verify_corner_theorem(int m_max, int w_max, int reduce_cap) {
  CornerTheoremReport rep;
  // Checks one diagram; returns whether it has squares.
  auto check = [&](const AnnularDiagram& d, const std::string& name, bool deep) {
    std::string why;
    if (!validate(d, &why)) {
      ++rep.invalid;
      rep.violations.push_back(name + ": invalid diagram (" + why + ")");
      return false;
    }
    DualCurveReport curves;
    if (!is_k_system_diagram(d, 1, &curves)) {
      rep.violations.push_back(name + ": not a 1-system diagram (" + curves.problem + ")");
      return false;
    }
    if (square_count(d) == 0) {
      if (!is_cycle(d)) rep.violations.push_back(name + ": no squares but not a cycle");
      return false;
    }
    for (int which = 0; which < 2; ++which) {
      const std::string where = name + " path " + std::to_string(which);
      if (!find_corner(d, which)) rep.violations.push_back(where + ": no corner");
      if (!deep) continue;
      ++rep.reductions;
      if (!reduce_to_corner(d, which, std::nullopt, reduce_cap).found) rep.reduction_failures.push_back(where);
      auto cs = find_cornsquares(d, which);
      ++rep.cornsquare_checks;
      if (cs.empty()) {
        rep.violations.push_back(where + ": no cornsquare");
        continue;
      }
      std::set<int> targets;
      for (const auto& c : cs) targets.insert(c.vertex);
      for (int v : targets) {
        ++rep.targeted_attempts;
        auto r = reduce_to_corner(d, which, v, reduce_cap);
        if (!r.found) {
          rep.targeted_unreached.push_back(where + " vertex " + std::to_string(v));
        } else {
          ++rep.targeted_reached;
          if (!r.moves.empty()) ++rep.targeted_with_moves;
        }
      }
    }
    return true;
  };

  for (auto& e : enumerate(m_max, w_max, 1, &rep.specs_examined)) {
    ++rep.diagrams;
    if (check(e.diagram, to_string(e.spec), true)) ++rep.with_squares;
    else if (is_cycle(e.diagram)) ++rep.cycles;
  }
  for (int n = 3; n <= 5; ++n)
    for_each_subsystem(enumerate_classes(SurfaceSpec(n), 4), 3, 1, 0, [&](const std::vector<ArcClass>& sys) {
      ++rep.sphere_diagrams;
      std::string name = "n=" + std::to_string(n);
      for (const auto& c : sys) name += " " + to_string(c);
      if (check(dual_diagram(build_arrangement(minimal_position(sys))), name, false)) ++rep.sphere_with_squares;
      return false;
    });

  for (auto& e : enumerate(m_max, w_max, 2, nullptr)) {
    int path = -1;
    if (e.max_crossing == 2 && two_system_without_corner(e.diagram, &path)) {
      rep.two_system_witness = TwoSystemWitness{"taut annulus", e.spec, {}, e.diagram, path};
      break;
    }
  }
  if (!rep.two_system_witness) rep.two_system_witness = sphere_two_system_witness(5, 4, 3);
  return rep;
}

}  // namespace arcsys
