#include "arcsys/extremal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "arcsys/arrangement.hpp"
#include "arcsys/taut.hpp"

namespace arcsys {

std::int64_t binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

KSystemCertificate verify_k_system(const ArcSystem& sys, int k) {
  KSystemCertificate cert;
  const int m = sys.size();
  for (int a = 0; a < m; ++a) {
    const ArcClass& c = sys.classes[a];
    std::string why;
    if (c.n != sys.surface.n()) why = "class lives on a different surface";
    else if (!c.joins_p_q()) why = "class does not join p to q";
    else if (!is_reduced(c)) why = "class is not in normal form";
    else if (!is_realizable(c)) why = "class is not simple";
    if (!why.empty()) {
      cert.ok = false;
      cert.a = a;
      cert.reason = why;
      return cert;
    }
  }
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (sys.classes[a] == sys.classes[b]) {
        cert = {false, a, b, 0, "homotopic"};
        return cert;
      }
      int x = static_cast<int>(sys.matrix.size()) == m ? sys.matrix[a][b] : intersection_number(sys.classes[a], sys.classes[b]);
      if (x > k) {
        cert = {false, a, b, x, "cross " + std::to_string(x) + " times"};
        return cert;
      }
    }
  return cert;
}

namespace {

using Bits = std::vector<std::uint64_t>;

struct CliqueSolver {
  int n;
  std::vector<Bits> nb;
  std::vector<int> best, cur;
  std::int64_t nodes = 0;

  static bool test(const Bits& b, int i) { return (b[i >> 6] >> (i & 63)) & 1U; }
  static void set(Bits& b, int i) { b[i >> 6] |= std::uint64_t{1} << (i & 63); }
  static void clear(Bits& b, int i) { b[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  static bool empty(const Bits& b) {
    return std::all_of(b.begin(), b.end(), [](std::uint64_t w) { return w == 0; });
  }

  // Greedy coloring of the candidate set; vertices come out by increasing color.
  void color(const Bits& p, std::vector<int>& order, std::vector<int>& bound) const {
    order.clear();
    bound.clear();
    Bits left = p;
    int k = 0;
    while (!empty(left)) {
      ++k;
      Bits q = left;
      for (int i = 0; i < n; ++i) {
        if (!test(q, i)) continue;
        clear(left, i);
        clear(q, i);
        for (std::size_t w = 0; w < q.size(); ++w) q[w] &= ~nb[i][w];
        order.push_back(i);
        bound.push_back(k);
      }
    }
  }

  void expand(Bits p) {
    ++nodes;
    std::vector<int> order, bound;
    color(p, order, bound);
    for (int t = static_cast<int>(order.size()) - 1; t >= 0; --t) {
      if (static_cast<int>(cur.size()) + bound[t] <= static_cast<int>(best.size())) return;
      int v = order[t];
      cur.push_back(v);
      Bits np = p;
      for (std::size_t w = 0; w < np.size(); ++w) np[w] &= nb[v][w];
      if (empty(np)) {
        if (cur.size() > best.size()) best = cur;
      } else {
        expand(np);
      }
      cur.pop_back();
      clear(p, v);
    }
  }
};

}  // namespace

CliqueResult maximum_clique(const std::vector<std::vector<char>>& adj, const std::vector<int>& incumbent) {
  const int n = static_cast<int>(adj.size());
  for (int a : incumbent)
    for (int b : incumbent)
      if (a != b && !adj[a][b]) throw std::invalid_argument("incumbent is not a clique");
  // Search in order of decreasing degree; ties keep the input order.
  std::vector<int> perm(n), deg(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) deg[i] += (i != j && adj[i][j]) ? 1 : 0;
  std::iota(perm.begin(), perm.end(), 0);
  std::stable_sort(perm.begin(), perm.end(), [&](int a, int b) { return deg[a] > deg[b]; });
  CliqueSolver s;
  s.n = n;
  const std::size_t words = (n + 63) / 64;
  s.nb.assign(n, Bits(words, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j && adj[perm[i]][perm[j]]) CliqueSolver::set(s.nb[i], j);
  std::vector<int> inv(n);
  for (int i = 0; i < n; ++i) inv[perm[i]] = i;
  for (int a : incumbent) s.best.push_back(inv[a]);
  Bits all(words, 0);
  for (int i = 0; i < n; ++i) CliqueSolver::set(all, i);
  if (n > 0) s.expand(all);
  CliqueResult r;
  for (int i : s.best) r.members.push_back(perm[i]);
  std::sort(r.members.begin(), r.members.end());
  r.nodes = s.nodes;
  return r;
}

SearchReport search_max(int n, int k, int max_len, const std::vector<ArcClass>& seed) {
  if (n < 3) throw std::invalid_argument("search needs n >= 3");
  SearchReport rep;
  rep.n = n;
  rep.k = k;
  rep.max_len = max_len;
  auto cl = enumerate_classes(SurfaceSpec(n), max_len);
  const int m = static_cast<int>(cl.size());
  rep.candidates = m;
  std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) adj[a][b] = adj[b][a] = intersection_number(cl[a], cl[b]) <= k;
  std::vector<int> inc;
  for (const auto& c : seed) {
    auto it = std::find(cl.begin(), cl.end(), c);
    if (it == cl.end()) {
      inc.clear();
      break;
    }
    inc.push_back(static_cast<int>(it - cl.begin()));
  }
  for (int a : inc)
    for (int b : inc)
      if (a != b && !adj[a][b]) inc.clear();
  auto res = maximum_clique(adj, inc);
  rep.nodes = res.nodes;
  for (int i : res.members) rep.witness.push_back(cl[i]);
  return rep;
}

namespace {

std::vector<std::pair<int, int>> chords(int l) {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < l; ++i)
    for (int j = i + 1; j < l; ++j) out.push_back({i, j});
  return out;
}

bool chords_meet(std::pair<int, int> x, std::pair<int, int> y, bool shared) {
  auto [a, b] = x;
  auto [c, d] = y;
  if (a == c || a == d || b == c || b == d) return shared;
  bool c_in = a < c && c < b, d_in = a < d && d < b;
  return c_in != d_in;
}

}  // namespace

std::vector<std::pair<int, int>> erdos_witness(int l, bool shared_endpoints) {
  if (l < 2 || l > 10) throw std::invalid_argument("l must be between 2 and 10");
  auto ch = chords(l);
  const int m = static_cast<int>(ch.size());
  std::vector<std::vector<char>> adj(m, std::vector<char>(m, 0));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) adj[a][b] = a != b && chords_meet(ch[a], ch[b], shared_endpoints);
  std::vector<std::pair<int, int>> out;
  for (int i : maximum_clique(adj).members) out.push_back(ch[i]);
  return out;
}

int erdos_max_crossing(int l, bool shared_endpoints) {
  return static_cast<int>(erdos_witness(l, shared_endpoints).size());
}

RelationCertificate check_relation_conditions(const RelationInstance& inst) {
  const int m = inst.arc_count;
  if (m < 0 || static_cast<int>(inst.order.size()) != m || static_cast<int>(inst.to_p.size()) != m)
    throw std::invalid_argument("order and endpoint lists must cover every arc");
  if (static_cast<int>(inst.crossings.size()) != m) throw std::invalid_argument("crossing matrix has the wrong size");
  for (const auto& row : inst.crossings)
    if (static_cast<int>(row.size()) != m) throw std::invalid_argument("crossing matrix has the wrong size");
  std::vector<int> pos(m, -1);
  for (int i = 0; i < m; ++i) {
    int a = inst.order[i];
    if (a < 0 || a >= m || pos[a] >= 0) throw std::invalid_argument("order is not a permutation");
    pos[a] = i;
  }
  int changes = 0;
  for (int i = 0; i < m; ++i)
    if (inst.to_p[inst.order[i]] != inst.to_p[inst.order[(i + 1) % m]]) ++changes;
  if (changes > 2) throw std::invalid_argument("arcs ending at p are not consecutive around r");
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      if (inst.crossings[a][b] != inst.crossings[b][a] || inst.crossings[a][b] < 0)
        throw std::invalid_argument("crossing matrix is not symmetric");
      if (inst.to_p[a] && !inst.to_p[b] && inst.crossings[a][b] > 0)
        throw std::invalid_argument("an arc to p crosses an arc to q");
    }
  for (auto [a, b] : inst.pairs)
    if (a < 0 || a >= m || b < 0 || b >= m || !inst.to_p[a] || inst.to_p[b])
      throw std::invalid_argument("pairs must take an arc to p and an arc to q");

  RelationCertificate cert;
  std::set<std::pair<int, int>> distinct(inst.pairs.begin(), inst.pairs.end());
  std::vector<std::pair<int, int>> rel(distinct.begin(), distinct.end());
  cert.size = static_cast<int>(rel.size());
  cert.bound = binomial(inst.n - 1, 2);
  cert.within_bound = cert.size <= cert.bound;
  auto between = [&](std::pair<int, int> x, std::pair<int, int> y) {
    int t = 0;
    for (int u : {x.first, x.second})
      for (int v : {y.first, y.second})
        if (u != v) t += inst.crossings[u][v];
    return t;
  };
  auto interleave = [&](std::pair<int, int> x, std::pair<int, int> y) {
    int a = pos[x.first], b = pos[x.second];
    if (a > b) std::swap(a, b);
    bool c_in = a < pos[y.first] && pos[y.first] < b, d_in = a < pos[y.second] && pos[y.second] < b;
    return c_in != d_in;
  };
  auto name = [](std::pair<int, int> x) { return "(" + std::to_string(x.first) + "," + std::to_string(x.second) + ")"; };
  for (std::size_t i = 0; i < rel.size(); ++i)
    for (std::size_t j = i + 1; j < rel.size(); ++j) {
      int t = between(rel[i], rel[j]);
      if (t > 1 && cert.condition_i) {
        cert.condition_i = false;
        cert.violation = "pairs " + name(rel[i]) + " and " + name(rel[j]) + " meet " + std::to_string(t) + " times";
      }
      if (t >= 1 && rel[i].first != rel[j].first && rel[i].second != rel[j].second && !interleave(rel[i], rel[j]) &&
          cert.condition_ii) {
        cert.condition_ii = false;
        if (cert.violation.empty())
          cert.violation = "intersecting pairs " + name(rel[i]) + " and " + name(rel[j]) + " are nested around r";
      }
    }
  if (!cert.within_bound && cert.violation.empty())
    cert.violation = std::to_string(cert.size) + " pairs exceed " + std::to_string(cert.bound);
  return cert;
}

FiberAnalysis fiber_analysis(const ArcSystem& sys, Puncture r) {
  if (r.is_p() || r.is_q() || !sys.surface.valid_puncture(r)) throw std::domain_error("r must be a puncture other than p and q");
  FiberAnalysis fa;
  fa.r = r;
  fa.system_size = sys.size();
  std::map<ArcClass, std::vector<int>> by_image;
  std::vector<ArcClass> order;
  for (int i = 0; i < sys.size(); ++i) {
    ArcClass img = forget_puncture(sys.classes[i], r);
    if (!by_image.count(img)) order.push_back(img);
    by_image[img].push_back(i);
  }
  fa.image_size = static_cast<int>(order.size());
  for (const auto& img : order) {
    FiberReport f;
    f.image = img;
    f.members = by_image[img];
    for (std::size_t a = 0; a < f.members.size(); ++a)
      for (std::size_t b = a + 1; b < f.members.size(); ++b) {
        int i = f.members[a], j = f.members[b];
        int x = static_cast<int>(sys.matrix.size()) == sys.size() ? sys.matrix[i][j] : intersection_number(sys.classes[i], sys.classes[j]);
        if (x == 0) ++f.disjoint_pairs;
      }
    f.identity = static_cast<int>(f.members.size()) - 1 == f.disjoint_pairs;
    fa.all_identity = fa.all_identity && f.identity;
    fa.fibers.push_back(std::move(f));
  }
  return fa;
}

namespace {

int default_len(const ArcSystem& sys, int max_len) {
  if (max_len >= 0) return max_len;
  std::size_t longest = 0;
  for (const auto& c : sys.classes) longest = std::max(longest, c.seq.size());
  return static_cast<int>(longest) + 2;
}

}  // namespace

ExtensionResult extend_fibers(const ArcSystem& sys, Puncture r, int max_len) {
  ExtensionResult res;
  res.max_len = default_len(sys, max_len);
  res.system = sys;
  if (static_cast<int>(res.system.matrix.size()) != res.system.size())
    res.system = make_system(sys.surface, sys.classes, sys.labels);
  const auto candidates = enumerate_classes(sys.surface, res.max_len);
  for (;;) {
    res.analysis = fiber_analysis(res.system, r);
    if (res.analysis.all_identity) {
      res.ok = true;
      return res;
    }
    const ArcSystem& cur = res.system;
    // First failing fiber; its first intersecting pair without a common
    // disjoint partner gets a new member.
    const FiberReport* bad = nullptr;
    for (const auto& f : res.analysis.fibers)
      if (!f.identity) {
        bad = &f;
        break;
      }
    int pa = -1, pb = -1;
    for (std::size_t x = 0; x < bad->members.size() && pa < 0; ++x)
      for (std::size_t y = x + 1; y < bad->members.size() && pa < 0; ++y) {
        int i = bad->members[x], j = bad->members[y];
        if (cur.matrix[i][j] == 0) continue;
        bool shared = false;
        for (int z : bad->members) shared = shared || (z != i && z != j && cur.matrix[i][z] == 0 && cur.matrix[j][z] == 0);
        if (!shared) {
          pa = i;
          pb = j;
        }
      }
    if (pa < 0) {
      res.failure = "fiber of " + to_string(bad->image) + " violates the identity but has no intersecting pair to extend";
      return res;
    }
    std::optional<ArcClass> found;
    for (const auto& c : candidates) {
      if (std::find(cur.classes.begin(), cur.classes.end(), c) != cur.classes.end()) continue;
      if (!(forget_puncture(c, r) == bad->image)) continue;
      if (intersection_number(c, cur.classes[pa]) != 0 || intersection_number(c, cur.classes[pb]) != 0) continue;
      bool fits = true;
      for (int z = 0; z < cur.size() && fits; ++z) fits = intersection_number(c, cur.classes[z]) <= 2;
      if (fits) {
        found = c;
        break;
      }
    }
    if (!found) {
      res.failure = "no class of length <= " + std::to_string(res.max_len) + " extends the pair " + to_string(cur.classes[pa]) +
                    ", " + to_string(cur.classes[pb]);
      return res;
    }
    auto classes = cur.classes;
    auto labels = cur.labels;
    classes.push_back(*found);
    if (!labels.empty()) labels.push_back("extension");
    res.added.push_back(static_cast<int>(classes.size()) - 1);
    res.system = make_system(sys.surface, std::move(classes), std::move(labels));
  }
}

RelationInstance relation_from_fibers(const ArcSystem& sys, Puncture r, int max_len) {
  const int len = default_len(sys, max_len);
  const SurfaceSpec& s = sys.surface;
  ArcSystem full = static_cast<int>(sys.matrix.size()) == sys.size() ? sys : make_system(s, sys.classes, sys.labels);
  FiberAnalysis fa = fiber_analysis(full, r);
  const auto to_p = enumerate_arcs_between(s, r, Puncture::p(), len);
  const auto to_q = enumerate_arcs_between(s, r, Puncture::q(), len);
  std::vector<ArcClass> arcs;
  std::vector<char> ends_p;
  std::vector<std::pair<int, int>> pairs;
  auto index_of = [&](const ArcClass& c, bool p_end) {
    auto it = std::find(arcs.begin(), arcs.end(), c);
    if (it != arcs.end()) return static_cast<int>(it - arcs.begin());
    arcs.push_back(c);
    ends_p.push_back(p_end ? 1 : 0);
    return static_cast<int>(arcs.size()) - 1;
  };
  auto inside = [&](const std::vector<ArcClass>& pool, const ArcClass& g1, const ArcClass& g2) -> std::optional<ArcClass> {
    for (const auto& c : pool)
      if (intersection_number(c, g1) == 0 && intersection_number(c, g2) == 0) return c;
    return std::nullopt;
  };
  for (const auto& f : fa.fibers)
    for (std::size_t x = 0; x < f.members.size(); ++x)
      for (std::size_t y = x + 1; y < f.members.size(); ++y) {
        int i = f.members[x], j = f.members[y];
        if (full.matrix[i][j] != 0) continue;
        auto a = inside(to_p, full.classes[i], full.classes[j]);
        auto b = inside(to_q, full.classes[i], full.classes[j]);
        if (!a || !b) throw std::runtime_error("no arc from r inside the strip of " + to_string(full.classes[i]) + ", " + to_string(full.classes[j]));
        int ia = index_of(*a, true), ib = index_of(*b, false);
        pairs.push_back({ia, ib});
      }
  RelationInstance inst;
  inst.n = s.n();
  inst.arc_count = static_cast<int>(arcs.size());
  inst.to_p = ends_p;
  inst.pairs = pairs;
  inst.crossings.assign(arcs.size(), std::vector<int>(arcs.size(), 0));
  for (std::size_t a = 0; a < arcs.size(); ++a)
    for (std::size_t b = a + 1; b < arcs.size(); ++b)
      inst.crossings[a][b] = inst.crossings[b][a] = intersection_number(arcs[a], arcs[b]);
  if (arcs.empty()) return inst;
  // Cyclic order of the ends at r, read from a common minimal position.
  Arrangement arr = build_arrangement(minimal_position(arcs));
  int vr = -1;
  for (int v = 0; v < static_cast<int>(arr.vertices().size()); ++v)
    if (arr.vertices()[v].kind == VertexKind::Puncture && arr.vertices()[v].puncture == r) vr = v;
  const PlaneMap& am = arr.arc_map();
  int start = -1;
  for (int d = 0; d < am.dart_count(); ++d)
    if (am.vertex[d] == vr) start = d;
  int d = start;
  do {
    inst.order.push_back(arr.dart_arc(arr.arc_dart_origin(d)));
    d = am.next[d];
  } while (d != start);
  // Rotate so the order starts at the smallest arc index.
  std::rotate(inst.order.begin(), std::min_element(inst.order.begin(), inst.order.end()), inst.order.end());
  return inst;
}

}  // namespace arcsys
