#include "arcsys/taut.hpp"

#include <algorithm>
#include <stdexcept>

namespace arcsys {

Rational EmbeddedArc::node_param(int node) const {
  const int m = static_cast<int>(cls.seq.size());
  if (node == 0) return Rational(cls.from.pos);
  if (node == m + 1) return Rational(cls.to.pos);
  return params[node - 1];
}

std::vector<EmbeddedArc> embed_configuration(const Configuration& cfg) {
  std::vector<EmbeddedArc> out(cfg.arcs().size());
  for (int a = 0; a < cfg.arc_count(); ++a) {
    out[a].cls = cfg.arcs()[a];
    out[a].params.resize(cfg.point_count(a));
  }
  for (int g = 0; g < cfg.surface().n(); ++g) {
    const auto& v = cfg.gaps()[g];
    const long count = static_cast<long>(v.size());
    for (long r = 0; r < count; ++r) out[v[r].arc].params[v[r].point] = Rational(g) + Rational(r + 1, count + 1);
  }
  return out;
}

EmbeddedArc embed(const ArcClass& c) {
  if (!is_reduced(c)) throw std::domain_error("class " + to_string(c) + " is not reduced");
  return embed_configuration(stacked_configuration(c.surface(), {c})).front();
}

Configuration configuration_of(const std::vector<EmbeddedArc>& arcs) {
  if (arcs.empty()) throw std::invalid_argument("no arcs");
  SurfaceSpec s = arcs.front().cls.surface();
  std::vector<ArcClass> classes;
  struct Item {
    Rational t;
    StrandRef ref;
  };
  std::vector<std::vector<Item>> items(s.n());
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const EmbeddedArc& e = arcs[a];
    if (e.cls.n != s.n()) throw std::invalid_argument("arcs live on different surfaces");
    if (e.params.size() != e.cls.seq.size()) throw std::invalid_argument("parameter count does not match sequence");
    classes.push_back(e.cls);
    for (std::size_t i = 0; i < e.params.size(); ++i) {
      int g = e.cls.seq[i];
      if (!(e.params[i] > g && e.params[i] < g + 1)) throw std::invalid_argument("crossing parameter outside its gap");
      items[g].push_back({e.params[i], {static_cast<int>(a), static_cast<int>(i)}});
    }
  }
  std::vector<std::vector<StrandRef>> gaps(s.n());
  for (int g = 0; g < s.n(); ++g) {
    std::stable_sort(items[g].begin(), items[g].end(), [](const Item& x, const Item& y) {
      if (x.t != y.t) return x.t < y.t;
      return x.ref.arc < y.ref.arc;
    });
    for (const auto& it : items[g]) gaps[g].push_back(it.ref);
  }
  return Configuration(s, std::move(classes), std::move(gaps));
}

namespace {

enum class End { Fail, Cross, Puncture };

struct Ladder {
  int a = 0, b = 0;
  std::vector<std::pair<int, int>> rungs;  // matched nodes (node of a, node of b)
  int cross_corners = 0;
};

struct Walk {
  End end = End::Fail;
  std::vector<std::pair<int, int>> rungs;
};

class LadderFinder {
 public:
  explicit LadderFinder(const Configuration& cfg) : cfg_(cfg) {}

  std::vector<Ladder> find(int a, int b) const {
    std::vector<Ladder> out;
    const int n = cfg_.surface().n();
    for (int g = 0; g < n; ++g) {
      const auto& v = cfg_.gaps()[g];
      // Strands of other arcs may pass between the two sides of the bigon.
      for (std::size_t r = 0; r < v.size(); ++r)
        for (std::size_t t = r + 1; t < v.size(); ++t) {
          StrandRef x = v[r], y = v[t];
          if (x.arc == b && y.arc == a) std::swap(x, y);
          if (x.arc != a || y.arc != b) continue;
          for (int o : {1, -1}) {
            Walk w1 = walk(a, b, x.point + 1, y.point + 1, 1, o);
            if (w1.end == End::Fail) continue;
            Walk w2 = walk(a, b, x.point + 1, y.point + 1, -1, -o);
            if (w2.end == End::Fail) continue;
            int crosses = (w1.end == End::Cross) + (w2.end == End::Cross);
            if (crosses == 0) continue;
            Ladder l;
            l.a = a;
            l.b = b;
            l.cross_corners = crosses;
            l.rungs.assign(w2.rungs.rbegin(), w2.rungs.rend());
            l.rungs.push_back({x.point + 1, y.point + 1});
            l.rungs.insert(l.rungs.end(), w1.rungs.begin(), w1.rungs.end());
            out.push_back(std::move(l));
          }
        }
    }
    return out;
  }

 private:
  bool is_point(int arc, int node) const { return node >= 1 && node <= cfg_.point_count(arc); }
  Puncture puncture_at(int arc, int node) const {
    return node == 0 ? cfg_.arcs()[arc].from : cfg_.arcs()[arc].to;
  }

  Walk walk(int a, int b, int u, int v, int da, int db) const {
    Walk w;
    for (;;) {
      int ja = da > 0 ? u : u - 1;
      int jb = db > 0 ? v : v - 1;
      if (cfg_.arcs()[a].chord_side(ja) != cfg_.arcs()[b].chord_side(jb)) return w;
      if (cfg_.chords_cross(a, ja, b, jb)) {
        w.end = End::Cross;
        return w;
      }
      int u2 = u + da, v2 = v + db;
      bool pa = !is_point(a, u2), pb = !is_point(b, v2);
      if (pa || pb) {
        if (pa && pb && puncture_at(a, u2) == puncture_at(b, v2)) w.end = End::Puncture;
        return w;
      }
      if (cfg_.arcs()[a].seq[u2 - 1] != cfg_.arcs()[b].seq[v2 - 1]) return w;
      w.rungs.push_back({u2, v2});
      u = u2;
      v = v2;
    }
  }

  const Configuration& cfg_;
};

void apply_ladder(Configuration& cfg, const Ladder& l) {
  for (auto [u, v] : l.rungs) cfg.swap_points({l.a, u - 1}, {l.b, v - 1});
}

}  // namespace

int tighten_pairs(Configuration& cfg, std::vector<int>* trace) {
  int steps = 0;
  auto matrix = cfg.crossing_matrix();
  if (trace) trace->push_back(cfg.total_crossings());
  for (;;) {
    std::vector<Ladder> all;
    LadderFinder finder(cfg);
    for (int a = 0; a < cfg.arc_count(); ++a)
      for (int b = a + 1; b < cfg.arc_count(); ++b) {
        if (matrix[a][b] == 0) continue;
        auto ls = finder.find(a, b);
        all.insert(all.end(), ls.begin(), ls.end());
      }
    if (all.empty()) return steps;
    std::stable_sort(all.begin(), all.end(), [](const Ladder& x, const Ladder& y) {
      if (x.cross_corners != y.cross_corners) return x.cross_corners > y.cross_corners;
      return x.rungs.size() < y.rungs.size();
    });
    bool progressed = false;
    for (const Ladder& l : all) {
      Configuration next = cfg;
      apply_ladder(next, l);
      auto m2 = next.crossing_matrix();
      bool ok = m2[l.a][l.b] == matrix[l.a][l.b] - l.cross_corners;
      for (int x = 0; ok && x < cfg.arc_count(); ++x) {
        if (next.crossings(x, x) != 0) ok = false;
        for (int y = x + 1; ok && y < cfg.arc_count(); ++y)
          if (m2[x][y] > matrix[x][y]) ok = false;
      }
      if (!ok) continue;
      cfg = std::move(next);
      matrix = std::move(m2);
      ++steps;
      if (trace) trace->push_back(cfg.total_crossings());
      progressed = true;
      break;
    }
    if (!progressed) return steps;
  }
}

TightenResult tighten(const EmbeddedArc& a, const EmbeddedArc& b) {
  if (a.cls.n != b.cls.n) throw std::invalid_argument("arcs live on different surfaces");
  Configuration cfg = configuration_of({a, b});
  if (cfg.crossings(0, 0) || cfg.crossings(1, 1)) throw std::invalid_argument("representatives are not embedded");
  TightenResult res;
  tighten_pairs(cfg, &res.trace);
  auto arcs = embed_configuration(cfg);
  res.a = arcs[0];
  res.b = arcs[1];
  res.crossings = cfg.crossings(0, 1);
  return res;
}

int intersection_number(const ArcClass& c1, const ArcClass& c2) {
  if (c1.n != c2.n) throw std::invalid_argument("classes live on different surfaces");
  for (const ArcClass* c : {&c1, &c2})
    if (!is_reduced(*c) || !is_realizable(*c)) throw std::domain_error("class " + to_string(*c) + " is not a reduced simple arc");
  return tighten(embed(c1), embed(c2)).crossings;
}

bool is_homotopic(const ArcClass& c1, const ArcClass& c2) {
  if (c1.n != c2.n) throw std::invalid_argument("classes live on different surfaces");
  return reduce(c1) == reduce(c2);
}

Configuration minimal_position(const std::vector<ArcClass>& arcs) {
  if (arcs.empty()) throw std::invalid_argument("no arcs");
  for (const auto& c : arcs)
    if (!is_realizable(c)) throw std::domain_error("class " + to_string(c) + " is not a simple arc");
  Configuration cfg = canonical_configuration(arcs.front().surface(), arcs);
  tighten_pairs(cfg);
  return cfg;
}

}  // namespace arcsys
