#include "arcsys/arrangement.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <stdexcept>

namespace arcsys {

std::string to_string(RegionKind k) {
  switch (k) {
    case RegionKind::Bigon: return "bigon";
    case RegionKind::HalfBigon: return "half-bigon";
    case RegionKind::Strip: return "strip";
    case RegionKind::Other: return "other";
  }
  return "other";
}

namespace {

Point2 circle_point(const Rational& t, int n) {
  if (t == 0) return {Rational(-1), Rational(0)};
  Rational s = t - Rational(n, 2);
  Rational den = 1 + s * s;
  return {(1 - s * s) / den, 2 * s / den};
}

Rational cross2(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }

int half_plane(const Point2& v) { return (v.y > 0 || (v.y == 0 && v.x > 0)) ? 0 : 1; }

bool angle_less(const Point2& a, const Point2& b) {
  int ha = half_plane(a), hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return cross2(a, b) > 0;
}

Rational cyclic_distance(const Rational& from, const Rational& to, int n) {
  Rational d = to - from;
  while (d <= 0) d += n;
  while (d > n) d -= n;
  return d;
}

struct ChordRec {
  int arc, j;
  Side side;
  int v0, v1;
  Rational t0, t1;
  Point2 p0, p1;
  std::vector<std::pair<Rational, int>> hits;  // (position along chord, crossing vertex)
};

struct DartMeta {
  int arc = -1;
  int chord = -1;
  Side side = Side::Upper;
  int kind = 0;          // 0 circle+, 1 upper piece, 2 circle-, 3 lower piece, 4 interior
  Rational key;          // sort key for circle vertices
  Point2 dir;            // direction at interior crossings
};

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

bool Arrangement::build_once(const std::vector<EmbeddedArc>& arcs) {
  const int n = surface_.n();
  arcs_ = arcs;
  crossings_.clear();
  vertices_.clear();

  std::vector<Rational> param;
  for (int u = 0; u < n; ++u) {
    ArrangementVertex v;
    v.kind = VertexKind::Puncture;
    v.puncture = Puncture{u};
    v.at = circle_point(Rational(u), n);
    vertices_.push_back(v);
    param.push_back(Rational(u));
  }
  std::vector<std::vector<int>> point_vertex(arcs.size());
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    for (std::size_t i = 0; i < arcs[a].params.size(); ++i) {
      ArrangementVertex v;
      v.kind = VertexKind::CirclePoint;
      v.strand = {static_cast<int>(a), static_cast<int>(i)};
      v.at = circle_point(arcs[a].params[i], n);
      point_vertex[a].push_back(static_cast<int>(vertices_.size()));
      vertices_.push_back(v);
      param.push_back(arcs[a].params[i]);
    }
  }
  const int circle_count = static_cast<int>(vertices_.size());
  std::vector<int> order(circle_count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int x, int y) { return param[x] < param[y]; });
  for (int k = 0; k + 1 < circle_count; ++k)
    if (param[order[k]] == param[order[k + 1]]) throw std::invalid_argument("two crossing points share a parameter");

  std::vector<ChordRec> chords;
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const EmbeddedArc& e = arcs[a];
    const int m = static_cast<int>(e.params.size());
    for (int j = 0; j <= m; ++j) {
      ChordRec c;
      c.arc = static_cast<int>(a);
      c.j = j;
      c.side = e.chord_side(j);
      c.v0 = j == 0 ? e.cls.from.pos : point_vertex[a][j - 1];
      c.v1 = j == m ? e.cls.to.pos : point_vertex[a][j];
      c.t0 = param[c.v0];
      c.t1 = param[c.v1];
      c.p0 = vertices_[c.v0].at;
      c.p1 = vertices_[c.v1].at;
      chords.push_back(std::move(c));
    }
  }

  for (std::size_t x = 0; x < chords.size(); ++x) {
    for (std::size_t y = x + 1; y < chords.size(); ++y) {
      ChordRec& c1 = chords[x];
      ChordRec& c2 = chords[y];
      if (c1.side != c2.side) continue;
      if (c1.v0 == c2.v0 || c1.v0 == c2.v1 || c1.v1 == c2.v0 || c1.v1 == c2.v1) continue;
      Rational lo = std::min(c1.t0, c1.t1), hi = std::max(c1.t0, c1.t1);
      bool i1 = lo < c2.t0 && c2.t0 < hi, i2 = lo < c2.t1 && c2.t1 < hi;
      if (i1 == i2) continue;
      Point2 d1{c1.p1.x - c1.p0.x, c1.p1.y - c1.p0.y};
      Point2 d2{c2.p1.x - c2.p0.x, c2.p1.y - c2.p0.y};
      Point2 w{c2.p0.x - c1.p0.x, c2.p0.y - c1.p0.y};
      Rational den = cross2(d1, d2);
      Rational lam = cross2(w, d2) / den;
      Rational mu = cross2(w, d1) / den;
      ArcCrossing ac;
      ac.arc_a = c1.arc;
      ac.chord_a = c1.j;
      ac.arc_b = c2.arc;
      ac.chord_b = c2.j;
      ac.side = c1.side;
      ac.at = {c1.p0.x + lam * d1.x, c1.p0.y + lam * d1.y};
      ArrangementVertex v;
      v.kind = VertexKind::Crossing;
      v.crossing = static_cast<int>(crossings_.size());
      v.at = ac.at;
      int vid = static_cast<int>(vertices_.size());
      vertices_.push_back(v);
      crossings_.push_back(ac);
      c1.hits.push_back({lam, vid});
      c2.hits.push_back({mu, vid});
    }
  }
  for (auto& c : chords) {
    std::sort(c.hits.begin(), c.hits.end());
    for (std::size_t k = 0; k + 1 < c.hits.size(); ++k)
      if (c.hits[k].first == c.hits[k + 1].first) return false;  // three chords through one point
  }

  // Edges as dart pairs.
  std::vector<int> dv;
  std::vector<DartMeta> meta;
  auto add_edge = [&](int u, int v, DartMeta mu, DartMeta mv) {
    dv.push_back(u);
    meta.push_back(std::move(mu));
    dv.push_back(v);
    meta.push_back(std::move(mv));
  };
  for (int k = 0; k < circle_count; ++k) {
    int u = order[k], v = order[(k + 1) % circle_count];
    DartMeta mu, mv;
    mu.kind = 0;
    mv.kind = 2;
    add_edge(u, v, mu, mv);
  }
  for (const auto& c : chords) {
    std::vector<int> path{c.v0};
    for (const auto& h : c.hits) path.push_back(h.second);
    path.push_back(c.v1);
    Point2 fwd{c.p1.x - c.p0.x, c.p1.y - c.p0.y};
    Point2 bwd{-fwd.x, -fwd.y};
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      DartMeta mu, mv;
      mu.arc = mv.arc = c.arc;
      mu.chord = mv.chord = c.j;
      mu.side = mv.side = c.side;
      mu.dir = fwd;
      mv.dir = bwd;
      const bool upper = c.side == Side::Upper;
      if (k == 0) {
        mu.kind = upper ? 1 : 3;
        Rational d = cyclic_distance(c.t0, c.t1, n);
        mu.key = upper ? d : Rational(-d);
      } else {
        mu.kind = 4;
      }
      if (k + 2 == path.size()) {
        mv.kind = upper ? 1 : 3;
        Rational d = cyclic_distance(c.t1, c.t0, n);
        mv.key = upper ? d : Rational(-d);
      } else {
        mv.kind = 4;
      }
      add_edge(path[k], path[k + 1], mu, mv);
    }
  }

  const int darts = static_cast<int>(dv.size());
  full_ = PlaneMap{};
  full_.vertex = dv;
  full_.vertex_count = static_cast<int>(vertices_.size());
  full_.opposite.resize(darts);
  full_.next.resize(darts);
  for (int d = 0; d < darts; d += 2) {
    full_.opposite[d] = d + 1;
    full_.opposite[d + 1] = d;
  }
  std::vector<std::vector<int>> out(vertices_.size());
  for (int d = 0; d < darts; ++d) out[dv[d]].push_back(d);
  for (std::size_t v = 0; v < out.size(); ++v) {
    auto& list = out[v];
    if (vertices_[v].kind == VertexKind::Crossing) {
      std::sort(list.begin(), list.end(), [&](int x, int y) { return angle_less(meta[x].dir, meta[y].dir); });
      if (meta[list.front()].side == Side::Lower) std::reverse(list.begin(), list.end());
    } else {
      std::sort(list.begin(), list.end(), [&](int x, int y) {
        if (meta[x].kind != meta[y].kind) return meta[x].kind < meta[y].kind;
        return meta[x].key < meta[y].key;
      });
    }
    for (std::size_t k = 0; k < list.size(); ++k) full_.next[list[k]] = list[(k + 1) % list.size()];
  }
  dart_arc_.assign(darts, -1);
  for (int d = 0; d < darts; ++d) dart_arc_[d] = meta[d].arc;

  // Arc map: the same rotations with the circle darts skipped.
  std::vector<int> to_arc(darts, -1);
  arc_origin_.clear();
  for (int d = 0; d < darts; ++d)
    if (meta[d].arc >= 0) {
      to_arc[d] = static_cast<int>(arc_origin_.size());
      arc_origin_.push_back(d);
    }
  arc_map_ = PlaneMap{};
  arc_map_.vertex_count = full_.vertex_count;
  for (int d : arc_origin_) {
    arc_map_.vertex.push_back(dv[d]);
    arc_map_.opposite.push_back(to_arc[full_.opposite[d]]);
    int e = full_.next[d];
    while (meta[e].arc < 0) e = full_.next[e];
    arc_map_.next.push_back(to_arc[e]);
  }
  return true;
}

void Arrangement::classify_regions() {
  std::vector<int> full_face_of;
  auto full_faces = full_.faces(&full_face_of);
  UnionFind uf(static_cast<int>(full_faces.size()));
  for (int d = 0; d < full_.dart_count(); ++d)
    if (dart_arc_[d] < 0) uf.unite(full_face_of[d], full_face_of[full_.opposite[d]]);

  region_walks_ = arc_map_.faces(&region_of_dart_);
  const int nreg = static_cast<int>(region_walks_.size());
  std::map<int, int> class_region;
  for (int e = 0; e < arc_map_.dart_count(); ++e)
    class_region[uf.find(full_face_of[arc_origin_[e]])] = region_of_dart_[e];

  regions_.assign(nreg, RegionReport{});
  const int n = surface_.n();
  puncture_region_.assign(n, -1);
  std::vector<char> touched(n, 0);
  for (int v : arc_map_.vertex)
    if (v < n) touched[v] = 1;
  for (int u = 0; u < n; ++u) {
    if (touched[u]) continue;
    int d = 0;
    while (full_.vertex[d] != u) ++d;
    int r = class_region.at(uf.find(full_face_of[d]));
    puncture_region_[u] = r;
    regions_[r].interior_punctures.push_back(Puncture{u});
  }

  for (int r = 0; r < nreg; ++r) {
    const auto& walk = region_walks_[r];
    RegionReport& rep = regions_[r];
    std::vector<int> corner_at;  // indices i such that a corner follows walk[i]
    int puncture_corners = 0;
    for (std::size_t i = 0; i < walk.size(); ++i) {
      int v = arc_map_.head(walk[i]);
      const auto& vx = vertices_[v];
      if (vx.kind == VertexKind::Puncture) {
        rep.boundary_punctures.push_back(vx.puncture);
        corner_at.push_back(static_cast<int>(i));
        ++puncture_corners;
      } else if (vx.kind == VertexKind::Crossing) {
        corner_at.push_back(static_cast<int>(i));
      }
    }
    rep.corners = static_cast<int>(corner_at.size());
    for (int e : walk) rep.bounding_arcs.push_back(dart_arc_[arc_origin_[e]]);
    std::sort(rep.bounding_arcs.begin(), rep.bounding_arcs.end());
    rep.bounding_arcs.erase(std::unique(rep.bounding_arcs.begin(), rep.bounding_arcs.end()), rep.bounding_arcs.end());
    rep.kind = RegionKind::Other;
    if (corner_at.size() == 2) {
      int s1 = dart_arc_[arc_origin_[walk[(corner_at[0] + 1) % walk.size()]]];
      int s2 = dart_arc_[arc_origin_[walk[(corner_at[1] + 1) % walk.size()]]];
      if (s1 != s2)
        rep.kind = puncture_corners == 0 ? RegionKind::Bigon
                   : puncture_corners == 1 ? RegionKind::HalfBigon
                                           : RegionKind::Strip;
    }
  }
}

std::optional<int> Arrangement::region_of_puncture(Puncture u) const {
  if (u.pos < 0 || u.pos >= static_cast<int>(puncture_region_.size()) || puncture_region_[u.pos] < 0) return std::nullopt;
  return puncture_region_[u.pos];
}

int Arrangement::crossing_count(int a, int b) const {
  int c = 0;
  for (const auto& x : crossings_)
    if ((x.arc_a == a && x.arc_b == b) || (x.arc_a == b && x.arc_b == a)) ++c;
  return c;
}

std::vector<std::vector<int>> Arrangement::crossing_matrix() const {
  std::vector<std::vector<int>> m(arcs_.size(), std::vector<int>(arcs_.size(), 0));
  for (const auto& x : crossings_) {
    ++m[x.arc_a][x.arc_b];
    if (x.arc_a != x.arc_b) ++m[x.arc_b][x.arc_a];
  }
  return m;
}

Arrangement build_arrangement(const Configuration& cfg) { return build_arrangement(embed_configuration(cfg)); }

Arrangement build_arrangement(std::vector<EmbeddedArc> arcs) {
  if (arcs.empty()) throw std::invalid_argument("arrangement needs at least one arc");
  const int n = arcs.front().cls.n;
  for (const auto& a : arcs)
    if (a.cls.n != n) throw std::invalid_argument("arcs live on different surfaces");
  Configuration cfg = configuration_of(arcs);
  Arrangement arr;
  arr.surface_ = SurfaceSpec(n);
  std::mt19937 rng(12345);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<EmbeddedArc> placed = embed_configuration(cfg);
    if (attempt > 0) {
      for (int g = 0; g < n; ++g) {
        const auto& v = cfg.gaps()[g];
        const long count = static_cast<long>(v.size());
        for (long r = 0; r < count; ++r) {
          long jitter = static_cast<long>(rng() % 1001) - 500;  // shift of at most a quarter slot
          placed[v[r].arc].params[v[r].point] = Rational(g) + Rational((r + 1) * 2000 + jitter, 2000 * (count + 1));
        }
      }
    }
    if (arr.build_once(placed)) {
      arr.classify_regions();
      return arr;
    }
  }
  throw std::runtime_error("could not separate concurrent chords");
}

}  // namespace arcsys
