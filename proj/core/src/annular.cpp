#include "arcsys/annular.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace arcsys {

DiagramFaces diagram_faces(const AnnularDiagram& d) {
  DiagramFaces f;
  f.faces = d.map.faces(&f.face_of);
  for (int i = 0; i < 2; ++i) {
    int b = d.boundary[i];
    if (b < 0 || b >= d.map.dart_count()) throw std::invalid_argument("boundary dart out of range");
    f.boundary_face[i] = f.face_of[b];
  }
  for (int k = 0; k < static_cast<int>(f.faces.size()); ++k)
    if (k != f.boundary_face[0] && k != f.boundary_face[1]) f.squares.push_back(k);
  return f;
}

bool validate(const AnnularDiagram& d, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  try {
    d.map.check();
  } catch (const std::invalid_argument& e) {
    return fail(e.what());
  }
  if (d.map.dart_count() == 0) return fail("no edges");
  for (int i = 0; i < 2; ++i)
    if (d.boundary[i] < 0 || d.boundary[i] >= d.map.dart_count()) return fail("boundary dart out of range");
  std::vector<char> used(d.map.vertex_count, 0);
  for (int v : d.map.vertex) used[v] = 1;
  if (std::find(used.begin(), used.end(), 0) != used.end()) return fail("isolated vertex");
  DiagramFaces f = diagram_faces(d);
  if (f.boundary_face[0] == f.boundary_face[1]) return fail("both boundary darts lie on one face");
  for (int s : f.squares)
    if (f.faces[s].size() != 4) return fail("face with " + std::to_string(f.faces[s].size()) + " sides");
  if (!d.map.connected()) return fail("not connected");
  const int chi = d.map.vertex_count - d.map.dart_count() / 2 + static_cast<int>(f.faces.size());
  if (chi != 2) return fail("Euler characteristic of the closed surface is " + std::to_string(chi));
  return true;
}

int square_count(const AnnularDiagram& d) { return static_cast<int>(diagram_faces(d).squares.size()); }

bool is_cycle(const AnnularDiagram& d) {
  if (square_count(d) != 0) return false;
  for (auto& rot : d.map.rotations())
    if (rot.size() != 2) return false;
  return true;
}

AnnularDiagram make_cycle(int m) {
  if (m < 1) throw std::invalid_argument("cycle needs at least one vertex");
  AnnularDiagram d;
  d.map.vertex_count = m;
  d.map.vertex.resize(2 * m);
  d.map.opposite.resize(2 * m);
  d.map.next.resize(2 * m);
  for (int i = 0; i < m; ++i) {
    d.map.vertex[2 * i] = i;
    d.map.vertex[2 * i + 1] = (i + 1) % m;
    d.map.opposite[2 * i] = 2 * i + 1;
    d.map.opposite[2 * i + 1] = 2 * i;
  }
  for (int v = 0; v < m; ++v) {
    int out = 2 * v, back = 2 * ((v - 1 + m) % m) + 1;
    d.map.next[out] = back;
    d.map.next[back] = out;
  }
  d.boundary = {0, 1};
  return d;
}

DualCurveReport trace_dual_curves(const AnnularDiagram& d) {
  const PlaneMap& m = d.map;
  DiagramFaces f = diagram_faces(d);
  DualCurveReport rep;
  rep.curve_of_edge.assign(m.dart_count(), -1);
  auto boundary_index = [&](int face) { return face == f.boundary_face[0] ? 0 : face == f.boundary_face[1] ? 1 : -1; };
  auto note = [&](const std::string& s) {
    if (rep.problem.empty()) rep.problem = s;
  };

  auto trace = [&](int first, int start_boundary) {
    DualCurve c;
    c.start_boundary = start_boundary;
    const int id = static_cast<int>(rep.curves.size());
    int x = first;
    const int first_edge = edge_id(m, first);
    for (;;) {
      int e = edge_id(m, x);
      if (rep.curve_of_edge[e] != -1 && !(start_boundary == -1 && e == first_edge && !c.darts.empty())) {
        c.simple = false;
        note("dual curve meets an edge twice");
        break;
      }
      if (start_boundary == -1 && e == first_edge && !c.darts.empty()) break;  // closed curve is complete
      rep.curve_of_edge[e] = id;
      c.darts.push_back(x);
      int face = f.face_of[x];
      int bi = boundary_index(face);
      if (bi >= 0) {
        c.end_boundary = bi;
        break;
      }
      if (f.faces[face].size() != 4) {
        c.simple = false;
        note("dual curve enters a face that is not a square");
        break;
      }
      c.squares.push_back(face);
      x = m.opposite[m.face_next(m.face_next(x))];
    }
    rep.curves.push_back(std::move(c));
  };

  for (int which = 0; which < 2; ++which)
    for (int b : f.faces[f.boundary_face[which]])
      if (rep.curve_of_edge[edge_id(m, b)] == -1) trace(m.opposite[b], which);
  for (int x = 0; x < m.dart_count(); ++x)
    if (rep.curve_of_edge[edge_id(m, x)] == -1) {
      trace(x, -1);
      rep.all_join_boundaries = false;
      note("closed dual curve");
    }

  const int k = static_cast<int>(rep.curves.size());
  rep.crossings.assign(k, std::vector<int>(k, 0));
  std::map<int, std::vector<int>> through;
  for (int c = 0; c < k; ++c) {
    auto& cv = rep.curves[c];
    std::set<int> seen;
    for (int s : cv.squares) {
      if (!seen.insert(s).second) {
        cv.simple = false;
        note("dual curve crosses itself");
      }
      through[s].push_back(c);
    }
    if (cv.start_boundary < 0 || cv.end_boundary < 0 || cv.start_boundary == cv.end_boundary) {
      rep.all_join_boundaries = false;
      note("dual curve does not join the two boundary paths");
    }
  }
  for (auto& [s, cs] : through) {
    if (cs.size() == 2 && cs[0] != cs[1]) {
      ++rep.crossings[cs[0]][cs[1]];
      ++rep.crossings[cs[1]][cs[0]];
    }
  }
  return rep;
}

bool is_k_system_diagram(const AnnularDiagram& d, int k, DualCurveReport* out) {
  if (!validate(d)) return false;
  DualCurveReport rep = trace_dual_curves(d);
  bool ok = rep.all_join_boundaries;
  for (const auto& c : rep.curves) ok = ok && c.simple;
  for (const auto& row : rep.crossings)
    for (int x : row)
      if (x > k) {
        ok = false;
        if (rep.problem.empty()) rep.problem = "two dual curves cross more than k times";
      }
  if (out) *out = std::move(rep);
  return ok;
}

std::vector<std::pair<std::pair<int, int>, int>> keyed_crossings(const AnnularDiagram& d) {
  DualCurveReport rep = trace_dual_curves(d);
  std::vector<int> key(rep.curves.size());
  for (std::size_t c = 0; c < rep.curves.size(); ++c)
    key[c] = rep.curves[c].darts.empty() ? -1 : edge_id(d.map, rep.curves[c].darts.front());
  std::vector<std::pair<std::pair<int, int>, int>> out;
  for (std::size_t a = 0; a < rep.curves.size(); ++a)
    for (std::size_t b = a + 1; b < rep.curves.size(); ++b) {
      int x = key[a], y = key[b];
      if (x > y) std::swap(x, y);
      out.push_back({{x, y}, rep.crossings[a][b]});
    }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::vector<int> rooted_code(const AnnularDiagram& d, const std::vector<int>& face_flag, int root, bool swap_flags) {
  const PlaneMap& m = d.map;
  const int n = m.dart_count();
  std::vector<int> label(n, -1), order;
  order.reserve(n);
  label[root] = 0;
  order.push_back(root);
  for (std::size_t i = 0; i < order.size(); ++i) {
    int x = order[i];
    for (int y : {m.opposite[x], m.next[x]})
      if (label[y] == -1) {
        label[y] = static_cast<int>(order.size());
        order.push_back(y);
      }
  }
  std::vector<int> code{n, static_cast<int>(order.size())};
  code.reserve(3 * n + 2);
  for (int x : order) {
    int flag = face_flag[x];
    if (swap_flags && flag > 0) flag = 3 - flag;
    code.push_back(label[m.opposite[x]]);
    code.push_back(label[m.next[x]]);
    code.push_back(flag);
  }
  return code;
}

}  // namespace

std::vector<int> canonical_code(const AnnularDiagram& d, bool rooted) {
  DiagramFaces f = diagram_faces(d);
  std::vector<int> flag(d.map.dart_count(), 0);
  for (int x = 0; x < d.map.dart_count(); ++x) {
    if (f.face_of[x] == f.boundary_face[0]) flag[x] = 1;
    else if (f.face_of[x] == f.boundary_face[1]) flag[x] = 2;
  }
  if (rooted) return rooted_code(d, flag, d.boundary[0], false);
  std::vector<int> best;
  for (int which = 0; which < 2; ++which)
    for (int r : f.faces[f.boundary_face[which]]) {
      auto c = rooted_code(d, flag, r, which == 1);
      if (best.empty() || c < best) best = std::move(c);
    }
  return best;
}

}  // namespace arcsys

namespace arcsys {

namespace {

bool is_boundary_face(const DiagramFaces& f, int face) {
  return face == f.boundary_face[0] || face == f.boundary_face[1];
}

// Rebuilds the map without the listed darts and vertex.
AnnularDiagram drop(const AnnularDiagram& d, const std::vector<char>& dead, int dead_vertex) {
  const PlaneMap& m = d.map;
  const int n = m.dart_count();
  std::vector<int> nxt = m.next;
  for (int x = 0; x < n; ++x) {
    if (!dead[x]) continue;
    int p = m.prev(x);
    while (dead[p] && p != x) p = m.prev(p);
    int q = nxt[x];
    while (dead[q] && q != x) q = nxt[q];
    if (p != x) nxt[p] = q;
  }
  std::vector<int> id(n, -1);
  int k = 0;
  for (int x = 0; x < n; ++x)
    if (!dead[x]) id[x] = k++;
  AnnularDiagram out;
  out.map.vertex_count = m.vertex_count - (dead_vertex >= 0 ? 1 : 0);
  out.map.vertex.resize(k);
  out.map.opposite.resize(k);
  out.map.next.resize(k);
  for (int x = 0; x < n; ++x) {
    if (dead[x]) continue;
    int v = m.vertex[x];
    out.map.vertex[id[x]] = (dead_vertex >= 0 && v > dead_vertex) ? v - 1 : v;
    out.map.opposite[id[x]] = id[m.opposite[x]];
    out.map.next[id[x]] = id[nxt[x]];
  }
  for (int i = 0; i < 2; ++i) out.boundary[i] = id[d.boundary[i]];
  return out;
}

}  // namespace

std::vector<int> hexagon_loci(const AnnularDiagram& d) {
  const PlaneMap& m = d.map;
  DiagramFaces f = diagram_faces(d);
  std::vector<int> out;
  auto rots = m.rotations();
  for (int v = 0; v < static_cast<int>(rots.size()); ++v) {
    const auto& r = rots[v];
    if (r.size() != 3) continue;
    int e0 = r[0];
    std::array<int, 3> e{e0, m.next[e0], m.next[m.next[e0]]};
    bool ok = true;
    std::set<int> faces, verts{v};
    for (int i = 0; i < 3 && ok; ++i) {
      int face = f.face_of[e[i]];
      if (is_boundary_face(f, face) || f.faces[face].size() != 4) ok = false;
      faces.insert(face);
      int x = m.face_next(e[i]);
      verts.insert(m.head(e[i]));
      verts.insert(m.head(x));
    }
    if (ok && faces.size() == 3 && verts.size() == 7) out.push_back(v);
  }
  return out;
}

AnnularDiagram hexagon_move(const AnnularDiagram& d, int center) {
  auto loci = hexagon_loci(d);
  if (std::find(loci.begin(), loci.end(), center) == loci.end())
    throw std::domain_error("vertex " + std::to_string(center) + " is not the center of a hexagon");
  AnnularDiagram out = d;
  const PlaneMap& m = d.map;
  PlaneMap& w = out.map;
  int e0 = -1;
  for (int x = 0; x < m.dart_count(); ++x)
    if (m.vertex[x] == center) {
      e0 = x;
      break;
    }
  std::array<int, 3> e{e0, m.next[e0], m.next[m.next[e0]]};
  std::array<int, 3> xs{}, ys{};
  for (int i = 0; i < 3; ++i) {
    xs[i] = m.face_next(e[i]);
    ys[i] = m.face_next(xs[i]);
  }
  for (int i = 0; i < 3; ++i) {
    int oe = m.opposite[e[i]];
    int p = m.prev(oe);
    w.next[p] = m.next[oe];
  }
  for (int i = 0; i < 3; ++i) {
    int oe = m.opposite[e[i]];
    w.next[ys[i]] = oe;
    w.next[oe] = m.opposite[xs[i]];
    w.vertex[oe] = m.head(xs[i]);
  }
  return out;
}

std::vector<int> boundary_vertices(const AnnularDiagram& d, int which) {
  std::vector<int> out;
  int start = d.boundary[which], x = start;
  do {
    out.push_back(d.map.vertex[x]);
    x = d.map.face_next(x);
  } while (x != start);
  return out;
}

std::vector<int> find_corners(const AnnularDiagram& d, int which) {
  const PlaneMap& m = d.map;
  DiagramFaces f = diagram_faces(d);
  std::vector<int> out;
  int start = d.boundary[which], x = start;
  do {
    int v = m.vertex[x];
    int other = m.next[x];
    if (m.next[other] == x && other != x) {
      int face = f.face_of[other];
      if (!is_boundary_face(f, face) && std::find(out.begin(), out.end(), v) == out.end()) out.push_back(v);
    }
    x = m.face_next(x);
  } while (x != start);
  return out;
}

std::optional<int> find_corner(const AnnularDiagram& d, int which) {
  auto c = find_corners(d, which);
  if (c.empty()) return std::nullopt;
  return c.front();
}

AnnularDiagram remove_corner(const AnnularDiagram& d, int v) {
  const PlaneMap& m = d.map;
  DiagramFaces f = diagram_faces(d);
  int which = -1;
  for (int i = 0; i < 2 && which < 0; ++i) {
    auto c = find_corners(d, i);
    if (std::find(c.begin(), c.end(), v) != c.end()) which = i;
  }
  if (which < 0) throw std::domain_error("vertex " + std::to_string(v) + " is not a corner");
  // s1 leaves v with the square on its left; s0 arrives at v along the square.
  int s1 = -1;
  for (int x = 0; x < m.dart_count(); ++x)
    if (m.vertex[x] == v && !is_boundary_face(f, f.face_of[x])) s1 = x;
  int s2 = m.face_next(s1), s3 = m.face_next(s2), s0 = m.face_next(s3);
  std::vector<char> dead(m.dart_count(), 0);
  for (int x : {s0, s1}) dead[x] = dead[m.opposite[x]] = 1;
  AnnularDiagram tmp = d;
  for (int i = 0; i < 2; ++i)
    if (dead[tmp.boundary[i]]) tmp.boundary[i] = s2;
  return drop(tmp, dead, v);
}

namespace {

// +1/-1 on the darts of one dual path from boundary face 0 to boundary face 1.
std::vector<int> cut_cocycle(const AnnularDiagram& d, const DiagramFaces& f) {
  const PlaneMap& m = d.map;
  const int nf = static_cast<int>(f.faces.size());
  std::vector<int> via(nf, -2);
  std::deque<int> queue{f.boundary_face[0]};
  via[f.boundary_face[0]] = -1;
  while (!queue.empty()) {
    int face = queue.front();
    queue.pop_front();
    if (face == f.boundary_face[1]) break;
    for (int x : f.faces[face]) {
      int g = f.face_of[m.opposite[x]];
      if (via[g] != -2) continue;
      via[g] = x;
      queue.push_back(g);
    }
  }
  std::vector<int> c(m.dart_count(), 0);
  for (int face = f.boundary_face[1]; via[face] >= 0;) {
    int x = via[face];
    c[x] += 1;
    c[m.opposite[x]] -= 1;
    face = f.face_of[x];
  }
  return c;
}

// Entry darts of the dual curve through `edge_dart`, starting at that edge
// and oriented away from the boundary face on its left.
std::vector<int> curve_from(const AnnularDiagram& d, const DiagramFaces& f, int boundary_dart) {
  const PlaneMap& m = d.map;
  std::vector<int> out;
  int x = m.opposite[boundary_dart];
  std::set<int> seen;
  while (!is_boundary_face(f, f.face_of[x]) && f.faces[f.face_of[x]].size() == 4 && seen.insert(x).second) {
    out.push_back(x);
    x = m.opposite[m.face_next(m.face_next(x))];
  }
  return out;
}

}  // namespace

std::optional<int> test_loop_winding(const AnnularDiagram& d, int square, int first, int second) {
  const PlaneMap& m = d.map;
  DiagramFaces f = diagram_faces(d);
  if (m.face_next(first) != second) return std::nullopt;
  auto cocycle = cut_cocycle(d, f);
  // The curve through `first` is pushed onto the rail through the tails of
  // its entry darts, the one through `second` onto the rail through the heads;
  // both rails start at the shared vertex. Returns (sum, entry dart of square).
  auto rail = [&](int boundary_dart, bool tails) -> std::optional<std::pair<int, int>> {
    int sum = 0;
    for (int s0 : curve_from(d, f, boundary_dart)) {
      if (f.face_of[s0] == square) return std::make_pair(sum, s0);
      int s1 = m.face_next(s0), s2 = m.face_next(s1), s3 = m.face_next(s2);
      sum += tails ? cocycle[m.opposite[s3]] : cocycle[s1];
    }
    return std::nullopt;
  };
  auto a = rail(first, true), b = rail(second, false);
  if (!a || !b) return std::nullopt;
  int sum = a->first - b->first;
  // Inside the square, walk from the tail of one entry dart to the head of the other.
  const int stop = m.face_next(b->second);
  for (int x = a->second; x != stop; x = m.face_next(x)) sum += cocycle[x];
  return sum;
}

std::vector<Cornsquare> find_cornsquares(const AnnularDiagram& d, int which) {
  const PlaneMap& m = d.map;
  DiagramFaces f = diagram_faces(d);
  std::vector<Cornsquare> out;
  int start = d.boundary[which], first = start;
  do {
    int second = m.face_next(first);
    auto ca = curve_from(d, f, first), cb = curve_from(d, f, second);
    std::set<int> sa;
    for (int x : ca) sa.insert(f.face_of[x]);
    std::set<int> tried;
    for (int x : cb) {
      int sq = f.face_of[x];
      if (!sa.count(sq) || !tried.insert(sq).second) continue;
      if (edge_id(m, first) == edge_id(m, second)) continue;
      auto w = test_loop_winding(d, sq, first, second);
      if (w && *w == 0) out.push_back({sq, first, second, m.head(first)});
    }
    first = second;
  } while (first != start);
  return out;
}

std::optional<Cornsquare> find_cornsquare(const AnnularDiagram& d, int which) {
  auto c = find_cornsquares(d, which);
  if (c.empty()) return std::nullopt;
  return c.front();
}

CornerSearch reduce_to_corner(const AnnularDiagram& d, int which, std::optional<int> target, int cap) {
  auto done = [&](const AnnularDiagram& x) -> int {
    auto c = find_corners(x, which);
    if (target) return std::find(c.begin(), c.end(), *target) != c.end() ? *target : -1;
    return c.empty() ? -1 : c.front();
  };
  struct Node {
    AnnularDiagram diagram;
    int parent;
    int move;
  };
  std::vector<Node> nodes{{d, -1, -1}};
  std::set<std::pair<std::vector<int>, std::vector<int>>> seen{{d.map.next, d.map.vertex}};
  CornerSearch res;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    res.explored = static_cast<int>(i) + 1;
    int corner = done(nodes[i].diagram);
    if (corner >= 0) {
      res.found = true;
      res.corner = corner;
      res.result = nodes[i].diagram;
      for (int k = static_cast<int>(i); nodes[k].parent >= 0; k = nodes[k].parent) res.moves.push_back(nodes[k].move);
      std::reverse(res.moves.begin(), res.moves.end());
      return res;
    }
    if (res.explored >= cap) break;
    for (int c : hexagon_loci(nodes[i].diagram)) {
      AnnularDiagram nx = hexagon_move(nodes[i].diagram, c);
      if (seen.insert({nx.map.next, nx.map.vertex}).second) nodes.push_back({std::move(nx), static_cast<int>(i), c});
    }
  }
  res.result = d;
  return res;
}

AnnularDiagram dual_of_map(const PlaneMap& src, int vp, int vq) {
  PlaneMap m = src;
  for (bool changed = true; changed;) {
    changed = false;
    auto rots = m.rotations();
    for (int w = 0; w < static_cast<int>(rots.size()); ++w) {
      if (w == vp || w == vq || rots[w].size() != 2) continue;
      int d1 = rots[w][0], d2 = rots[w][1];
      if (m.opposite[d1] == d2) continue;
      int a = m.opposite[d1], b = m.opposite[d2];
      AnnularDiagram tmp;
      tmp.map = m;
      tmp.map.opposite[a] = b;
      tmp.map.opposite[b] = a;
      tmp.boundary = {a, b};
      std::vector<char> dead(m.dart_count(), 0);
      dead[d1] = dead[d2] = 1;
      // d1, d2 form a rotation of their own, so dropping them leaves others intact.
      AnnularDiagram r = drop(tmp, dead, w);
      m = r.map;
      if (vp > w) --vp;
      if (vq > w) --vq;
      changed = true;
      break;
    }
  }
  std::vector<int> face_of;
  auto faces = m.faces(&face_of);
  AnnularDiagram out;
  out.map.vertex_count = static_cast<int>(faces.size());
  out.map.vertex = face_of;
  out.map.opposite = m.opposite;
  out.map.next.resize(m.dart_count());
  for (int x = 0; x < m.dart_count(); ++x) out.map.next[x] = m.face_next(x);
  out.boundary = {-1, -1};
  for (int x = 0; x < m.dart_count(); ++x) {
    if (out.boundary[0] < 0 && m.head(x) == vp) out.boundary[0] = x;
    if (out.boundary[1] < 0 && m.head(x) == vq) out.boundary[1] = x;
  }
  if (out.boundary[0] < 0 || out.boundary[1] < 0) throw std::invalid_argument("hole vertex has no edges");
  return out;
}

}  // namespace arcsys
