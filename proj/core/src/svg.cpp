#include "arcsys/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <set>
#include <sstream>

#include "arcsys/taut.hpp"

namespace arcsys {

namespace {

constexpr double kCenter = 300.0;
constexpr double kRadius = 150.0;

const char* color(int i) {
  static const char* palette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
                                  "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#637939"};
  return palette[i % 12];
}

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

struct Pt {
  double x, y;
};

Pt on_circle(double t, int n, double r = kRadius) {
  double a = 2 * std::numbers::pi * t / n;
  return {kCenter + r * std::cos(a), kCenter - r * std::sin(a)};
}

std::string header(const std::string& title) {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"640\" viewBox=\"0 0 600 640\">\n"
         "<title>" + title + "</title>\n<rect width=\"600\" height=\"640\" fill=\"white\"/>\n";
}

}  // namespace

std::string render_system_svg(const ArcSystem& sys) {
  const int n = sys.surface.n();
  std::ostringstream os;
  os << header("arc system, n=" + std::to_string(n) + ", " + std::to_string(sys.size()) + " arcs");
  os << "<circle cx=\"" << num(kCenter) << "\" cy=\"" << num(kCenter) << "\" r=\"" << num(kRadius)
     << "\" fill=\"none\" stroke=\"#bbbbbb\" stroke-width=\"1\"/>\n";
  if (sys.size() > 0) {
    auto arcs = embed_configuration(minimal_position(sys.classes));
    for (std::size_t a = 0; a < arcs.size(); ++a) {
      const auto& e = arcs[a];
      os << "<polyline fill=\"none\" stroke=\"" << color(static_cast<int>(a)) << "\" stroke-width=\"2\" points=\"";
      for (int j = 0; j < e.chord_count(); ++j) {
        Pt u = on_circle(e.node_param(j).get_d(), n), v = on_circle(e.node_param(j + 1).get_d(), n);
        const bool lower = e.cls.chord_side(j) == Side::Lower;
        const int steps = 24;
        for (int i = j == 0 ? 0 : 1; i <= steps; ++i) {
          double t = static_cast<double>(i) / steps;
          Pt w{u.x + t * (v.x - u.x), u.y + t * (v.y - u.y)};
          if (lower) {
            // Radial reflection across the circle keeps the outside picture planar.
            double dx = w.x - kCenter, dy = w.y - kCenter, d = std::hypot(dx, dy);
            double s = d > 1e-9 ? (2 * kRadius - d) / d : 0;
            w = {kCenter + dx * s, kCenter + dy * s};
          }
          os << num(w.x) << "," << num(w.y) << " ";
        }
      }
      os << "\"/>\n";
    }
  }
  for (int pos = 0; pos < n; ++pos) {
    Pt c = on_circle(pos, n), l = on_circle(pos, n, kRadius + 18);
    os << "<circle cx=\"" << num(c.x) << "\" cy=\"" << num(c.y) << "\" r=\"5\" fill=\"black\"/>\n";
    os << "<text x=\"" << num(l.x) << "\" y=\"" << num(l.y + 5) << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">"
       << sys.surface.label(Puncture{pos}) << "</text>\n";
  }
  os << "<text x=\"20\" y=\"620\" font-family=\"sans-serif\" font-size=\"12\">inside: upper disk, outside: lower disk</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string render_diagram_svg(const AnnularDiagram& d) {
  const PlaneMap& m = d.map;
  DiagramFaces f = diagram_faces(d);
  const int nv = m.vertex_count;
  std::vector<int> slot(nv, -1), ring(nv, 0);
  std::vector<std::vector<int>> walk(2);
  for (int which = 0; which < 2; ++which) walk[which] = boundary_vertices(d, which);
  for (int which = 0; which < 2; ++which)
    for (std::size_t i = 0; i < walk[which].size(); ++i) {
      int v = walk[which][i];
      ring[v] |= 1 << which;
      if (slot[v] < 0 || which == 0) slot[v] = static_cast<int>(i);
    }
  std::vector<Pt> at(nv, Pt{kCenter, kCenter});
  std::vector<char> fixed(nv, 0);
  for (int v = 0; v < nv; ++v) {
    if (!ring[v]) continue;
    int which = (ring[v] & 1) ? 0 : 1;
    double r = ring[v] == 3 ? 165.0 : which == 0 ? 80.0 : 250.0;
    double len = static_cast<double>(walk[which].size());
    double a = 2 * std::numbers::pi * (slot[v] + (which == 0 ? 0.0 : 0.5)) / len;
    at[v] = {kCenter + r * std::cos(a), kCenter - r * std::sin(a)};
    fixed[v] = 1;
  }
  auto rots = m.rotations();
  for (int round = 0; round < 500; ++round)
    for (int v = 0; v < nv; ++v) {
      if (fixed[v] || rots[v].empty()) continue;
      Pt s{0, 0};
      for (int x : rots[v]) {
        s.x += at[m.head(x)].x;
        s.y += at[m.head(x)].y;
      }
      at[v] = {s.x / rots[v].size(), s.y / rots[v].size()};
    }
  std::ostringstream os;
  os << header("annular diagram, " + std::to_string(nv) + " vertices, " + std::to_string(f.squares.size()) + " squares");
  for (int s : f.squares) {
    os << "<polygon fill=\"#eeeeee\" stroke=\"none\" points=\"";
    for (int x : f.faces[s]) os << num(at[m.vertex[x]].x) << "," << num(at[m.vertex[x]].y) << " ";
    os << "\"/>\n";
  }
  for (int x = 0; x < m.dart_count(); ++x) {
    if (x != edge_id(m, x)) continue;
    Pt u = at[m.vertex[x]], v = at[m.head(x)];
    os << "<line x1=\"" << num(u.x) << "\" y1=\"" << num(u.y) << "\" x2=\"" << num(v.x) << "\" y2=\"" << num(v.y)
       << "\" stroke=\"black\" stroke-width=\"1.5\"/>\n";
  }
  DualCurveReport rep = trace_dual_curves(d);
  for (std::size_t c = 0; c < rep.curves.size(); ++c) {
    os << "<polyline fill=\"none\" stroke=\"" << color(static_cast<int>(c)) << "\" stroke-width=\"2\" stroke-dasharray=\"6,4\" points=\"";
    for (int x : rep.curves[c].darts) {
      Pt u = at[m.vertex[x]], v = at[m.head(x)];
      os << num((u.x + v.x) / 2) << "," << num((u.y + v.y) / 2) << " ";
    }
    os << "\"/>\n";
  }
  std::set<int> corners;
  for (int which = 0; which < 2; ++which)
    for (int v : find_corners(d, which)) corners.insert(v);
  for (int v = 0; v < nv; ++v) {
    if (rots[v].empty()) continue;
    bool corner = corners.count(v) > 0;
    os << "<circle cx=\"" << num(at[v].x) << "\" cy=\"" << num(at[v].y) << "\" r=\"" << (corner ? 7 : 4) << "\" fill=\""
       << (corner ? "red" : "black") << "\"/>\n";
  }
  os << "<text x=\"20\" y=\"620\" font-family=\"sans-serif\" font-size=\"12\">dashed: dual curves, red: corners, grey: squares</text>\n";
  os << "</svg>\n";
  return os.str();
}

}  // namespace arcsys
