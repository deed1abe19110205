#include "arcsys/configuration.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <stdexcept>

namespace arcsys {

Configuration::Configuration(SurfaceSpec s, std::vector<ArcClass> arcs, std::vector<std::vector<StrandRef>> gaps)
    : surface_(s), arcs_(std::move(arcs)), gaps_(std::move(gaps)) {
  if (static_cast<int>(gaps_.size()) != s.n()) throw std::invalid_argument("configuration needs one list per gap");
  for (const auto& a : arcs_)
    if (a.n != s.n()) throw std::invalid_argument("arcs live on different surfaces");
  reindex();
}

void Configuration::reindex() {
  rank_.assign(arcs_.size(), {});
  for (std::size_t a = 0; a < arcs_.size(); ++a) rank_[a].assign(arcs_[a].seq.size(), -1);
  std::size_t widest = 0;
  for (int g = 0; g < surface_.n(); ++g) {
    widest = std::max(widest, gaps_[g].size());
    for (std::size_t r = 0; r < gaps_[g].size(); ++r) {
      StrandRef x = gaps_[g][r];
      if (x.arc < 0 || x.arc >= arc_count() || x.point < 0 || x.point >= point_count(x.arc) ||
          arcs_[x.arc].seq[x.point] != g || rank_[x.arc][x.point] != -1)
        throw std::invalid_argument("configuration gap lists do not match the arcs");
      rank_[x.arc][x.point] = static_cast<int>(r);
    }
  }
  for (const auto& row : rank_)
    for (int r : row)
      if (r < 0) throw std::invalid_argument("configuration is missing a crossing point");
  stride_ = static_cast<long>(widest) + 2;
}

long Configuration::node_key(int arc, int node) const {
  const ArcClass& c = arcs_[arc];
  const int m = static_cast<int>(c.seq.size());
  if (node == 0) return c.from.pos * stride_;
  if (node == m + 1) return c.to.pos * stride_;
  return c.seq[node - 1] * stride_ + rank_[arc][node - 1] + 1;
}

bool Configuration::chords_cross(int a, int ja, int b, int jb) const {
  if (a == b && ja == jb) return false;
  if (arcs_[a].chord_side(ja) != arcs_[b].chord_side(jb)) return false;
  long a1 = node_key(a, ja), b1 = node_key(a, ja + 1);
  long a2 = node_key(b, jb), b2 = node_key(b, jb + 1);
  if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) return false;
  if (a1 > b1) std::swap(a1, b1);
  bool in1 = a1 < a2 && a2 < b1;
  bool in2 = a1 < b2 && b2 < b1;
  return in1 != in2;
}

int Configuration::crossings(int a, int b) const {
  int count = 0;
  const int ca = point_count(a) + 1, cb = point_count(b) + 1;
  for (int ja = 0; ja < ca; ++ja)
    for (int jb = (a == b ? ja + 1 : 0); jb < cb; ++jb)
      if (chords_cross(a, ja, b, jb)) ++count;
  return count;
}

int Configuration::total_crossings() const {
  int t = 0;
  for (int a = 0; a < arc_count(); ++a)
    for (int b = a; b < arc_count(); ++b) t += crossings(a, b);
  return t;
}

std::vector<std::vector<int>> Configuration::crossing_matrix() const {
  std::vector<std::vector<int>> m(arcs_.size(), std::vector<int>(arcs_.size(), 0));
  for (int a = 0; a < arc_count(); ++a)
    for (int b = a + 1; b < arc_count(); ++b) m[a][b] = m[b][a] = crossings(a, b);
  return m;
}

void Configuration::swap_points(StrandRef x, StrandRef y) {
  int g = arcs_[x.arc].seq[x.point];
  if (arcs_[y.arc].seq[y.point] != g) throw std::invalid_argument("swap_points needs points in one gap");
  int rx = rank_[x.arc][x.point], ry = rank_[y.arc][y.point];
  std::swap(gaps_[g][rx], gaps_[g][ry]);
  rank_[x.arc][x.point] = ry;
  rank_[y.arc][y.point] = rx;
}

Configuration stacked_configuration(const SurfaceSpec& s, const std::vector<ArcClass>& arcs) {
  std::vector<std::vector<StrandRef>> gaps(s.n());
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    auto orders = find_embedding_order(arcs[a]);
    if (!orders) throw std::domain_error("class " + to_string(arcs[a]) + " has no embedded representative");
    for (int g = 0; g < s.n(); ++g)
      for (int i : (*orders)[g]) gaps[g].push_back({static_cast<int>(a), i});
  }
  return Configuration(s, arcs, std::move(gaps));
}

namespace {

// A point of the extended real line, the boundary of the upper half plane.
struct Ideal {
  bool inf = false;
  mpq_class x;
};

class Tessellation {
 public:
  explicit Tessellation(int n) : n_(n) {}

  Ideal vertex(int pos) const {
    if (pos == 0) return {true, 0};
    return {false, mpq_class(pos - 1)};
  }

  // Reflection across the base polygon edge that carries gap g.
  Ideal reflect(int g, const Ideal& z) const {
    Ideal a = vertex(g), b = vertex((g + 1) % n_);
    if (a.inf || b.inf) {
      const mpq_class& v = a.inf ? b.x : a.x;
      if (z.inf) return z;
      return {false, mpq_class(2 * v - z.x)};
    }
    mpq_class c = (a.x + b.x) / 2;
    mpq_class h = (b.x - a.x) / 2;
    mpq_class r2 = h * h;
    if (z.inf) return {false, c};
    if (z.x == c) return {true, 0};
    return {false, mpq_class(c + r2 / (z.x - c))};
  }

  // Apply R_{w[0]} o R_{w[1]} o ... o R_{w[k-1]} to z.
  Ideal apply(const std::vector<int>& w, Ideal z) const {
    for (auto it = w.rbegin(); it != w.rend(); ++it) z = reflect(*it, z);
    return z;
  }

  // Position along the base edge of gap g of its intersection with the
  // geodesic joining e1 and e2, increasing in the direction of the gap.
  mpq_class crossing_parameter(int g, const Ideal& e1, const Ideal& e2) const {
    if (g == 0 || g == n_ - 1) {
      if (e1.inf || e2.inf) throw std::logic_error("geodesic parallel to a vertical gap");
      mpq_class c = (e1.x + e2.x) / 2, h = (e1.x - e2.x) / 2;
      mpq_class r2 = h * h;
      mpq_class u = (g == 0) ? mpq_class(0) : mpq_class(n_ - 2);
      mpq_class y2 = r2 - (u - c) * (u - c);
      return g == 0 ? mpq_class(-y2) : y2;
    }
    mpq_class a = g - 1, b = g;
    mpq_class c1 = (a + b) / 2, r1 = mpq_class(1, 4);
    if (e1.inf) return e2.x;
    if (e2.inf) return e1.x;
    mpq_class c2 = (e1.x + e2.x) / 2, h = (e1.x - e2.x) / 2;
    mpq_class r2 = h * h;
    if (c2 == c1) throw std::logic_error("concentric geodesics");
    return (r1 - r2 + c2 * c2 - c1 * c1) / (2 * (c2 - c1));
  }

 private:
  int n_;
};

struct StrandKey {
  StrandRef ref;
  mpq_class param;
  mpq_class lower_end;
};

}  // namespace

Configuration canonical_configuration(const SurfaceSpec& s, const std::vector<ArcClass>& arcs) {
  const int n = s.n();
  std::vector<std::vector<StrandKey>> keys(n);
  Tessellation t(n);
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const ArcClass& c = arcs[a];
    if (c.n != n) throw std::invalid_argument("arcs live on different surfaces");
    if (!is_reduced(c)) throw std::domain_error("class " + to_string(c) + " is not reduced");
    const int m = static_cast<int>(c.seq.size());
    for (int i = 0; i < m; ++i) {
      const int g = c.seq[i];
      const bool after_lower = c.chord_side(i + 1) == Side::Lower;
      std::vector<int> fw, bw;
      if (after_lower) fw.push_back(g);
      else bw.push_back(g);
      for (int j = i + 1; j < m; ++j) fw.push_back(c.seq[j]);
      for (int j = i - 1; j >= 0; --j) bw.push_back(c.seq[j]);
      Ideal fwd = t.apply(fw, t.vertex(c.to.pos));
      Ideal bwd = t.apply(bw, t.vertex(c.from.pos));
      const Ideal& low = after_lower ? fwd : bwd;
      if (low.inf) throw std::logic_error("lower end of a strand at infinity");
      keys[g].push_back({{static_cast<int>(a), i}, t.crossing_parameter(g, fwd, bwd), low.x});
    }
  }
  std::vector<std::vector<StrandRef>> gaps(n);
  for (int g = 0; g < n; ++g) {
    auto& v = keys[g];
    std::sort(v.begin(), v.end(), [](const StrandKey& x, const StrandKey& y) {
      if (x.param != y.param) return x.param < y.param;
      if (x.lower_end != y.lower_end) return x.lower_end < y.lower_end;
      // Copies of one class: flip with the point index so the copies run parallel.
      if (x.ref.point == y.ref.point && x.ref.arc != y.ref.arc)
        return (x.ref.arc < y.ref.arc) != (x.ref.point % 2 == 1);
      return x.ref < y.ref;
    });
    for (const auto& k : v) gaps[g].push_back(k.ref);
  }
  return Configuration(s, arcs, std::move(gaps));
}

}  // namespace arcsys
