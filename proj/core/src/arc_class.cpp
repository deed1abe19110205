#include "arcsys/arc_class.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>

namespace arcsys {

bool enumeration_less(const ArcClass& a, const ArcClass& b) {
  if (a.side != b.side) return a.side == Side::Upper;
  return a.seq < b.seq;
}

ArcClass reduce_between(const SurfaceSpec& s, Puncture from, Puncture to, Side side, std::vector<int> seq) {
  if (!s.valid_puncture(from) || !s.valid_puncture(to)) throw std::invalid_argument("endpoint outside surface");
  if (from == to) throw std::invalid_argument("arc endpoints must differ");
  for (int g : seq)
    if (!s.valid_gap(g))
      throw std::invalid_argument("gap index " + std::to_string(g) + " invalid for n=" + std::to_string(s.n()));

  // R1 to exhaustion with a stack; deleting ends later never creates a new equal pair.
  std::vector<int> w;
  w.reserve(seq.size());
  for (int g : seq) {
    if (!w.empty() && w.back() == g) w.pop_back();
    else w.push_back(g);
  }
  std::size_t lo = 0, hi = w.size();
  for (;;) {
    if (lo < hi && s.adjacent(w[lo], from)) {
      ++lo;
      side = flip(side);
    } else if (lo < hi && s.adjacent(w[hi - 1], to)) {
      --hi;
    } else {
      break;
    }
  }
  ArcClass c;
  c.n = s.n();
  c.from = from;
  c.to = to;
  c.seq.assign(w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(hi));
  c.side = (c.seq.empty() && s.neighbors(from, to)) ? Side::Upper : side;
  return c;
}

ArcClass reduce(const SurfaceSpec& s, Side side, std::vector<int> seq) {
  return reduce_between(s, Puncture::p(), Puncture::q(), side, std::move(seq));
}

ArcClass reduce(const ArcClass& c) { return reduce_between(c.surface(), c.from, c.to, c.side, c.seq); }

bool is_reduced(const ArcClass& c) { return reduce(c) == c; }

namespace {

struct ChordKeys {
  long a, b;
  Side side;
};

bool keys_cross(long a1, long b1, long a2, long b2) {
  if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) return false;
  if (a1 > b1) std::swap(a1, b1);
  bool in1 = a1 < a2 && a2 < b1;
  bool in2 = a1 < b2 && b2 < b1;
  return in1 != in2;
}

}  // namespace

std::optional<GapOrders> find_embedding_order(const ArcClass& c) {
  SurfaceSpec s = c.surface();
  const int m = static_cast<int>(c.seq.size());
  for (int g : c.seq)
    if (!s.valid_gap(g)) throw std::invalid_argument("invalid gap index");
  const long stride = m + 2;
  GapOrders orders(s.n());
  for (int i = 0; i < m; ++i) orders[c.seq[i]].push_back(i);

  std::vector<long> key(m, -1);
  std::vector<int> gaps_used;
  for (int g = 0; g < s.n(); ++g)
    if (!orders[g].empty()) gaps_used.push_back(g);

  auto node_key = [&](int node) -> long {
    if (node == 0) return c.from.pos * stride;
    if (node == m + 1) return c.to.pos * stride;
    return key[node - 1];
  };
  // Chord j joins node j and node j + 1.
  auto check = [&]() {
    std::vector<ChordKeys> ready;
    for (int j = 0; j <= m; ++j) {
      long a = node_key(j), b = node_key(j + 1);
      if (a < 0 || b < 0) continue;
      ready.push_back({a, b, c.chord_side(j)});
    }
    for (std::size_t x = 0; x < ready.size(); ++x)
      for (std::size_t y = x + 1; y < ready.size(); ++y)
        if (ready[x].side == ready[y].side && keys_cross(ready[x].a, ready[x].b, ready[y].a, ready[y].b)) return false;
    return true;
  };

  std::function<bool(std::size_t)> place = [&](std::size_t idx) -> bool {
    if (idx == gaps_used.size()) return true;
    int g = gaps_used[idx];
    std::vector<int> perm = orders[g];
    std::sort(perm.begin(), perm.end());
    do {
      for (std::size_t r = 0; r < perm.size(); ++r) key[perm[r]] = g * stride + static_cast<long>(r) + 1;
      if (check() && place(idx + 1)) {
        orders[g] = perm;
        return true;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int i : perm) key[i] = -1;
    return false;
  };
  if (!check()) return std::nullopt;
  if (!place(0)) return std::nullopt;
  return orders;
}

bool is_realizable(const ArcClass& c) { return find_embedding_order(c).has_value(); }

std::vector<ArcClass> enumerate_arcs_between(const SurfaceSpec& s, Puncture from, Puncture to, int max_len) {
  if (max_len < 0) throw std::invalid_argument("max_len must be non-negative");
  if (!s.valid_puncture(from) || !s.valid_puncture(to) || from == to) throw std::invalid_argument("bad endpoints");
  std::vector<ArcClass> out;
  std::vector<int> seq;
  std::function<void()> rec = [&]() {
    if (seq.empty() || !s.adjacent(seq.back(), to)) {
      for (Side side : {Side::Upper, Side::Lower}) {
        if (seq.empty() && side == Side::Lower && s.neighbors(from, to)) continue;
        ArcClass c;
        c.n = s.n();
        c.side = side;
        c.seq = seq;
        c.from = from;
        c.to = to;
        if (is_realizable(c)) out.push_back(c);
      }
    }
    if (static_cast<int>(seq.size()) == max_len) return;
    for (int g = 0; g < s.n(); ++g) {
      if (seq.empty() && s.adjacent(g, from)) continue;
      if (!seq.empty() && seq.back() == g) continue;
      seq.push_back(g);
      rec();
      seq.pop_back();
    }
  };
  rec();
  std::sort(out.begin(), out.end(), enumeration_less);
  return out;
}

std::vector<ArcClass> enumerate_classes(const SurfaceSpec& s, int max_len) {
  return enumerate_arcs_between(s, Puncture::p(), Puncture::q(), max_len);
}

ArcClass forget_puncture(const ArcClass& c, Puncture which) {
  SurfaceSpec s = c.surface();
  if (which.is_p() || which.is_q()) throw std::domain_error("cannot forget p or q");
  if (!s.valid_puncture(which)) throw std::invalid_argument("puncture does not exist");
  if (which == c.from || which == c.to) throw std::domain_error("cannot forget an endpoint of the arc");
  const int u = which.pos;
  auto map_gap = [&](int g) { return g < u ? g : g - 1; };  // gaps u-1 and u merge
  auto map_pos = [&](Puncture x) { return Puncture{x.pos < u ? x.pos : x.pos - 1}; };
  std::vector<int> seq;
  seq.reserve(c.seq.size());
  for (int g : c.seq) seq.push_back(map_gap(g));
  return reduce_between(SurfaceSpec(s.n() - 1), map_pos(c.from), map_pos(c.to), c.side, std::move(seq));
}

GammaProfile gamma_profile(const ArcClass& c) {
  GammaProfile g;
  g.counts.assign(std::max(0, c.n - 3), 0);
  for (int x : c.seq)
    if (x >= 2 && x <= c.n - 2) ++g.counts[x - 2];
  return g;
}

ArcClass reversed(const ArcClass& c) {
  ArcClass r;
  r.n = c.n;
  r.from = c.to;
  r.to = c.from;
  r.side = c.arrival_side();
  r.seq.assign(c.seq.rbegin(), c.seq.rend());
  return reduce(r);
}

ArcClass reflect(const ArcClass& c) {
  const int n = c.n;
  auto mp = [n](Puncture x) { return Puncture{((1 - x.pos) % n + n) % n}; };
  ArcClass m;
  m.n = n;
  m.from = mp(c.from);
  m.to = mp(c.to);
  m.side = c.side;
  for (int g : c.seq) m.seq.push_back((n - g) % n);
  if (c.joins_p_q()) return reversed(m);  // m runs q -> p
  return reduce(m);
}

std::string to_string(const ArcClass& c) {
  std::ostringstream os;
  SurfaceSpec s = c.surface();
  if (!c.joins_p_q()) os << s.label(c.from) << "->" << s.label(c.to) << ' ';
  os << '(' << side_letter(c.side) << ", [";
  for (std::size_t i = 0; i < c.seq.size(); ++i) os << (i ? "," : "") << c.seq[i];
  os << "])";
  return os.str();
}

}  // namespace arcsys
