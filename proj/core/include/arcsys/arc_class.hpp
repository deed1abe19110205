#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "arcsys/surface.hpp"

namespace arcsys {

// Homotopy class of a simple arc, stored as the side it departs into and the
// ordered gaps it crosses. Arcs run p -> q unless other endpoints are given;
// general endpoints are used for auxiliary arcs around a forgotten puncture.
struct ArcClass {
  int n = 2;
  Side side = Side::Upper;
  std::vector<int> seq;
  Puncture from = Puncture::p();
  Puncture to = Puncture::q();

  SurfaceSpec surface() const { return SurfaceSpec(n); }
  Side arrival_side() const { return seq.size() % 2 == 0 ? side : flip(side); }
  bool joins_p_q() const { return from == Puncture::p() && to == Puncture::q(); }
  // Side of the chord leaving crossing point `point` (chord index point + 1).
  Side chord_side(int chord) const { return chord % 2 == 0 ? side : flip(side); }

  friend auto operator<=>(const ArcClass&, const ArcClass&) = default;
};

// Order used by enumeration: Upper before Lower, then the gap sequence.
bool enumeration_less(const ArcClass& a, const ArcClass& b);

struct GammaProfile {
  std::vector<int> counts;
  friend bool operator==(const GammaProfile&, const GammaProfile&) = default;
};

ArcClass reduce(const SurfaceSpec& s, Side side, std::vector<int> seq);
ArcClass reduce(const ArcClass& c);
ArcClass reduce_between(const SurfaceSpec& s, Puncture from, Puncture to, Side side, std::vector<int> seq);
bool is_reduced(const ArcClass& c);

// Per-gap orders of the arc's own crossing points: orders[g] lists point
// indices in increasing position along gap g.
using GapOrders = std::vector<std::vector<int>>;

std::optional<GapOrders> find_embedding_order(const ArcClass& c);
bool is_realizable(const ArcClass& c);

// Realizable reduced classes from p to q crossing at most max_len gaps,
// sorted by enumeration_less.
std::vector<ArcClass> enumerate_classes(const SurfaceSpec& s, int max_len);
std::vector<ArcClass> enumerate_arcs_between(const SurfaceSpec& s, Puncture from, Puncture to, int max_len);

ArcClass forget_puncture(const ArcClass& c, Puncture which);
GammaProfile gamma_profile(const ArcClass& c);

// The relabeling that reverses the cyclic puncture order and swaps p with q,
// read back as an arc from p to q.
ArcClass reflect(const ArcClass& c);

// Same arc traversed backwards.
ArcClass reversed(const ArcClass& c);

std::string to_string(const ArcClass& c);

}  // namespace arcsys
