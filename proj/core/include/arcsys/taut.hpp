#pragma once

#include <gmpxx.h>

#include <vector>

#include "arcsys/arc_class.hpp"
#include "arcsys/configuration.hpp"

namespace arcsys {

using Rational = mpq_class;

// A drawn arc: crossing point i sits at circle parameter params[i], strictly
// inside gap seq[i] (the gap g occupies parameters (g, g + 1)).
struct EmbeddedArc {
  ArcClass cls;
  std::vector<Rational> params;

  int chord_count() const { return static_cast<int>(cls.seq.size()) + 1; }
  // Circle parameter of node k (0 = start puncture, last = end puncture).
  Rational node_param(int node) const;
  Side chord_side(int j) const { return cls.chord_side(j); }
};

EmbeddedArc embed(const ArcClass& c);

// Parameters g + (rank + 1) / (count + 1) for every arc of a configuration.
std::vector<EmbeddedArc> embed_configuration(const Configuration& cfg);
// Orders points by parameter; equal parameters are broken by arc index.
Configuration configuration_of(const std::vector<EmbeddedArc>& arcs);

struct TightenResult {
  EmbeddedArc a;
  EmbeddedArc b;
  int crossings = 0;
  // Crossing count before the first step and after every removal step.
  std::vector<int> trace;
};

TightenResult tighten(const EmbeddedArc& a, const EmbeddedArc& b);

// Removes empty bigons and half-bigons between pairs of arcs until none is
// left; each accepted step lowers one pairwise count and raises none.
// Returns the number of removal steps.
int tighten_pairs(Configuration& cfg, std::vector<int>* trace = nullptr);

int intersection_number(const ArcClass& c1, const ArcClass& c2);
bool is_homotopic(const ArcClass& c1, const ArcClass& c2);

// Representatives of several classes in simultaneous minimal position:
// the canonical order followed by pairwise tightening passes.
Configuration minimal_position(const std::vector<ArcClass>& arcs);

}  // namespace arcsys
