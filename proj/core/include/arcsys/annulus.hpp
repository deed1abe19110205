#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcsys/annular.hpp"
#include "arcsys/arrangement.hpp"

namespace arcsys {

// Arc i of a taut annulus system leaves the inner boundary at slot i and
// reaches the outer boundary at slot top[i] after winding[i] extra turns.
struct AnnulusArcSpec {
  std::vector<int> top;
  std::vector<int> winding;

  int size() const { return static_cast<int>(top.size()); }
};

std::string to_string(const AnnulusArcSpec& s);
// Pairwise crossing counts of the straight representatives.
std::vector<std::vector<int>> annulus_crossings(const AnnulusArcSpec& s);
// Arc map of the straight representatives with the inner boundary collapsed
// to vertex 0 and the outer one to vertex 1.
PlaneMap annulus_arc_map(const AnnulusArcSpec& s);
AnnularDiagram annulus_diagram(const AnnulusArcSpec& s);

// Dual of the complement of arcs from p to q; boundary 0 is the link of p.
// Throws std::domain_error when a pair crosses more than max_crossing times.
AnnularDiagram dual_diagram(const Arrangement& arr, int max_crossing = 1);

struct TautEnumerated {
  AnnulusArcSpec spec;
  AnnularDiagram diagram;
  int max_crossing = 0;
};

// Specs with top[0] = 0 and winding[0] = 0, arcs 1..m_max, |winding| <= w_max,
// pairwise crossings <= k; one representative per isomorphism class.
std::vector<TautEnumerated> enumerate_taut_annulus_diagrams(int m_max, int w_max, int k = 1);

struct TwoSystemWitness {
  std::string source;
  std::optional<AnnulusArcSpec> spec;  // for taut annulus witnesses
  std::vector<ArcClass> classes;       // for punctured sphere witnesses
  AnnularDiagram diagram;
  int path = -1;  // boundary path without a corner
};

// Smallest subsets (up to max_arcs classes, n punctures, words up to
// max_len) of pairwise non-homotopic arcs in minimal position whose dual is a
// 2-system diagram with squares and no corner on some boundary path.
std::optional<TwoSystemWitness> sphere_two_system_witness(int n, int max_len, int max_arcs);

struct CornerTheoremReport {
  int specs_examined = 0;
  int diagrams = 0;
  int with_squares = 0;
  int cycles = 0;
  int invalid = 0;
  // Duals of 1-systems of small punctured spheres, checked the same way.
  int sphere_diagrams = 0;
  int sphere_with_squares = 0;
  std::vector<std::string> violations;
  int cornsquare_checks = 0;
  // reduce_to_corner on both paths of every diagram with squares.
  int reductions = 0;
  std::vector<std::string> reduction_failures;
  // Corner production aimed at the outerpath vertex of each cornsquare.
  // Informational: the move can be blocked when the hexagon wraps around
  // the annulus.
  int targeted_attempts = 0;
  int targeted_reached = 0;
  int targeted_with_moves = 0;
  std::vector<std::string> targeted_unreached;
  std::optional<TwoSystemWitness> two_system_witness;

  bool ok() const { return violations.empty() && reduction_failures.empty() && invalid == 0; }
};

CornerTheoremReport verify_corner_theorem(int m_max, int w_max, int reduce_cap = 20000);

}  // namespace arcsys
