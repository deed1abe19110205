#pragma once

#include <compare>
#include <vector>

#include "arcsys/arc_class.hpp"

namespace arcsys {

struct StrandRef {
  int arc = 0;
  int point = 0;
  friend auto operator<=>(const StrandRef&, const StrandRef&) = default;
};

// Several arcs drawn in the two-disk chord model, recorded purely by the order
// of their crossing points inside each gap. Node 0 of an arc is its start
// puncture, nodes 1..m its crossing points and node m+1 its end puncture;
// chord j joins node j to node j+1 and lies on side chord_side(j).
class Configuration {
 public:
  Configuration() = default;
  Configuration(SurfaceSpec s, std::vector<ArcClass> arcs, std::vector<std::vector<StrandRef>> gaps);

  const SurfaceSpec& surface() const { return surface_; }
  const std::vector<ArcClass>& arcs() const { return arcs_; }
  const std::vector<std::vector<StrandRef>>& gaps() const { return gaps_; }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  int point_count(int arc) const { return static_cast<int>(arcs_[arc].seq.size()); }

  int rank(int arc, int point) const { return rank_[arc][point]; }
  long node_key(int arc, int node) const;
  bool chords_cross(int a, int ja, int b, int jb) const;
  int crossings(int a, int b) const;
  int total_crossings() const;
  std::vector<std::vector<int>> crossing_matrix() const;

  // Exchange the positions of two points lying in the same gap.
  void swap_points(StrandRef x, StrandRef y);

 private:
  void reindex();

  SurfaceSpec surface_;
  std::vector<ArcClass> arcs_;
  std::vector<std::vector<StrandRef>> gaps_;
  std::vector<std::vector<int>> rank_;
  long stride_ = 2;
};

// Every arc in its lexicographically least realizable order, arcs stacked by
// index inside each gap.
Configuration stacked_configuration(const SurfaceSpec& s, const std::vector<ArcClass>& arcs);

// Simultaneous minimal position: every pair of arcs meets minimally. The order
// inside each gap is read off from exact rational lifts of the arcs to the
// tessellation obtained by doubling the ideal polygon with vertices
// infinity, 0, 1, ..., n-2.
Configuration canonical_configuration(const SurfaceSpec& s, const std::vector<ArcClass>& arcs);

}  // namespace arcsys
