#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "arcsys/plane_map.hpp"

namespace arcsys {

// Square annular diagram stored as a map on the sphere whose two marked
// faces are the holes. boundary[i] is a dart with boundary face i on its left.
struct AnnularDiagram {
  PlaneMap map;
  std::array<int, 2> boundary{-1, -1};
};

struct DiagramFaces {
  std::vector<int> face_of;
  std::vector<std::vector<int>> faces;
  std::array<int, 2> boundary_face{-1, -1};
  std::vector<int> squares;  // face indices of the non-boundary faces
};

DiagramFaces diagram_faces(const AnnularDiagram& d);
bool validate(const AnnularDiagram& d, std::string* why = nullptr);
int square_count(const AnnularDiagram& d);
bool is_cycle(const AnnularDiagram& d);

inline int edge_id(const PlaneMap& m, int dart) { return std::min(dart, m.opposite[dart]); }

// A dual curve enters faces through the darts listed in `darts`: darts[0]
// has the starting face on its right, and each following dart is the exit of
// the square that the previous one entered.
struct DualCurve {
  int start_boundary = -1;  // 0, 1, or -1 for closed curves
  int end_boundary = -1;
  std::vector<int> darts;
  std::vector<int> squares;  // face indices, in order
  bool simple = true;
};

struct DualCurveReport {
  std::vector<DualCurve> curves;
  std::vector<int> curve_of_edge;  // indexed by edge id (smaller dart)
  std::vector<std::vector<int>> crossings;
  bool all_join_boundaries = true;
  std::string problem;
};

DualCurveReport trace_dual_curves(const AnnularDiagram& d);
bool is_k_system_diagram(const AnnularDiagram& d, int k, DualCurveReport* out = nullptr);

// Pairwise crossing counts keyed by the boundary edge each curve starts from,
// which hexagon moves leave untouched.
std::vector<std::pair<std::pair<int, int>, int>> keyed_crossings(const AnnularDiagram& d);

// Hexagon moves are located by the interior degree-3 vertex at their center.
std::vector<int> hexagon_loci(const AnnularDiagram& d);
AnnularDiagram hexagon_move(const AnnularDiagram& d, int center);

std::vector<int> boundary_vertices(const AnnularDiagram& d, int which);
std::vector<int> find_corners(const AnnularDiagram& d, int which);
std::optional<int> find_corner(const AnnularDiagram& d, int which);
AnnularDiagram remove_corner(const AnnularDiagram& d, int v);

struct Cornsquare {
  int square = -1;    // face index
  int first = -1;     // dart of the boundary walk arriving at the shared vertex
  int second = -1;    // next dart of the boundary walk
  int vertex = -1;    // shared vertex of the outer path
};

std::vector<Cornsquare> find_cornsquares(const AnnularDiagram& d, int which);
std::optional<Cornsquare> find_cornsquare(const AnnularDiagram& d, int which);
// Winding number around the annulus of the test loop of a square whose dual
// curves reach the consecutive boundary darts `first`, `second`; nullopt when
// they do not.
std::optional<int> test_loop_winding(const AnnularDiagram& d, int square, int first, int second);

struct CornerSearch {
  bool found = false;
  std::vector<int> moves;  // hexagon centers, applied in order
  int corner = -1;
  AnnularDiagram result;
  int explored = 0;
};

// Breadth-first search over hexagon moves for a diagram with a corner on the
// given boundary path, or at `target` when given.
CornerSearch reduce_to_corner(const AnnularDiagram& d, int which, std::optional<int> target = std::nullopt, int cap = 20000);

// Code that is equal for isomorphic diagrams. With `rooted`, only the marked
// dart of boundary 0 is used as root.
std::vector<int> canonical_code(const AnnularDiagram& d, bool rooted = false);

AnnularDiagram make_cycle(int m);

// Dual of a sphere map whose vertices vp, vq become the two holes; vertices
// of degree 2 other than vp, vq are smoothed away first.
AnnularDiagram dual_of_map(const PlaneMap& m, int vp, int vq);

}  // namespace arcsys
