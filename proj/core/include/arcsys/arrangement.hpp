#pragma once

#include <optional>
#include <string>
#include <vector>

#include "arcsys/plane_map.hpp"
#include "arcsys/taut.hpp"

namespace arcsys {

struct Point2 {
  Rational x, y;
};

enum class RegionKind { Bigon, HalfBigon, Strip, Other };
std::string to_string(RegionKind k);

struct RegionReport {
  RegionKind kind = RegionKind::Other;
  std::vector<Puncture> boundary_punctures;  // puncture corners in boundary order
  std::vector<Puncture> interior_punctures;  // sorted by position
  std::vector<int> bounding_arcs;            // sorted, distinct
  int corners = 0;
};

struct ArcCrossing {
  int arc_a = 0, chord_a = 0;
  int arc_b = 0, chord_b = 0;
  Side side = Side::Upper;
  Point2 at;
};

enum class VertexKind { Puncture, CirclePoint, Crossing };

struct ArrangementVertex {
  VertexKind kind = VertexKind::Puncture;
  Puncture puncture;     // for Puncture
  StrandRef strand;      // for CirclePoint
  int crossing = -1;     // for Crossing, index into crossings()
  Point2 at;
};

// Arcs drawn in the two-disk model of the sphere, cut into a planar map.
// The full map contains the reference circle; the arc map keeps only the arc
// pieces, whose faces are the complementary regions of the arcs.
class Arrangement {
 public:
  const SurfaceSpec& surface() const { return surface_; }
  const std::vector<EmbeddedArc>& arcs() const { return arcs_; }
  const std::vector<ArcCrossing>& crossings() const { return crossings_; }
  const std::vector<ArrangementVertex>& vertices() const { return vertices_; }
  const PlaneMap& full_map() const { return full_; }
  const PlaneMap& arc_map() const { return arc_map_; }
  // Arc of a dart of the full map (-1 on the circle); arc map darts use the
  // same numbering restricted to arc pieces, see arc_dart_origin().
  int dart_arc(int full_dart) const { return dart_arc_[full_dart]; }
  int arc_dart_origin(int arc_map_dart) const { return arc_origin_[arc_map_dart]; }

  int crossing_count(int a, int b) const;
  std::vector<std::vector<int>> crossing_matrix() const;

  const std::vector<RegionReport>& regions() const { return regions_; }
  // Region (arc map face) left of each arc map dart.
  const std::vector<int>& region_of_dart() const { return region_of_dart_; }
  const std::vector<std::vector<int>>& region_walks() const { return region_walks_; }
  std::optional<int> region_of_puncture(Puncture u) const;

  int euler_characteristic() const { return full_.euler_characteristic(); }

  friend Arrangement build_arrangement(std::vector<EmbeddedArc> arcs);

 private:
  bool build_once(const std::vector<EmbeddedArc>& arcs);
  void classify_regions();

  SurfaceSpec surface_;
  std::vector<EmbeddedArc> arcs_;
  std::vector<ArcCrossing> crossings_;
  std::vector<ArrangementVertex> vertices_;
  PlaneMap full_;
  std::vector<int> dart_arc_;
  PlaneMap arc_map_;
  std::vector<int> arc_origin_;
  std::vector<int> full_face_region_;
  std::vector<RegionReport> regions_;
  std::vector<int> region_of_dart_;
  std::vector<std::vector<int>> region_walks_;
  std::vector<int> puncture_region_;
};

// Exact arrangement. Gap parameters are spread evenly and nudged when three
// chords would meet in a point; the point order in every gap is kept.
Arrangement build_arrangement(std::vector<EmbeddedArc> arcs);
Arrangement build_arrangement(const Configuration& cfg);

}  // namespace arcsys
