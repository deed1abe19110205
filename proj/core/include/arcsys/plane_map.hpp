#pragma once

#include <vector>

namespace arcsys {

// Oriented combinatorial map: every edge is a pair of opposite darts, `next`
// gives the counterclockwise successor of a dart around its tail vertex.
struct PlaneMap {
  std::vector<int> vertex;
  std::vector<int> opposite;
  std::vector<int> next;
  int vertex_count = 0;

  int dart_count() const { return static_cast<int>(vertex.size()); }
  int head(int d) const { return vertex[opposite[d]]; }
  int prev(int d) const;
  // Successor of d along the boundary of the face to its left.
  int face_next(int d) const { return prev(opposite[d]); }

  // face_of[d] and the faces as dart cycles in traversal order.
  std::vector<std::vector<int>> faces(std::vector<int>* face_of = nullptr) const;
  std::vector<std::vector<int>> rotations() const;
  bool connected() const;
  int euler_characteristic() const;
  // Throws std::invalid_argument when the arrays do not form a map.
  void check() const;
};

}  // namespace arcsys
