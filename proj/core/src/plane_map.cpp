#include "arcsys/plane_map.hpp"

#include <stdexcept>

namespace arcsys {

int PlaneMap::prev(int d) const {
  int e = d;
  while (next[e] != d) e = next[e];
  return e;
}

std::vector<std::vector<int>> PlaneMap::faces(std::vector<int>* face_of) const {
  const int n = dart_count();
  std::vector<int> inv(n);
  for (int d = 0; d < n; ++d) inv[next[d]] = d;
  std::vector<int> fo(n, -1);
  std::vector<std::vector<int>> out;
  for (int d = 0; d < n; ++d) {
    if (fo[d] != -1) continue;
    std::vector<int> cyc;
    int e = d;
    do {
      fo[e] = static_cast<int>(out.size());
      cyc.push_back(e);
      e = inv[opposite[e]];
    } while (e != d);
    out.push_back(std::move(cyc));
  }
  if (face_of) *face_of = std::move(fo);
  return out;
}

std::vector<std::vector<int>> PlaneMap::rotations() const {
  std::vector<std::vector<int>> out(vertex_count);
  std::vector<char> seen(dart_count(), 0);
  for (int d = 0; d < dart_count(); ++d) {
    if (seen[d]) continue;
    int e = d;
    do {
      seen[e] = 1;
      out[vertex[d]].push_back(e);
      e = next[e];
    } while (e != d);
  }
  return out;
}

bool PlaneMap::connected() const {
  if (vertex_count == 0) return true;
  std::vector<std::vector<int>> adj(vertex_count);
  for (int d = 0; d < dart_count(); ++d) adj[vertex[d]].push_back(head(d));
  std::vector<char> seen(vertex_count, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == vertex_count;
}

int PlaneMap::euler_characteristic() const {
  int isolated = 0;
  std::vector<char> has(vertex_count, 0);
  for (int v : vertex) has[v] = 1;
  for (char h : has) isolated += !h;
  // An isolated vertex contributes a vertex and a face of its own.
  return vertex_count - dart_count() / 2 + static_cast<int>(faces().size()) + isolated;
}

void PlaneMap::check() const {
  const int n = dart_count();
  if (static_cast<int>(opposite.size()) != n || static_cast<int>(next.size()) != n)
    throw std::invalid_argument("map arrays have different lengths");
  std::vector<int> hits(n, 0);
  for (int d = 0; d < n; ++d) {
    if (vertex[d] < 0 || vertex[d] >= vertex_count) throw std::invalid_argument("dart vertex out of range");
    if (opposite[d] < 0 || opposite[d] >= n || opposite[d] == d || opposite[opposite[d]] != d)
      throw std::invalid_argument("opposite is not a fixed-point-free involution");
    if (next[d] < 0 || next[d] >= n) throw std::invalid_argument("next out of range");
    if (vertex[next[d]] != vertex[d]) throw std::invalid_argument("next leaves its vertex");
    ++hits[next[d]];
  }
  for (int h : hits)
    if (h != 1) throw std::invalid_argument("next is not a permutation");
  std::vector<int> owner(vertex_count, -1);
  std::vector<char> seen(n, 0);
  for (int d = 0; d < n; ++d) {
    if (seen[d]) continue;
    if (owner[vertex[d]] != -1) throw std::invalid_argument("vertex has two rotation cycles");
    owner[vertex[d]] = d;
    int e = d;
    do {
      seen[e] = 1;
      e = next[e];
    } while (e != d);
  }
}

}  // namespace arcsys
