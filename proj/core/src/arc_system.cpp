#include "arcsys/arc_system.hpp"

#include <algorithm>
#include <stdexcept>

#include "arcsys/taut.hpp"

namespace arcsys {

int ArcSystem::max_crossing() const {
  int m = 0;
  for (const auto& row : matrix)
    for (int x : row) m = std::max(m, x);
  return m;
}

ArcSystem make_system(const SurfaceSpec& s, std::vector<ArcClass> classes, std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != classes.size()) throw std::invalid_argument("label count does not match");
  ArcSystem sys;
  sys.surface = s;
  for (const auto& c : classes)
    if (c.n != s.n()) throw std::invalid_argument("class " + to_string(c) + " lives on another surface");
  sys.classes = std::move(classes);
  sys.labels = std::move(labels);
  const int k = sys.size();
  sys.matrix.assign(k, std::vector<int>(k, 0));
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b) sys.matrix[a][b] = sys.matrix[b][a] = intersection_number(sys.classes[a], sys.classes[b]);
  return sys;
}

}  // namespace arcsys
