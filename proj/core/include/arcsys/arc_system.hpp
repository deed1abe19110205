#pragma once

#include <string>
#include <vector>

#include "arcsys/arc_class.hpp"

namespace arcsys {

// A finite set of classes with their pairwise intersection numbers.
struct ArcSystem {
  SurfaceSpec surface;
  std::vector<ArcClass> classes;
  std::vector<std::string> labels;  // optional, parallel to classes
  std::vector<std::vector<int>> matrix;

  int size() const { return static_cast<int>(classes.size()); }
  int max_crossing() const;
};

ArcSystem make_system(const SurfaceSpec& s, std::vector<ArcClass> classes, std::vector<std::string> labels = {});

}  // namespace arcsys
