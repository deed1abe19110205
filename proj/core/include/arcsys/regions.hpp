#pragma once

#include <string>
#include <vector>

#include "arcsys/arrangement.hpp"

namespace arcsys {

struct ComplementReport {
  std::vector<RegionReport> regions;
  std::vector<Puncture> p_isolated;  // sorted by position
  std::vector<std::vector<int>> crossings;
};

// Regions of the complement of a system drawn in minimal position.
ComplementReport complement_regions(const std::vector<ArcClass>& system);

enum class RConfiguration { DisjointStrip, OneCrossingHalfBigon, TwoCrossingBigon, TwoCrossingDoubleHalfBigon, NotRHomotopic };
std::string to_string(RConfiguration c);

struct RConfigurationReport {
  RConfiguration kind = RConfiguration::NotRHomotopic;
  int crossings = 0;
  // The region of the pair's complement that contains r.
  RegionReport region_of_r;
};

RConfigurationReport r_homotopic_report(const ArcClass& c1, const ArcClass& c2, Puncture r);
RConfiguration r_homotopic_configuration(const ArcClass& c1, const ArcClass& c2, Puncture r);

// Geometric homotopy test: minimal position is disjoint and the two arcs
// cobound a strip with no puncture other than p and q.
bool is_homotopic_geometric(const ArcClass& c1, const ArcClass& c2);

}  // namespace arcsys
