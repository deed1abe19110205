#include "arcsys/regions.hpp"

#include <algorithm>
#include <stdexcept>

namespace arcsys {

std::string to_string(RConfiguration c) {
  switch (c) {
    case RConfiguration::DisjointStrip: return "disjoint-strip";
    case RConfiguration::OneCrossingHalfBigon: return "one-crossing-half-bigon";
    case RConfiguration::TwoCrossingBigon: return "two-crossing-bigon";
    case RConfiguration::TwoCrossingDoubleHalfBigon: return "two-crossing-double-half-bigon";
    case RConfiguration::NotRHomotopic: return "not-r-homotopic";
  }
  return "not-r-homotopic";
}

ComplementReport complement_regions(const std::vector<ArcClass>& system) {
  if (system.empty()) throw std::invalid_argument("empty system");
  for (std::size_t a = 0; a < system.size(); ++a)
    for (std::size_t b = a + 1; b < system.size(); ++b)
      if (is_homotopic(system[a], system[b])) throw std::invalid_argument("system contains homotopic arcs");
  Configuration cfg = minimal_position(system);
  Arrangement arr = build_arrangement(cfg);
  ComplementReport rep;
  rep.regions = arr.regions();
  rep.crossings = arr.crossing_matrix();
  for (const auto& r : rep.regions) {
    if (r.kind != RegionKind::HalfBigon && r.kind != RegionKind::Strip) continue;
    if (std::find(r.boundary_punctures.begin(), r.boundary_punctures.end(), Puncture::p()) == r.boundary_punctures.end())
      continue;
    rep.p_isolated.insert(rep.p_isolated.end(), r.interior_punctures.begin(), r.interior_punctures.end());
  }
  std::sort(rep.p_isolated.begin(), rep.p_isolated.end());
  rep.p_isolated.erase(std::unique(rep.p_isolated.begin(), rep.p_isolated.end()), rep.p_isolated.end());
  return rep;
}

RConfigurationReport r_homotopic_report(const ArcClass& c1, const ArcClass& c2, Puncture r) {
  if (c1.n != c2.n) throw std::invalid_argument("classes live on different surfaces");
  if (r.is_p() || r.is_q()) throw std::domain_error("r must differ from p and q");
  if (!c1.surface().valid_puncture(r)) throw std::invalid_argument("puncture does not exist");
  if (is_homotopic(c1, c2)) throw std::invalid_argument("the two classes are equal");
  RConfigurationReport rep;
  Configuration cfg = minimal_position({c1, c2});
  rep.crossings = cfg.crossings(0, 1);
  if (rep.crossings > 2) throw std::domain_error("classes cross more than twice");
  Arrangement arr = build_arrangement(cfg);
  if (auto reg = arr.region_of_puncture(r)) rep.region_of_r = arr.regions()[*reg];
  if (forget_puncture(c1, r) != forget_puncture(c2, r)) {
    rep.kind = RConfiguration::NotRHomotopic;
  } else if (rep.crossings == 0) {
    rep.kind = RConfiguration::DisjointStrip;
  } else if (rep.crossings == 1) {
    rep.kind = RConfiguration::OneCrossingHalfBigon;
  } else {
    rep.kind = rep.region_of_r.kind == RegionKind::Bigon ? RConfiguration::TwoCrossingBigon
                                                         : RConfiguration::TwoCrossingDoubleHalfBigon;
  }
  return rep;
}

RConfiguration r_homotopic_configuration(const ArcClass& c1, const ArcClass& c2, Puncture r) {
  return r_homotopic_report(c1, c2, r).kind;
}

bool is_homotopic_geometric(const ArcClass& c1, const ArcClass& c2) {
  if (c1.n != c2.n) throw std::invalid_argument("classes live on different surfaces");
  // An empty sequence is drawn as given, so both placements of the crossing-free arc can be compared.
  auto rep = [](const ArcClass& c) {
    if (c.seq.empty()) return EmbeddedArc{c, {}};
    return embed(reduce(c));
  };
  TightenResult t = tighten(rep(c1), rep(c2));
  if (t.crossings != 0) return false;
  Arrangement arr = build_arrangement({t.a, t.b});
  for (const auto& r : arr.regions()) {
    if (r.bounding_arcs.size() != 2 || !r.interior_punctures.empty()) continue;
    auto bp = r.boundary_punctures;
    std::sort(bp.begin(), bp.end());
    if (bp == std::vector<Puncture>{Puncture::q(), Puncture::p()}) return true;
  }
  return false;
}

}  // namespace arcsys
