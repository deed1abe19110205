#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "arcsys/arc_system.hpp"

namespace arcsys {

struct KSystemCertificate {
  bool ok = true;
  int a = -1, b = -1;  // offending classes; b = -1 when a single class is bad
  int crossings = 0;
  std::string reason;
};

KSystemCertificate verify_k_system(const ArcSystem& sys, int k);

struct CliqueResult {
  std::vector<int> members;  // sorted
  std::int64_t nodes = 0;
};

// Exact maximum clique by branch and bound with a greedy coloring bound.
// `incumbent` must be a clique; it is returned when nothing larger exists.
CliqueResult maximum_clique(const std::vector<std::vector<char>>& adj, const std::vector<int>& incumbent = {});

struct SearchReport {
  int n = 0, k = 0, max_len = 0;
  int candidates = 0;
  std::vector<ArcClass> witness;
  std::int64_t nodes = 0;
};

// Largest k-system among the classes crossing at most max_len gaps.
SearchReport search_max(int n, int k, int max_len, const std::vector<ArcClass>& seed = {});

// Largest set of chords between l points on a circle that pairwise cross;
// with shared_endpoints, chords with a common endpoint also count as meeting.
int erdos_max_crossing(int l, bool shared_endpoints = true);
std::vector<std::pair<int, int>> erdos_witness(int l, bool shared_endpoints = true);

// Arcs 0..arc_count-1 leave r; `order` lists them counterclockwise around r.
struct RelationInstance {
  int n = 3;
  int arc_count = 0;
  std::vector<int> order;
  std::vector<char> to_p;  // 1 for arcs ending at p, 0 for arcs ending at q
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::vector<int>> crossings;
};

struct RelationCertificate {
  bool condition_i = true;
  bool condition_ii = true;
  int size = 0;
  std::int64_t bound = 0;  // C(n-1, 2)
  bool within_bound = true;
  std::string violation;

  bool ok() const { return condition_i && condition_ii && within_bound; }
};

// Throws std::invalid_argument for malformed instances.
RelationCertificate check_relation_conditions(const RelationInstance& inst);

struct FiberReport {
  ArcClass image;
  std::vector<int> members;  // indices into the system
  int disjoint_pairs = 0;
  bool identity = true;  // members - 1 == disjoint_pairs
};

struct FiberAnalysis {
  Puncture r;
  int system_size = 0;
  int image_size = 0;
  std::vector<FiberReport> fibers;
  bool all_identity = true;
};

FiberAnalysis fiber_analysis(const ArcSystem& sys, Puncture r);

struct ExtensionResult {
  bool ok = false;
  ArcSystem system;
  std::vector<int> added;  // indices of the new classes in `system`
  FiberAnalysis analysis;
  int max_len = 0;
  std::string failure;
};

// Adds classes until every fiber of forgetting r satisfies the identity.
// max_len < 0 picks the longest word of the system plus two.
ExtensionResult extend_fibers(const ArcSystem& sys, Puncture r, int max_len = -1);

// Relation built from the disjoint pairs of the fibers: for each pair, the
// arcs from r to p and to q inside the strip the pair bounds.
RelationInstance relation_from_fibers(const ArcSystem& sys, Puncture r, int max_len = -1);

std::int64_t binomial(int n, int k);

}  // namespace arcsys
