#pragma once

#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "acausal/scenario.hpp"

namespace acausal {

// Per-party bit-flip pattern (binary scenarios only).
struct FlipPattern {
  std::vector<int> bits;  // length n, each 0 or 1
};

// Directed signaling structure of a deterministic environment: an edge
// k -> j means party j's received value depends on party k's fed value.
struct SignalingDigraph {
  int n = 0;
  std::set<std::pair<int, int>> edges;
  std::set<int> constant_receivers;  // parties with indegree 0
};

// Census over the canonical (fixed-point-0) representatives, keyed by
// the taxonomy class letters a..g.
struct TaxonomyReport {
  std::map<char, std::size_t> class_counts;
  std::size_t canonical_count = 0;
  std::size_t orbit_count = 0;
};

// g'(o) = l XOR g(l XOR o), componentwise; the conjugation E' = L E L.
DeterministicFunction conjugate_by_flips(const DeterministicFunction& g,
                                         const FlipPattern& l);

// The unique i with g(i) = i; errors if the count differs from one.
JointIndex canonical_fixed_point(const DeterministicFunction& g);

struct OrbitDecomposition {
  std::vector<std::vector<DeterministicFunction>> orbits;
  std::vector<DeterministicFunction> canonical;  // one per orbit, fixes 0
};

// Partitions a conjugation-closed set into orbits under all 2^n flip
// patterns. For the 3-party census every orbit must have size 2^n.
OrbitDecomposition orbit_decompose(
    const std::vector<DeterministicFunction>& gs);

SignalingDigraph signaling_digraph(const DeterministicFunction& g);

// Classifies a single canonical 3-party function into one of the seven
// classes a..g by its constant-receiver count and digraph shape.
char taxonomy_class(const DeterministicFunction& g);

TaxonomyReport taxonomy_census(
    const std::vector<DeterministicFunction>& canonical);

// Key-value report: class label -> count, orbit count, total.
std::string format_census(const TaxonomyReport& report);

}  // namespace acausal
