#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "acausal/scenario.hpp"

namespace acausal {

// H-representation of the process polytope: one equality row per n-tuple
// over the sufficient family, paired against the vectorized environment
// x[o * d^n + i] = E(i, o), plus d^{2n} implicit bounds x >= 0.
struct HPolytope {
  Scenario scenario;
  RatMatrix eq_lhs;   // (d(d-1)+1)^n rows, d^{2n} columns
  RatVector eq_rhs;   // all ones
  std::size_t nonneg_count = 0;  // d^{2n}
};

struct Vertex {
  RatVector point;            // length d^{2n}, column-major by joint O then I
  bool deterministic = false;  // true iff every coordinate is 0 or 1
};

struct EnumOptions {
  std::optional<double> budget_seconds;
  int threads = 0;  // 0 = hardware concurrency
  // Cap on the deterministic search space (d^n)^(d^n).
  std::size_t det_search_cap = std::size_t(1) << 27;
};

HPolytope build_hrep(const Scenario& sc);

// d^{2n} - rank(eq_lhs); hard-fails if the rank disagrees with the
// closed formula (d(d-1)+1)^n.
std::size_t polytope_dimension(const HPolytope& p);

// Complete duplicate-free vertex set of {x >= 0, eq_lhs x = 1} via the
// double description method on the affine subspace of the equalities.
// Output is sorted lexicographically. Throws BudgetExceededError without
// emitting a partial list when the time budget runs out.
std::vector<Vertex> enumerate_vertices_dd(const HPolytope& p,
                                          const EnumOptions& opts = {});

// All deterministic functions g that are logically consistent, in
// ascending order of the base-d^n table counter. These are exactly the
// 0-1 vertices of the polytope.
std::vector<DeterministicFunction> enumerate_deterministic_vertices(
    const Scenario& sc, const EnumOptions& opts = {});

RatVector vectorize(const EnvironmentProcess& env);
EnvironmentProcess devectorize(const Scenario& sc, const RatVector& point);

bool contains(const HPolytope& p, const RatVector& point);

// True iff the tight constraints at `point` (all equalities plus the
// non-negativity facets it sits on) have full rank d^{2n}. Requires
// contains(p, point).
bool is_vertex(const HPolytope& p, const RatVector& point);

// cdd polyhedra text formats, equalities listed first.
void write_cdd_hrep(std::ostream& out, const HPolytope& p);
void write_cdd_vrep(std::ostream& out, const std::vector<Vertex>& vs);

// Native vertex list: one vertex per line, '#' comments carrying the
// deterministic flag.
void write_vertices(std::ostream& out, const std::vector<Vertex>& vs);

}  // namespace acausal
