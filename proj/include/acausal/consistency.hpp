#pragma once

#include <optional>
#include <vector>

#include "acausal/scenario.hpp"

namespace acausal {

enum class CheckMode { kSufficientFamily, kAllOps };

// Outcome of a consistency check. When a total-probability condition is
// violated, carries the first violating tuple of local operations and the
// trace value observed for it.
struct ConsistencyVerdict {
  bool consistent = true;

  struct TraceWitness {
    std::vector<DeterministicLocalOp> ops;
    Rat trace;
  };
  std::optional<TraceWitness> trace_witness;

  struct NegativeEntryWitness {
    std::size_t row = 0;
    std::size_t col = 0;
    Rat value;
  };
  std::optional<NegativeEntryWitness> negative_witness;
};

// Checks Tr(E (D_0 x ... x D_{n-1})) = 1 for every n-tuple over `family`.
ConsistencyVerdict check_total_probability(
    const EnvironmentProcess& env,
    const std::vector<DeterministicLocalOp>& family);

ConsistencyVerdict check_nonnegativity(const RatMatrix& candidate);

// Conjunction of entrywise non-negativity and the total-probability
// conditions. kSufficientFamily uses the d(d-1)+1 member family (provably
// equivalent to kAllOps at exponential savings).
ConsistencyVerdict is_consistent(const EnvironmentProcess& env,
                                 CheckMode mode = CheckMode::kSufficientFamily);

// Number of joint values i with i = g(f_0(i_0),...,f_{n-1}(i_{n-1})).
// Equals the trace condition specialized to 0-1 matrices: 0 fixed points
// is a grandfather paradox, 2+ a causal loop.
std::size_t fixed_point_count(const DeterministicFunction& g,
                              const std::vector<DeterministicLocalOp>& ops);

// True iff every op-tuple from the chosen family yields exactly one
// fixed point. Integer-only inner loop; equivalent to is_consistent on
// det_function_to_process(g).
bool is_consistent_deterministic(
    const DeterministicFunction& g,
    CheckMode mode = CheckMode::kSufficientFamily);

}  // namespace acausal
