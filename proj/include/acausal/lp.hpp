#pragma once

#include <utility>
#include <vector>

#include "acausal/games.hpp"
#include "acausal/polytope.hpp"

namespace acausal {

// Maximize <objective, x> over an H-polytope given by equality rows plus
// non-negativity of every coordinate.
struct LinearProgram {
  RatVector objective;
  HPolytope polytope;

  void validate() const;
};

// The success probability of `game` played through an arbitrary
// environment is linear in vec(E) once the programs are fixed; this
// returns the coefficient vector c with p_succ(E) = <c, vectorize(E)>.
RatVector game_objective(const Game& game,
                         const std::vector<PartyProgram>& programs);

// Exact primal simplex (phase 1 with artificial variables; Dantzig
// pivoting switching to Bland's rule for guaranteed termination).
// The argmax is a basic feasible solution, i.e. a polytope vertex.
std::pair<Rat, Vertex> maximize(const LinearProgram& lp);

}  // namespace acausal
