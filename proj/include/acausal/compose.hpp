#pragma once

#include <functional>
#include <vector>

#include "acausal/scenario.hpp"

namespace acausal {

// One party's full stochastic program: the conditional distribution
// P(X, O | A, I) with exact rational entries. The environment alphabet
// is d; the setting alphabet A and the guess alphabet X may differ.
struct PartyProgram {
  int d = 2;
  int a_size = 2;
  int x_size = 2;
  // kernel[((x * d + o) * a_size + a) * d + i]
  std::vector<Rat> kernel;

  const Rat& at(int x, int o, int a, int i) const {
    return kernel[std::size_t(((x * d + o) * a_size + a) * d + i)];
  }
  Rat& at(int x, int o, int a, int i) {
    return kernel[std::size_t(((x * d + o) * a_size + a) * d + i)];
  }

  static PartyProgram zeroed(int d, int a_size, int x_size);
  // Deterministic program from a map (a, i) -> (x, o).
  static PartyProgram deterministic(
      int d, int a_size, int x_size,
      const std::function<std::pair<int, int>(int, int)>& map);
  // Validates non-negativity and exact normalization per (a, i).
  void validate() const;
};

// P(x, i, o | a) for a fixed joint setting. The table is flat over
// (joint x, joint i, joint o); the joint x index is mixed-radix over the
// per-party x alphabets, most significant party first.
struct JointDistribution {
  int n = 1;
  int d = 2;
  std::vector<int> x_sizes;
  std::vector<Rat> table;

  std::size_t x_dim() const;
  std::size_t env_dim() const;
  const Rat& at(std::size_t x, std::size_t i, std::size_t o) const {
    return table[(x * env_dim() + i) * env_dim() + o];
  }
};

// E(o, i) * prod_j kernel_j(x_j, o_j | a_j, i_j), with the normalization
// verified exactly before returning; a failing total surfaces the
// environment's inconsistency as an InconsistencyError carrying the sum.
JointDistribution joint_distribution(const EnvironmentProcess& env,
                                     const std::vector<PartyProgram>& programs,
                                     const std::vector<int>& settings);

// Exact marginalization. `keep` has 3n flags ordered
// (x_0..x_{n-1}, i_0..i_{n-1}, o_0..o_{n-1}); kept variables index the
// result mixed-radix in that order.
struct MarginalTable {
  std::vector<int> sizes;
  std::vector<Rat> values;
};
MarginalTable marginal(const JointDistribution& dist,
                       const std::vector<bool>& keep);

}  // namespace acausal
