#pragma once

#include <cstddef>
#include <iosfwd>
#include <utility>
#include <vector>

#include "acausal/ratmat.hpp"

namespace acausal {

// Number of parties and common local alphabet size. Party 0 owns the
// most significant base-d digit of every joint index.
struct Scenario {
  int n = 1;  // parties, >= 1
  int d = 2;  // local alphabet size, >= 2

  Scenario() = default;
  Scenario(int parties, int alphabet);

  std::size_t joint_dim() const;  // d^n

  bool operator==(const Scenario&) const = default;
};

using JointIndex = std::size_t;

JointIndex joint_encode(const Scenario& sc, const std::vector<int>& digits);
std::vector<int> joint_decode(const Scenario& sc, JointIndex idx);

// A single party's deterministic operation: the total map i -> table[i].
struct DeterministicLocalOp {
  int d = 2;
  std::vector<int> table;

  bool operator==(const DeterministicLocalOp&) const = default;
};

// A joint deterministic environment: joint O-index -> joint I-index.
struct DeterministicFunction {
  Scenario scenario;
  std::vector<JointIndex> table;

  bool operator==(const DeterministicFunction&) const = default;
};

// Column-stochastic d x d matrix of one party's local operation.
struct LocalOperation {
  int d = 2;
  RatMatrix matrix;
};

// The environment: a d^n x d^n column-stochastic matrix, rows indexed by
// the joint I value, columns by the joint O value. The constructor
// validates non-negativity and exact column sums of 1.
struct EnvironmentProcess {
  Scenario scenario;
  RatMatrix matrix;

  EnvironmentProcess(Scenario sc, RatMatrix m);
};

// 0-1 column-stochastic matrix with a 1 at (f(i), i) for every column i.
LocalOperation det_local_matrix(const DeterministicLocalOp& op);

// The family {D_{i,j}} sending input i to j and every other input to 0,
// deduplicated; has exactly d(d-1)+1 members and suffices for all
// total-probability conditions.
std::vector<DeterministicLocalOp> sufficient_family(int d);

// All d^d deterministic local operations in lexicographic table order.
// Guarded by a cap (d <= 6): beyond that the family is astronomically
// large and the sufficient family should be used instead.
std::vector<DeterministicLocalOp> all_det_local_ops(int d);

// 0-1 stochastic matrix with matrix(f(o), o) = 1 for each joint column o.
EnvironmentProcess det_function_to_process(const DeterministicFunction& f);

// Process file format: line 1 = "n d", then d^n rows of d^n rationals,
// row i = joint I-index i; '#' starts a comment line. Bit-exact round-trip.
EnvironmentProcess read_process(std::istream& in);
// Same format but skips the stochasticity validation, for checking
// possibly-inconsistent candidates.
std::pair<Scenario, RatMatrix> read_candidate(std::istream& in);
std::pair<Scenario, RatMatrix> read_candidate_file(const std::string& path);
void write_process(std::ostream& out, const EnvironmentProcess& env);
EnvironmentProcess read_process_file(const std::string& path);

}  // namespace acausal
