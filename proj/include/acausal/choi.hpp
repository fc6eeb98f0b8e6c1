#pragma once

#include <iosfwd>
#include <vector>

#include "acausal/scenario.hpp"

namespace acausal {

// Diagonal (classical-limit) process matrix. Only the diagonal is stored,
// as a table over (k: joint outgoing basis index, m: joint incoming basis
// index); the off-diagonal part is identically zero.
struct DiagonalProcessMatrix {
  Scenario scenario{1, 2};
  // diag[k * d^n + m]
  RatVector diag;

  const Rat& at(std::size_t k, std::size_t m) const {
    return diag[k * scenario.joint_dim() + m];
  }
  // Entries >= 0 and, for every k, sum over m equals 1.
  void validate() const;
};

// Diagonal local map of one party: the stochastic matrix viewed on the
// diagonal, indexed (m': outgoing basis, k': incoming basis).
struct DiagonalLocalMap {
  int d = 2;
  // diag[mp * d + kp]
  RatVector diag;

  const Rat& at(int mp, int kp) const {
    return diag[std::size_t(mp) * d + kp];
  }
  void validate() const;
};

// diag[k, m] = E(m, k): the process-matrix row/column order transposes
// the environment's (incoming, outgoing) convention.
DiagonalProcessMatrix env_to_process_matrix(const EnvironmentProcess& env);
EnvironmentProcess process_matrix_to_env(const DiagonalProcessMatrix& w);

DiagonalLocalMap local_to_diagonal_map(const LocalOperation& op);

// Tr(W (A_0 tensor ... tensor A_{n-1})) for diagonal factors: the sum over
// basis pairs of the W entry times the product of per-party map entries.
Rat pairing_trace(const DiagonalProcessMatrix& w,
                  const std::vector<DiagonalLocalMap>& a);

// `(k, m, value)` triples of the nonzero entries, k-major, one per line.
void write_triples(std::ostream& out, const DiagonalProcessMatrix& w);
DiagonalProcessMatrix read_triples(std::istream& in, const Scenario& sc);

}  // namespace acausal
