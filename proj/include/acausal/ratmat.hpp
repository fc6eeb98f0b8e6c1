#pragma once

#include <cstddef>
#include <vector>

#include "acausal/rational.hpp"

namespace acausal {

using RatVector = std::vector<Rat>;

// Dense row-major matrix of exact rationals. Immutable use is intended:
// operations return fresh values and never mutate their arguments.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols) {}
  RatMatrix(std::size_t rows, std::size_t cols, std::vector<Rat> entries);

  static RatMatrix identity(std::size_t n);
  static RatMatrix zero(std::size_t n) { return RatMatrix(n, n); }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const Rat& operator()(std::size_t i, std::size_t j) const {
    return a_[i * cols_ + j];
  }
  Rat& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }

  const std::vector<Rat>& entries() const { return a_; }

  bool operator==(const RatMatrix& other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> a_;
};

// Exact matrix product; throws DimensionMismatchError naming both shapes.
RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);
inline RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  return mat_mul(a, b);
}

// Kronecker product: block (i,j) of the result equals a(i,j) * b.
RatMatrix kron(const RatMatrix& a, const RatMatrix& b);

// Sum of the diagonal; throws on non-square input.
Rat trace(const RatMatrix& a);

RatMatrix transpose(const RatMatrix& a);

// Reduced row echelon form via exact Gauss-Jordan elimination.
// Returns the reduced matrix and the pivot column of each pivot row.
struct RrefResult {
  RatMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};
RrefResult rref(const RatMatrix& a);

// Rank over the rationals.
std::size_t rank(const RatMatrix& a);

}  // namespace acausal
