#include "acausal/ratmat.hpp"

#include <utility>

#include "acausal/errors.hpp"

namespace acausal {

namespace {

std::string shape_of(const RatMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

}  // namespace

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols,
                     std::vector<Rat> entries)
    : rows_(rows), cols_(cols), a_(std::move(entries)) {
  if (a_.size() != rows_ * cols_)
    throw DimensionMismatchError(
        "entry count " + std::to_string(a_.size()) + " does not fill a " +
        shape_of(*this) + " matrix");
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols() != b.rows())
    throw DimensionMismatchError("cannot multiply " + shape_of(a) + " by " +
                                 shape_of(b));
  RatMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rat& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

RatMatrix kron(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j) == 0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
    }
  return c;
}

Rat trace(const RatMatrix& a) {
  if (a.rows() != a.cols())
    throw DimensionMismatchError("trace of non-square " + shape_of(a) +
                                 " matrix");
  Rat t = 0;
  for (std::size_t i = 0; i < a.rows(); ++i) t += a(i, i);
  return t;
}

RatMatrix transpose(const RatMatrix& a) {
  RatMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  return t;
}

RrefResult rref(const RatMatrix& a) {
  RatMatrix m = a;
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j)
        std::swap(m(pivot, j), m(row, j));
    Rat inv = Rat(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      Rat factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const RatMatrix& a) { return rref(a).pivot_cols.size(); }

}  // namespace acausal
