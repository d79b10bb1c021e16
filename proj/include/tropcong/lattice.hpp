#pragma once

#include <cstddef>
#include <vector>

#include "tropcong/number.hpp"

namespace tropcong {

// Dense integer matrix, row-major.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix from_rows(const std::vector<IntVec>& rows, std::size_t cols);
  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Integer& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  IntVec row(std::size_t i) const;
  IntVec col(std::size_t j) const;
  std::vector<IntVec> row_vectors() const;
  IntMatrix transpose() const;

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

IntVec operator*(const IntMatrix& a, const IntVec& x);

Integer determinant(const IntMatrix& m);
// Inverse of a unimodular matrix; throws PreconditionError otherwise.
IntMatrix unimodular_inverse(const IntMatrix& m);
std::size_t rank(const std::vector<RatVec>& rows);
std::size_t rank(const std::vector<IntVec>& rows);

struct ColumnHnf {
  IntMatrix h;  // lower column echelon form, M * U = H
  IntMatrix u;  // unimodular
  std::size_t rank = 0;
};
ColumnHnf column_hnf(const IntMatrix& m);

// Canonical basis (row Hermite normal form, zero rows dropped) of the lattice
// spanned by the given integer rows.
std::vector<IntVec> row_hnf(const std::vector<IntVec>& rows, std::size_t n);

// Basis of {x in Z^n : r . x = 0 for every row r}, in row Hermite normal form.
std::vector<IntVec> integer_kernel(const std::vector<IntVec>& rows, std::size_t n);

// Canonical basis of span_R(gens) intersected with Z^n.
std::vector<IntVec> saturate(const std::vector<RatVec>& gens, std::size_t n);
std::vector<IntVec> saturate(const std::vector<IntVec>& gens, std::size_t n);

// Given a basis of a saturated sublattice, returns a basis of Z^n that starts
// with it. Throws PreconditionError if the rows are dependent or the
// lattice they span is not saturated.
std::vector<IntVec> extend_basis(const std::vector<IntVec>& basis, std::size_t n);

// Solves x * B = v for integer coordinates x, where B has linearly independent
// rows. Returns false if v is not in the rational span of B or the
// coordinates are not integral.
bool lattice_coordinates(const std::vector<IntVec>& basis, const IntVec& v, IntVec& coords);

// Rational coordinates of v in the row basis B; false if v is not in the span.
bool span_coordinates(const std::vector<IntVec>& basis, const RatVec& v, RatVec& coords);

}  // namespace tropcong
