#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "wh/field.hpp"

namespace wh {

using Vector = std::vector<Scalar>;

class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), entries_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);

  static Matrix identity(std::size_t n);
  /// Columns of the result are the given vectors.
  static Matrix from_columns(std::size_t rows, std::span<const Vector> columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const std::vector<Scalar>& entries() const { return entries_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  bool is_zero() const;

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b);
Vector apply(const Field& field, const Matrix& m, const Vector& v);

/// Reduced row echelon form in place; returns the pivot columns. Pivots are
/// the first nonzero entry of each column scan, no numerical pivoting.
std::vector<std::size_t> row_reduce(const Field& field, Matrix& m);

std::size_t rank(const Field& field, Matrix m);

/// Basis of {v : m·v = 0}, one vector per free column, free entry set to 1.
std::vector<Vector> kernel_basis(const Field& field, const Matrix& m);

/// Rank of the vectors stacked as columns. All vectors must share `dim`.
std::size_t span_rank(const Field& field, std::span<const Vector> vectors, std::size_t dim);

/// A linearly independent subset spanning the same space (reduced rows).
std::vector<Vector> span_basis(const Field& field, std::span<const Vector> vectors, std::size_t dim);

bool subspace_equal(const Field& field, std::span<const Vector> a, std::span<const Vector> b);
bool subspace_contains(const Field& field, std::span<const Vector> space, const Vector& v);

/// dim(span(a) ∩ span(b)) via dim a + dim b − dim(a + b).
std::size_t intersection_dim(const Field& field, std::span<const Vector> a, std::span<const Vector> b,
                             std::size_t dim);

Vector unit_vector(std::size_t dim, std::size_t i);

}  // namespace wh
