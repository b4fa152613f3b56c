#include "wh/linalg.hpp"

#include <string>
#include <utility>

namespace wh {

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows_ * cols_) {
    throw DimensionError("matrix entry count " + std::to_string(entries_.size()) + " != " +
                         std::to_string(rows_) + "x" + std::to_string(cols_));
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(std::size_t rows, std::span<const Vector> columns) {
  Matrix m(rows, columns.size());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    if (columns[c].size() != rows) throw DimensionError("column length mismatch");
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = columns[c][r];
  }
  return m;
}

Vector Matrix::column(std::size_t c) const {
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

bool Matrix::is_zero() const {
  for (const auto& e : entries_) {
    if (!Field::is_zero(e)) return false;
  }
  return true;
}

Matrix multiply(const Field& field, const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product shape mismatch");
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (Field::is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Scalar& bkj = b(k, j);
        if (Field::is_zero(bkj)) continue;
        out(i, j) = field.add(out(i, j), field.mul(aik, bkj));
      }
    }
  }
  return out;
}

Vector apply(const Field& field, const Matrix& m, const Vector& v) {
  if (m.cols() != v.size()) throw DimensionError("matrix-vector shape mismatch");
  Vector out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t k = 0; k < m.cols(); ++k) {
      if (Field::is_zero(v[k]) || Field::is_zero(m(i, k))) continue;
      out[i] = field.add(out[i], field.mul(m(i, k), v[k]));
    }
  }
  return out;
}

std::vector<std::size_t> row_reduce(const Field& field, Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && Field::is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(pivot, c), m(row, c));
    }
    Scalar scale = field.inv(m(row, col));
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) = field.mul(m(row, c), scale);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || Field::is_zero(m(r, col))) continue;
      Scalar factor = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) {
        if (Field::is_zero(m(row, c))) continue;
        m(r, c) = field.sub(m(r, c), field.mul(factor, m(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(const Field& field, Matrix m) { return row_reduce(field, m).size(); }

std::vector<Vector> kernel_basis(const Field& field, const Matrix& m) {
  Matrix reduced = m;
  auto pivots = row_reduce(field, reduced);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;

  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      if (!Field::is_zero(reduced(r, free))) v[pivots[r]] = field.neg(reduced(r, free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

namespace {

Matrix stack_rows(std::span<const Vector> vectors, std::size_t dim) {
  Matrix m(vectors.size(), dim);
  for (std::size_t r = 0; r < vectors.size(); ++r) {
    if (vectors[r].size() != dim) {
      throw DimensionError("vector of length " + std::to_string(vectors[r].size()) +
                           " in a space of dimension " + std::to_string(dim));
    }
    for (std::size_t c = 0; c < dim; ++c) m(r, c) = vectors[r][c];
  }
  return m;
}

std::size_t common_dim(std::span<const Vector> a, std::span<const Vector> b) {
  if (!a.empty()) return a.front().size();
  if (!b.empty()) return b.front().size();
  return 0;
}

}  // namespace

std::size_t span_rank(const Field& field, std::span<const Vector> vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(field, stack_rows(vectors, dim));
}

std::vector<Vector> span_basis(const Field& field, std::span<const Vector> vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  Matrix m = stack_rows(vectors, dim);
  auto pivots = row_reduce(field, m);
  std::vector<Vector> out;
  out.reserve(pivots.size());
  for (std::size_t r = 0; r < pivots.size(); ++r) {
    Vector v(dim);
    for (std::size_t c = 0; c < dim; ++c) v[c] = m(r, c);
    out.push_back(std::move(v));
  }
  return out;
}

bool subspace_equal(const Field& field, std::span<const Vector> a, std::span<const Vector> b) {
  std::size_t dim = common_dim(a, b);
  std::size_t ra = span_rank(field, a, dim);
  std::size_t rb = span_rank(field, b, dim);
  if (ra != rb) return false;
  std::vector<Vector> both(a.begin(), a.end());
  both.insert(both.end(), b.begin(), b.end());
  return span_rank(field, both, dim) == ra;
}

bool subspace_contains(const Field& field, std::span<const Vector> space, const Vector& v) {
  std::size_t dim = v.size();
  std::vector<Vector> both(space.begin(), space.end());
  std::size_t before = span_rank(field, both, dim);
  both.push_back(v);
  return span_rank(field, both, dim) == before;
}

std::size_t intersection_dim(const Field& field, std::span<const Vector> a, std::span<const Vector> b,
                             std::size_t dim) {
  std::vector<Vector> both(a.begin(), a.end());
  both.insert(both.end(), b.begin(), b.end());
  return span_rank(field, a, dim) + span_rank(field, b, dim) - span_rank(field, both, dim);
}

Vector unit_vector(std::size_t dim, std::size_t i) {
  Vector v(dim);
  v.at(i) = 1;
  return v;
}

}  // namespace wh
