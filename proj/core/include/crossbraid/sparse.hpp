#pragma once

#include <crossbraid/matrix.hpp>
#include <crossbraid/report.hpp>

#include <span>
#include <utility>
#include <vector>

namespace crossbraid {

/// Sparse vector: (index, value) pairs, strictly increasing indices, no zeros.
using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

SparseVector to_sparse(std::span<const Scalar> v);
Vector to_dense(const SparseVector& v, std::size_t n);

/// Column-compressed exact matrix. Same conventions as Matrix (columns are
/// images of basis vectors); used wherever tensor powers make dense storage
/// impractical (triple and quadruple products of 8-dimensional comodules).
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(std::size_t rows, std::size_t cols);
  explicit SparseMatrix(const Matrix& dense);

  static SparseMatrix identity(std::size_t n, const Scalar& scale = 1);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_.size(); }
  std::size_t nnz() const;

  const SparseVector& column(std::size_t j) const { return cols_[j]; }

  /// Replaces column j; entries are sorted, merged and zero-stripped.
  void set_column(std::size_t j, SparseVector entries);

  Scalar at(std::size_t i, std::size_t j) const;

  Matrix dense() const;
  SparseMatrix transpose() const;
  bool is_identity() const;
  bool is_zero() const { return nnz() == 0; }

  SparseVector apply(const SparseVector& v) const;
  Vector apply(std::span<const Scalar> v) const;

  SparseMatrix& operator*=(const Scalar& s);
  friend SparseMatrix operator*(SparseMatrix a, const Scalar& s) { return a *= s; }
  friend SparseMatrix operator*(const Scalar& s, SparseMatrix a) { return a *= s; }
  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
  friend SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::vector<SparseVector> cols_;
};

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b);
SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b);

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b);

/// Reorders the tensor factors indexing the rows (see the dense version).
SparseMatrix permute_row_factors(const SparseMatrix& m, std::span<const std::size_t> dims,
                                 std::span<const std::size_t> perm);

/// Merges duplicate indices, sorts, drops zeros.
SparseVector normalize(SparseVector v);

/// a + s*b for sparse vectors.
SparseVector axpy(const SparseVector& a, const Scalar& s, const SparseVector& b);

/// Adds `name` to rep.checks and records one Failure per differing column
/// (at most 16); the witness is the column index unflattened over col_dims.
void compare_columns(Report& rep, const std::string& name, const SparseMatrix& lhs, const SparseMatrix& rhs,
                     std::vector<std::size_t> col_dims);

}  // namespace crossbraid
