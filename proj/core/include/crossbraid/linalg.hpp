#pragma once

#include <crossbraid/matrix.hpp>

#include <optional>
#include <span>
#include <vector>

namespace crossbraid {

/// Flattening convention for V1 ⊗ ... ⊗ Vk: row-major, leftmost factor
/// slowest. Every module uses this one convention for tensor bases.
class TensorIndex {
 public:
  explicit TensorIndex(std::vector<std::size_t> dims);

  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t size() const { return size_; }

  std::size_t flatten(std::span<const std::size_t> idx) const;
  std::vector<std::size_t> unflatten(std::size_t flat) const;

 private:
  std::vector<std::size_t> dims_;
  std::size_t size_ = 1;
};

/// (a ⊗ b)[(i,k),(j,l)] = a[i,j] * b[k,l].
Matrix kron(const Matrix& a, const Matrix& b);
Vector kron(std::span<const Scalar> a, std::span<const Scalar> b);

/// Reorders the tensor factors indexing the rows of m. Row factor k of the
/// result is factor perm[k] of the input. `dims` are the input row factors.
Matrix permute_row_factors(const Matrix& m, std::span<const std::size_t> dims, std::span<const std::size_t> perm);

/// Same as above, acting on columns.
Matrix permute_col_factors(const Matrix& m, std::span<const std::size_t> dims, std::span<const std::size_t> perm);

/// Matrix of the permutation of tensor factors (small spaces only).
Matrix factor_permutation(std::span<const std::size_t> dims, std::span<const std::size_t> perm);

/// Swap V ⊗ W -> W ⊗ V.
Matrix swap_matrix(std::size_t dim_v, std::size_t dim_w);

struct Echelon {
  Matrix reduced;                   ///< reduced row echelon form, pivots equal 1
  std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}, one vector per free column in increasing order,
/// with coordinate 1 at its free column and 0 at the other free columns.
std::vector<Vector> kernel_basis(const Matrix& m);

struct AffineSolution {
  Vector particular;            ///< free variables set to zero
  std::vector<Vector> kernel;   ///< as kernel_basis
};

/// Solves m x = b. std::nullopt means the system is inconsistent.
std::optional<AffineSolution> solve_affine(const Matrix& m, std::span<const Scalar> b);

std::optional<Matrix> inverse(const Matrix& m);

/// Stacks matrices with equal column counts vertically.
Matrix vstack(std::span<const Matrix> blocks);

}  // namespace crossbraid
