#include <crossbraid/linalg.hpp>

#include <numeric>
#include <stdexcept>

namespace crossbraid {

TensorIndex::TensorIndex(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
  size_ = std::accumulate(dims_.begin(), dims_.end(), std::size_t{1}, std::multiplies<>());
}

std::size_t TensorIndex::flatten(std::span<const std::size_t> idx) const {
  if (idx.size() != dims_.size()) throw std::invalid_argument("TensorIndex::flatten: arity mismatch");
  std::size_t flat = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (idx[k] >= dims_[k]) throw std::out_of_range("TensorIndex::flatten: index out of range");
    flat = flat * dims_[k] + idx[k];
  }
  return flat;
}

std::vector<std::size_t> TensorIndex::unflatten(std::size_t flat) const {
  if (flat >= size_) throw std::out_of_range("TensorIndex::unflatten: index out of range");
  std::vector<std::size_t> idx(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    idx[k] = flat % dims_[k];
    flat /= dims_[k];
  }
  return idx;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const Scalar& aij = a(i, j);
      if (is_zero(aij)) continue;
      for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t l = 0; l < b.cols(); ++l) {
          if (!is_zero(b(k, l))) out(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
        }
      }
    }
  }
  return out;
}

Vector kron(std::span<const Scalar> a, std::span<const Scalar> b) {
  Vector out(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (std::size_t k = 0; k < b.size(); ++k) out[i * b.size() + k] = a[i] * b[k];
  }
  return out;
}

namespace {

// new flat index (in permuted order) for each old flat index
std::vector<std::size_t> permutation_map(std::span<const std::size_t> dims, std::span<const std::size_t> perm) {
  if (dims.size() != perm.size()) throw std::invalid_argument("factor permutation: arity mismatch");
  TensorIndex in(std::vector<std::size_t>(dims.begin(), dims.end()));
  std::vector<std::size_t> out_dims(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) out_dims[k] = dims[perm[k]];
  TensorIndex out(out_dims);
  std::vector<std::size_t> map(in.size());
  std::vector<std::size_t> idx_out(perm.size());
  for (std::size_t f = 0; f < in.size(); ++f) {
    const auto idx = in.unflatten(f);
    for (std::size_t k = 0; k < perm.size(); ++k) idx_out[k] = idx[perm[k]];
    map[f] = out.flatten(idx_out);
  }
  return map;
}

}  // namespace

Matrix permute_row_factors(const Matrix& m, std::span<const std::size_t> dims, std::span<const std::size_t> perm) {
  const auto map = permutation_map(dims, perm);
  if (map.size() != m.rows()) throw std::invalid_argument("permute_row_factors: row count mismatch");
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(map[i], j) = m(i, j);
  return out;
}

Matrix permute_col_factors(const Matrix& m, std::span<const std::size_t> dims, std::span<const std::size_t> perm) {
  const auto map = permutation_map(dims, perm);
  if (map.size() != m.cols()) throw std::invalid_argument("permute_col_factors: column count mismatch");
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, map[j]) = m(i, j);
  return out;
}

Matrix factor_permutation(std::span<const std::size_t> dims, std::span<const std::size_t> perm) {
  const auto map = permutation_map(dims, perm);
  Matrix p(map.size(), map.size());
  for (std::size_t f = 0; f < map.size(); ++f) p(map[f], f) = 1;
  return p;
}

Matrix swap_matrix(std::size_t dim_v, std::size_t dim_w) {
  const std::size_t dims[] = {dim_v, dim_w};
  const std::size_t perm[] = {1, 0};
  return factor_permutation(dims, perm);
}

Echelon rref(Matrix m) {
  Echelon e;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && is_zero(m(pivot, col))) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row) {
      for (std::size_t j = 0; j < m.cols(); ++j) swap(m(pivot, j), m(row, j));
    }
    const Scalar inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || is_zero(m(r, col))) continue;
      const Scalar factor = m(r, col);
      for (std::size_t j = col; j < m.cols(); ++j) {
        if (!is_zero(m(row, j))) m(r, j) -= factor * m(row, j);
      }
    }
    e.pivots.push_back(col);
    ++row;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

std::vector<Vector> kernel_basis(const Matrix& m) {
  const auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<AffineSolution> solve_affine(const Matrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve_affine: rhs length mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const auto e = rref(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  AffineSolution sol;
  sol.particular = Vector(m.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) sol.particular[e.pivots[r]] = e.reduced(r, m.cols());
  sol.kernel = kernel_basis(m);
  return sol;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  const std::size_t n = m.rows();
  if (n == 0) return Matrix{};
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const auto e = rref(std::move(aug));
  if (e.pivots.size() < n || e.pivots[n - 1] != n - 1) return std::nullopt;
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.reduced(i, n + j);
  return inv;
}

Matrix vstack(std::span<const Matrix> blocks) {
  if (blocks.empty()) return {};
  std::size_t rows = 0;
  const std::size_t cols = blocks.front().cols();
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw std::invalid_argument("vstack: column mismatch");
    rows += b.rows();
  }
  Matrix out(rows, cols);
  std::size_t r0 = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < cols; ++j) out(r0 + i, j) = b(i, j);
    r0 += b.rows();
  }
  return out;
}

}  // namespace crossbraid
