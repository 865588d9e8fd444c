#include <crossbraid/sparse.hpp>

#include <crossbraid/linalg.hpp>

#include <algorithm>
#include <map>
#include <stdexcept>

namespace crossbraid {

SparseVector to_sparse(std::span<const Scalar> v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!is_zero(v[i])) out.emplace_back(i, v[i]);
  return out;
}

Vector to_dense(const SparseVector& v, std::size_t n) {
  Vector out(n);
  for (const auto& [i, c] : v) {
    if (i >= n) throw std::out_of_range("to_dense: index out of range");
    out[i] = c;
  }
  return out;
}

SparseVector normalize(SparseVector v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out;
  out.reserve(v.size());
  for (auto& [i, c] : v) {
    if (!out.empty() && out.back().first == i) {
      out.back().second += c;
    } else {
      if (!out.empty() && is_zero(out.back().second)) out.pop_back();
      out.emplace_back(i, std::move(c));
    }
  }
  if (!out.empty() && is_zero(out.back().second)) out.pop_back();
  return out;
}

SparseVector axpy(const SparseVector& a, const Scalar& s, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t p = 0, q = 0;
  while (p < a.size() || q < b.size()) {
    if (q == b.size() || (p < a.size() && a[p].first < b[q].first)) {
      out.push_back(a[p++]);
    } else if (p == a.size() || b[q].first < a[p].first) {
      Scalar c = s * b[q].second;
      if (!is_zero(c)) out.emplace_back(b[q].first, std::move(c));
      ++q;
    } else {
      Scalar c = a[p].second + s * b[q].second;
      if (!is_zero(c)) out.emplace_back(a[p].first, std::move(c));
      ++p;
      ++q;
    }
  }
  return out;
}

SparseMatrix::SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

SparseMatrix::SparseMatrix(const Matrix& dense) : rows_(dense.rows()), cols_(dense.cols()) {
  for (std::size_t j = 0; j < dense.cols(); ++j)
    for (std::size_t i = 0; i < dense.rows(); ++i)
      if (!crossbraid::is_zero(dense(i, j))) cols_[j].emplace_back(i, dense(i, j));
}

SparseMatrix SparseMatrix::identity(std::size_t n, const Scalar& scale) {
  SparseMatrix m(n, n);
  if (crossbraid::is_zero(scale)) return m;
  for (std::size_t j = 0; j < n; ++j) m.cols_[j].emplace_back(j, scale);
  return m;
}

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : cols_) n += c.size();
  return n;
}

void SparseMatrix::set_column(std::size_t j, SparseVector entries) {
  auto col = normalize(std::move(entries));
  if (!col.empty() && col.back().first >= rows_) throw std::out_of_range("SparseMatrix::set_column: row out of range");
  cols_.at(j) = std::move(col);
}

Scalar SparseMatrix::at(std::size_t i, std::size_t j) const {
  const auto& c = cols_.at(j);
  const auto it = std::lower_bound(c.begin(), c.end(), i, [](const auto& e, std::size_t r) { return e.first < r; });
  if (it != c.end() && it->first == i) return it->second;
  return 0;
}

Matrix SparseMatrix::dense() const {
  Matrix out(rows_, cols_.size());
  for (std::size_t j = 0; j < cols_.size(); ++j)
    for (const auto& [i, c] : cols_[j]) out(i, j) = c;
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix out(cols_.size(), rows_);
  for (std::size_t j = 0; j < cols_.size(); ++j)
    for (const auto& [i, c] : cols_[j]) out.cols_[i].emplace_back(j, c);
  return out;
}

bool SparseMatrix::is_identity() const {
  if (rows_ != cols_.size()) return false;
  for (std::size_t j = 0; j < cols_.size(); ++j) {
    if (cols_[j].size() != 1 || cols_[j][0].first != j || cols_[j][0].second != 1) return false;
  }
  return true;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  std::map<std::size_t, Scalar> acc;
  for (const auto& [k, b] : v) {
    if (k >= cols_.size()) throw std::out_of_range("SparseMatrix::apply: index out of range");
    for (const auto& [i, a] : cols_[k]) acc[i] += a * b;
  }
  SparseVector out;
  for (auto& [i, c] : acc)
    if (!crossbraid::is_zero(c)) out.emplace_back(i, std::move(c));
  return out;
}

Vector SparseMatrix::apply(std::span<const Scalar> v) const {
  if (v.size() != cols_.size()) throw std::invalid_argument("SparseMatrix::apply: dimension mismatch");
  Vector out(rows_);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (crossbraid::is_zero(v[k])) continue;
    for (const auto& [i, a] : cols_[k]) out[i] += a * v[k];
  }
  return out;
}

SparseMatrix& SparseMatrix::operator*=(const Scalar& s) {
  if (crossbraid::is_zero(s)) {
    for (auto& c : cols_) c.clear();
    return *this;
  }
  for (auto& c : cols_)
    for (auto& e : c) e.second *= s;
  return *this;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("SparseMatrix product: dimension mismatch");
  SparseMatrix out(a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) out.cols_[j] = a.apply(b.cols_[j]);
  return out;
}

SparseMatrix operator+(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("SparseMatrix sum: shape mismatch");
  SparseMatrix out(a.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) out.cols_[j] = axpy(a.cols_[j], 1, b.cols_[j]);
  return out;
}

SparseMatrix operator-(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("SparseMatrix difference: shape mismatch");
  SparseMatrix out(a.rows(), a.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) out.cols_[j] = axpy(a.cols_[j], -1, b.cols_[j]);
  return out;
}

SparseMatrix kron(const SparseMatrix& a, const SparseMatrix& b) {
  SparseMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t j = 0; j < a.cols(); ++j) {
    for (std::size_t l = 0; l < b.cols(); ++l) {
      SparseVector col;
      col.reserve(a.column(j).size() * b.column(l).size());
      for (const auto& [i, x] : a.column(j))
        for (const auto& [k, y] : b.column(l)) col.emplace_back(i * b.rows() + k, x * y);
      out.set_column(j * b.cols() + l, std::move(col));
    }
  }
  return out;
}

SparseMatrix permute_row_factors(const SparseMatrix& m, std::span<const std::size_t> dims,
                                 std::span<const std::size_t> perm) {
  if (dims.size() != perm.size()) throw std::invalid_argument("permute_row_factors: arity mismatch");
  const TensorIndex in(std::vector<std::size_t>(dims.begin(), dims.end()));
  if (in.size() != m.rows()) throw std::invalid_argument("permute_row_factors: row count mismatch");
  std::vector<std::size_t> out_dims(perm.size());
  for (std::size_t k = 0; k < perm.size(); ++k) out_dims[k] = dims[perm[k]];
  const TensorIndex out(out_dims);
  std::vector<std::size_t> idx_out(perm.size());
  SparseMatrix r(m.rows(), m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    SparseVector col;
    col.reserve(m.column(j).size());
    for (const auto& [i, c] : m.column(j)) {
      const auto idx = in.unflatten(i);
      for (std::size_t k = 0; k < perm.size(); ++k) idx_out[k] = idx[perm[k]];
      col.emplace_back(out.flatten(idx_out), c);
    }
    r.set_column(j, std::move(col));
  }
  return r;
}

void compare_columns(Report& rep, const std::string& name, const SparseMatrix& lhs, const SparseMatrix& rhs,
                     std::vector<std::size_t> col_dims) {
  constexpr std::size_t kMaxRecorded = 16;
  rep.checks.push_back(name);
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    rep.failures.push_back({name, {}, "shape mismatch", {}, {}});
    return;
  }
  const TensorIndex idx(std::move(col_dims));
  std::size_t bad = 0;
  for (std::size_t j = 0; j < lhs.cols(); ++j) {
    if (lhs.column(j) == rhs.column(j)) continue;
    if (bad++ < kMaxRecorded) {
      rep.failures.push_back({name, idx.unflatten(j), "", to_dense(lhs.column(j), lhs.rows()),
                              to_dense(rhs.column(j), rhs.rows())});
    }
  }
  if (bad > kMaxRecorded) {
    rep.notes.push_back(name + ": " + std::to_string(bad) + " failing columns, first " +
                        std::to_string(kMaxRecorded) + " recorded");
  }
}

}  // namespace crossbraid
