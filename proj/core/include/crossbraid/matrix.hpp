#pragma once

#include <crossbraid/scalar.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace crossbraid {

/// Dense row-major matrix over Q.
///
/// Columns are the images of basis vectors: a linear map V -> W with
/// dim V = n, dim W = m is an m x n matrix acting on column vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries);
  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static Matrix diagonal(std::span<const Scalar> diag);
  static Matrix column(std::span<const Scalar> v);
  static Matrix row(std::span<const Scalar> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  const Scalar& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  Scalar& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  const std::vector<Scalar>& entries() const { return data_; }

  Vector col(std::size_t j) const;
  Vector row_vector(std::size_t i) const;
  void set_col(std::size_t j, std::span<const Scalar> v);

  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  /// Columns (as indices) on which two equally shaped matrices differ.
  std::vector<std::size_t> differing_columns(const Matrix& other) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& s);

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& s) { return a *= s; }
  friend Matrix operator*(const Scalar& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, std::span<const Scalar> v);
  friend bool operator==(const Matrix& a, const Matrix& b);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, std::span<const Scalar> v);
bool operator==(const Matrix& a, const Matrix& b);

}  // namespace crossbraid
