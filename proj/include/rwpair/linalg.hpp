#pragma once

#include "rwpair/scalar.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace rwpair {

using Vector = std::vector<Scalar>;

/// Dense row-major rational matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);

  static Matrix identity(int n);
  static Matrix from_rows(const std::vector<Vector>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Scalar& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& operator()(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  Vector row(int r) const;
  Matrix transpose() const;
  bool is_zero() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& f);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& f) { return a *= f; }
  friend Matrix operator*(const Scalar& f, Matrix a) { return a *= f; }
  Matrix operator*(const Matrix& o) const;
  Vector operator*(const Vector& v) const;
  bool operator==(const Matrix& o) const;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

/// Commutator AB - BA.
Matrix commutator(const Matrix& a, const Matrix& b);

/// Exact Gaussian elimination on dense matrices.
int rank(const Matrix& m);
/// Basis of {x : m x = 0}, one vector per free column of the reduced form.
std::vector<Vector> kernel_basis(const Matrix& m);
/// Any x with m x = rhs, or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& m, const Vector& rhs);
Scalar determinant(const Matrix& m);
/// Throws std::domain_error when singular.
Matrix inverse(const Matrix& m);

/// Sparse rational matrix stored by rows of (column, value) pairs sorted by
/// column. Built incrementally; zero values are dropped.
class SparseMatrix {
 public:
  using Row = std::vector<std::pair<int, Scalar>>;

  SparseMatrix() = default;
  SparseMatrix(int rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const Row& row(int r) const { return data_[r]; }

  /// Adds `value` to entry (r, c).
  void add(int r, int c, const Scalar& value);
  void set_row(int r, Row row);
  std::size_t nnz() const;

  Vector operator*(const Vector& x) const;
  Matrix to_dense() const;
  static SparseMatrix from_dense(const Matrix& m);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Row> data_;
};

/// Sparse exact elimination. The matrix is first split into independent
/// blocks (connected components of its row/column incidence graph), and each
/// block is reduced to echelon form separately.
int rank(const SparseMatrix& m);
std::optional<Vector> solve(const SparseMatrix& m, const Vector& rhs);
std::vector<Vector> kernel_basis(const SparseMatrix& m);

}  // namespace rwpair
