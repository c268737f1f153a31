#pragma once

#include <utility>
#include <vector>

#include "curv/rational.hpp"

namespace curv {

/// Dense row-major matrix of exact rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols);
  static Matrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
  const Rational& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

  std::vector<Rational> row(int r) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix scaled(const Rational& c) const;

  /// Exact inverse; throws std::domain_error if singular or non-square.
  Matrix inverse() const;
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rational> e_;
};

/// Sparse vector: (column, value) pairs sorted by column, values nonzero.
using SparseRow = std::vector<std::pair<int, Rational>>;

SparseRow to_sparse(const std::vector<Rational>& dense);
std::vector<Rational> to_dense(const SparseRow& row, int n);

/// Incrementally maintained reduced row-echelon basis of a row space.
/// Rows are kept fully reduced against one another, so the held basis is
/// the unique RREF of everything inserted so far.
class RrefBuilder {
 public:
  explicit RrefBuilder(int ambient);

  /// Reduces the row against the current basis and absorbs the remainder.
  /// Returns true when the rank grew.
  bool insert(SparseRow row);
  bool insert(const std::vector<Rational>& dense) { return insert(to_sparse(dense)); }

  bool in_span(SparseRow row) const;
  bool in_span(const std::vector<Rational>& dense) const { return in_span(to_sparse(dense)); }

  int rank() const { return static_cast<int>(rows_.size()); }
  int ambient() const { return ambient_; }
  const std::vector<SparseRow>& rows() const { return rows_; }
  const std::vector<int>& pivot_cols() const { return pivot_cols_; }

  Matrix to_matrix() const;

 private:
  void reduce(SparseRow& r) const;
  int row_for_pivot(int col) const;  // -1 when col is free

  int ambient_;
  std::vector<SparseRow> rows_;    // sorted by pivot column
  std::vector<int> pivot_cols_;    // parallel to rows_, strictly increasing
};

/// Linear subspace of Q^ambient in canonical form: the basis matrix is the
/// unique RREF of the row space, so equal subspaces compare equal
/// structurally.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(int ambient);
  static Subspace full_space(int ambient);
  static Subspace span_of_rows(const Matrix& rows);
  static Subspace from_builder(const RrefBuilder& b);

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.rows(); }
  const Matrix& basis() const { return basis_; }

  bool contains(const std::vector<Rational>& v) const;
  bool contains(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  int ambient_ = 0;
  Matrix basis_;  // dim x ambient, RREF
};

int rank(const Matrix& m);
int rank_of_rows(const std::vector<SparseRow>& rows, int ambient);

/// Exact solution set of M v = 0 with dim = cols - rank.
Subspace null_space(const Matrix& m);
Subspace null_space_of_rows(const std::vector<SparseRow>& rows, int ambient);

/// Smallest subspace containing every input; throws on ambient mismatch.
Subspace span_union(const std::vector<Subspace>& spaces);

/// true iff v lies in the row space of S.
bool contains(const Subspace& s, const std::vector<Rational>& v);

}  // namespace curv
