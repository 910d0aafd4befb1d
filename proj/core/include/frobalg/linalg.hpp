#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "frobalg/scalar.hpp"

namespace frobalg {

/// Sparse coordinate vector: index -> nonzero coefficient.
using SparseVector = std::map<std::size_t, Scalar>;

/// y += a * x, dropping entries that cancel.
void axpy(SparseVector& y, const Scalar& a, const SparseVector& x);
SparseVector scaled(const SparseVector& x, const Scalar& a);
void add_entry(SparseVector& y, std::size_t index, const Scalar& c);

/// Dense row-major matrix over a FieldSpec.
class Matrix {
 public:
  Matrix() = default;
  Matrix(FieldSpec field, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldSpec field, std::size_t n);
  static Matrix from_rows(FieldSpec field, const std::vector<std::vector<Scalar>>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  FieldSpec field() const noexcept { return field_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  std::vector<Scalar> row(std::size_t r) const;
  std::vector<Scalar> column(std::size_t c) const;
  Matrix transposed() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

struct RowEchelonForm {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Gauss-Jordan elimination with the first nonzero entry as pivot.
RowEchelonForm row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {v : m v = 0}, one vector per free column (in column order).
std::vector<std::vector<Scalar>> kernel_basis(const Matrix& m);

struct LinearSolution {
  Matrix particular;                         // a.cols x b.cols, free variables set to zero
  std::vector<std::vector<Scalar>> kernel;   // basis of the homogeneous solution space
};

/// Solves a X = b.  Returns nullopt when the system is infeasible.
std::optional<LinearSolution> solve_linear(const Matrix& a, const Matrix& b);

/// Throws SingularMatrix.
Matrix invert(const Matrix& m);

/// Incremental sparse row echelon form.
///
/// Every stored row has leading coefficient 1 at its pivot.  With tracking
/// enabled, each stored row also remembers which combination of inserted
/// vectors produced it, so the reducer can report linear dependencies among
/// the inserted vectors and express targets in terms of them.
class SparseEchelon {
 public:
  explicit SparseEchelon(FieldSpec field, bool track = false);

  /// Inserts v; returns true when v was independent of the previous rows.
  bool insert(const SparseVector& v);

  struct Reduction {
    SparseVector remainder;    // v minus its projection onto the span
    SparseVector combination;  // v = sum combination[q] * inserted[q] + remainder (tracking only)
  };
  Reduction reduce(const SparseVector& v) const;
  bool contains(const SparseVector& v) const { return reduce(v).remainder.empty(); }

  std::size_t rank() const noexcept { return rows_.size(); }
  std::size_t inserted() const noexcept { return inserted_; }

  /// Dependencies among inserted vectors (tracking only); each is a
  /// combination over insertion indices that sums to zero.
  const std::vector<SparseVector>& dependencies() const noexcept { return dependencies_; }

  /// Fully reduced basis of the span, ordered by pivot.
  std::vector<SparseVector> reduced_basis() const;

 private:
  struct Row {
    SparseVector vec;
    SparseVector combo;
  };
  void reduce_in_place(SparseVector& v, SparseVector* combo) const;

  FieldSpec field_;
  bool track_;
  std::size_t inserted_ = 0;
  std::map<std::size_t, Row> rows_;  // keyed by pivot
  std::vector<SparseVector> dependencies_;
};

/// Expresses target as a combination of the given vectors, if possible.
std::optional<SparseVector> solve_in_span(FieldSpec field, const std::vector<SparseVector>& vectors,
                                          const SparseVector& target);

/// Basis of the linear relations among the given vectors.
std::vector<SparseVector> relations(FieldSpec field, const std::vector<SparseVector>& vectors);

/// Dimension of the span of the given vectors.
std::size_t span_rank(FieldSpec field, const std::vector<SparseVector>& vectors);

/// Basis of {x : <row, x> = 0 for every row}, x indexed by [0, cols).
std::vector<SparseVector> sparse_nullspace(FieldSpec field, const std::vector<SparseVector>& rows,
                                           std::size_t cols);

struct SparseSolution {
  SparseVector particular;            // free variables set to zero
  std::vector<SparseVector> kernel;   // basis of the homogeneous solutions
};

/// Solves <rows[q], x> = rhs[q] for x indexed by [0, cols); nullopt when infeasible.
std::optional<SparseSolution> sparse_solve(FieldSpec field, const std::vector<SparseVector>& rows,
                                           const std::vector<Scalar>& rhs, std::size_t cols);

}  // namespace frobalg
