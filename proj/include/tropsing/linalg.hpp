#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "tropsing/rational.hpp"

namespace tropsing {

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix from_rows(const std::vector<RationalVector>& rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  RationalVector row(std::size_t r) const;
  RationalVector column(std::size_t c) const;

  /// Submatrix made of the listed columns, in the listed order.
  Matrix select_columns(std::span<const std::size_t> cols) const;

  Matrix transpose() const;
  Matrix operator*(const Matrix& rhs) const;

  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

struct EchelonForm {
  Matrix reduced;                    // reduced row echelon form, zero rows dropped
  std::vector<std::size_t> pivots;   // pivot column of each row
};

EchelonForm reduced_row_echelon(const Matrix& m);

std::size_t rank(const Matrix& m);

/// Rank of the columns `cols` of `m`.
std::size_t column_rank(const Matrix& m, std::span<const std::size_t> cols);

/// Basis of { x : m x = 0 }, one vector per free column, brought to
/// reduced echelon form so the result is canonical.
std::vector<RationalVector> kernel_basis(const Matrix& m);

/// Reduced echelon basis of the span of `vectors` (all of length `dim`).
std::vector<RationalVector> span_basis(const std::vector<RationalVector>& vectors, std::size_t dim);

/// True iff the two families span the same subspace.
bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b,
               std::size_t dim);

/// Solves the square system m x = rhs. Returns false when m is singular.
bool solve_square(const Matrix& m, const RationalVector& rhs, RationalVector& x);

/// True iff some x with every entry strictly positive satisfies m x = 0.
/// Decided exactly with a phase-one simplex under Bland's rule.
bool has_positive_kernel_vector(const Matrix& m);

RationalVector operator*(const Matrix& m, const RationalVector& v);

}  // namespace tropsing
