#include "tropsing/linalg.hpp"

#include <algorithm>
#include <optional>

#include "tropsing/error.hpp"

namespace tropsing {

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(ErrorCode::InvalidArgument, "ragged matrix literal");
    for (long v : r) data_.emplace_back(v);
  }
}

Matrix Matrix::from_rows(const std::vector<RationalVector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw Error(ErrorCode::InvalidArgument, "row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

RationalVector Matrix::row(std::size_t r) const {
  return RationalVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

RationalVector Matrix::column(std::size_t c) const {
  RationalVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
  return out;
}

Matrix Matrix::select_columns(std::span<const std::size_t> cols) const {
  Matrix out(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols.size(); ++k) out(r, k) = (*this)(r, cols[k]);
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
  }
  return out;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw Error(ErrorCode::InvalidArgument, "matrix shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (a == 0) continue;
      for (std::size_t c = 0; c < rhs.cols_; ++c) out(r, c) += a * rhs(k, c);
    }
  }
  return out;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return q == 0; });
}

RationalVector operator*(const Matrix& m, const RationalVector& v) {
  if (m.cols() != v.size()) throw Error(ErrorCode::InvalidArgument, "matrix-vector shape mismatch");
  RationalVector out(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out[r] += m(r, c) * v[c];
  }
  return out;
}

EchelonForm reduced_row_echelon(const Matrix& input) {
  Matrix m = input;
  std::vector<std::size_t> pivots;
  std::size_t lead_row = 0;
  for (std::size_t c = 0; c < m.cols() && lead_row < m.rows(); ++c) {
    std::optional<std::size_t> found;
    for (std::size_t r = lead_row; r < m.rows(); ++r) {
      if (m(r, c) != 0) {
        found = r;
        break;
      }
    }
    if (!found) continue;
    if (*found != lead_row) {
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(*found, k), m(lead_row, k));
    }
    const Rational inv = 1 / m(lead_row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(lead_row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead_row || m(r, c) == 0) continue;
      const Rational factor = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= factor * m(lead_row, k);
    }
    pivots.push_back(c);
    ++lead_row;
  }
  Matrix reduced(lead_row, m.cols());
  for (std::size_t r = 0; r < lead_row; ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) reduced(r, c) = m(r, c);
  }
  return {std::move(reduced), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return reduced_row_echelon(m).pivots.size(); }

std::size_t column_rank(const Matrix& m, std::span<const std::size_t> cols) {
  if (cols.empty()) return 0;
  return rank(m.select_columns(cols));
}

std::vector<RationalVector> kernel_basis(const Matrix& m) {
  const EchelonForm ef = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : ef.pivots) is_pivot[p] = true;
  std::vector<RationalVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(m.cols());
    v[free] = 1;
    for (std::size_t r = 0; r < ef.pivots.size(); ++r) v[ef.pivots[r]] = -ef.reduced(r, free);
    basis.push_back(std::move(v));
  }
  return span_basis(basis, m.cols());
}

std::vector<RationalVector> span_basis(const std::vector<RationalVector>& vectors, std::size_t dim) {
  if (vectors.empty()) return {};
  const EchelonForm ef = reduced_row_echelon(Matrix::from_rows(vectors, dim));
  std::vector<RationalVector> out;
  out.reserve(ef.reduced.rows());
  for (std::size_t r = 0; r < ef.reduced.rows(); ++r) out.push_back(ef.reduced.row(r));
  return out;
}

bool same_span(const std::vector<RationalVector>& a, const std::vector<RationalVector>& b,
               std::size_t dim) {
  return span_basis(a, dim) == span_basis(b, dim);
}

bool solve_square(const Matrix& m, const RationalVector& rhs, RationalVector& x) {
  const std::size_t n = m.rows();
  if (m.cols() != n || rhs.size() != n) throw Error(ErrorCode::InvalidArgument, "solve_square shape");
  Matrix aug(n, n + 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n) = rhs[r];
  }
  const EchelonForm ef = reduced_row_echelon(aug);
  if (ef.pivots.size() != n || ef.pivots.back() != n - 1) return false;
  x.assign(n, Rational(0));
  for (std::size_t r = 0; r < n; ++r) x[r] = ef.reduced(r, n);
  return true;
}

bool has_positive_kernel_vector(const Matrix& m) {
  // The kernel is a cone, so a strictly positive x exists iff some x >= 1
  // does. With x = 1 + z the question becomes feasibility of
  // m z = -m 1, z >= 0, answered by phase one of the simplex method.
  const std::size_t rows = m.rows();
  const std::size_t n = m.cols();
  if (n == 0) return true;
  if (rows == 0) return true;

  const std::size_t width = n + rows + 1;  // z, artificials, rhs
  Matrix t(rows, width);
  for (std::size_t r = 0; r < rows; ++r) {
    Rational rhs = 0;
    for (std::size_t c = 0; c < n; ++c) rhs -= m(r, c);
    const int sign = rhs < 0 ? -1 : 1;
    for (std::size_t c = 0; c < n; ++c) t(r, c) = sign * m(r, c);
    t(r, n + r) = 1;
    t(r, width - 1) = sign * rhs;
  }
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) basis[r] = n + r;

  // Reduced costs of the phase-one objective sum(artificials).
  RationalVector cost(width - 1);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t r = 0; r < rows; ++r) cost[c] -= t(r, c);
  }

  for (;;) {
    std::optional<std::size_t> entering;
    for (std::size_t c = 0; c < width - 1; ++c) {
      if (cost[c] < 0) {
        entering = c;
        break;
      }
    }
    if (!entering) break;
    const std::size_t col = *entering;
    std::optional<std::size_t> leaving;
    Rational best_ratio;
    for (std::size_t r = 0; r < rows; ++r) {
      if (t(r, col) <= 0) continue;
      const Rational ratio = t(r, width - 1) / t(r, col);
      if (!leaving || ratio < best_ratio || (ratio == best_ratio && basis[r] < basis[*leaving])) {
        leaving = r;
        best_ratio = ratio;
      }
    }
    if (!leaving) break;  // unbounded direction; cannot happen for a bounded-below objective
    const std::size_t pr = *leaving;
    const Rational inv = 1 / t(pr, col);
    for (std::size_t c = 0; c < width; ++c) t(pr, c) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == pr || t(r, col) == 0) continue;
      const Rational factor = t(r, col);
      for (std::size_t c = 0; c < width; ++c) t(r, c) -= factor * t(pr, c);
    }
    const Rational factor = cost[col];
    for (std::size_t c = 0; c < width - 1; ++c) cost[c] -= factor * t(pr, c);
    basis[pr] = col;
  }

  for (std::size_t r = 0; r < rows; ++r) {
    if (basis[r] >= n && t(r, width - 1) != 0) return false;
  }
  return true;
}

}  // namespace tropsing
