#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hatilt/rational.hpp"

namespace hatilt {

using Vec = std::vector<Rational>;

bool is_zero(const Vec& v);

/// Dense row-major matrix over the rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(std::size_t n);
  static Matrix from_columns(const std::vector<Vec>& cols, std::size_t rows);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  Vec col(std::size_t j) const;
  Vec apply(const Vec& v) const;

  Matrix transpose() const;
  bool is_zero() const;
  bool is_identity() const;

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  Matrix operator*(const Rational& s) const;
  Matrix& operator+=(const Matrix& o);

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
  }

  /// Copy of rows [r0, r0+nr) and columns [c0, c0+nc).
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);

  Matrix select_rows(const std::vector<std::size_t>& idx) const;
  Matrix select_cols(const std::vector<std::size_t>& idx) const;

  static Matrix hstack(const Matrix& a, const Matrix& b);
  static Matrix vstack(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> a_;
};

struct Echelon {
  Matrix reduced;                   // reduced row echelon form
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
/// Basis of {v : m v = 0} as the columns of the result.
Matrix kernel(const Matrix& m);
/// Some X with a X = b, or nothing.
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
/// Throws std::domain_error when singular.
Matrix inverse(const Matrix& m);
Rational determinant(Matrix m);

/// Incrementally built subspace with membership and coordinate queries.
///
/// Coordinates are reported against the vectors accepted by insert(), in
/// insertion order.
class SpanBasis {
 public:
  explicit SpanBasis(std::size_t dim = 0) : dim_(dim) {}

  std::size_t ambient_dim() const { return dim_; }
  std::size_t size() const { return rows_.size(); }

  /// Adds v if independent of the current span; returns whether it was added.
  bool insert(const Vec& v);
  bool contains(const Vec& v) const;
  /// v minus its projection along the echelon rows.
  Vec residual(const Vec& v) const;
  std::optional<Vec> coordinates(const Vec& v) const;

 private:
  // Row i of the echelon form equals sum_k combo_[i][k] * accepted[k].
  std::size_t dim_;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vec> combo_;
};

}  // namespace hatilt
