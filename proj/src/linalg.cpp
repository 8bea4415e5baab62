#include "hatilt/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace hatilt {

bool is_zero(const Vec& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
             a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

Vec Matrix::col(std::size_t j) const {
  Vec v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, j);
  return v;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("apply: size mismatch");
  Vec out(rows_);
  for (std::size_t j = 0; j < cols_; ++j) {
    if (v[j].is_zero()) continue;
    for (std::size_t i = 0; i < rows_; ++i) {
      const auto& x = (*this)(i, j);
      if (!x.is_zero()) out[i] += x * v[j];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : a_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != Rational(i == j ? 1 : 0)) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: size mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t k = 0; k < cols_; ++k) {
      const auto& x = (*this)(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) {
        const auto& y = o(k, j);
        if (!y.is_zero()) r(i, j) += x * y;
      }
    }
  }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r = *this;
  r += o;
  return r;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: size mismatch");
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (!o.a_[i].is_zero()) a_[i] += o.a_[i];
  }
  return *this;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + o * Rational(-1); }

Matrix Matrix::operator*(const Rational& s) const {
  Matrix r = *this;
  for (auto& x : r.a_) {
    if (!x.is_zero()) x *= s;
  }
  return r;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  Matrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

Matrix Matrix::select_rows(const std::vector<std::size_t>& idx) const {
  Matrix r(idx.size(), cols_);
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < cols_; ++j) r(i, j) = (*this)(idx[i], j);
  return r;
}

Matrix Matrix::select_cols(const std::vector<std::size_t>& idx) const {
  Matrix r(rows_, idx.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) r(i, j) = (*this)(i, idx[j]);
  return r;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("hstack: row mismatch");
  Matrix r(a.rows(), a.cols() + b.cols());
  r.set_block(0, 0, a);
  r.set_block(0, a.cols(), b);
  return r;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.cols()) throw std::invalid_argument("vstack: column mismatch");
  Matrix r(a.rows() + b.rows(), a.cols());
  r.set_block(0, 0, a);
  r.set_block(a.rows(), 0, b);
  return r;
}

Echelon rref(Matrix m) {
  Echelon e;
  std::size_t r = 0;
  const std::size_t rows = m.rows(), cols = m.cols();
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i) {
      if (!m(i, c).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(piv, j), m(r, j));
    }
    Rational inv = m(r, c).inverse();
    for (std::size_t j = c; j < cols; ++j) {
      if (!m(r, j).is_zero()) m(r, j) *= inv;
    }
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) {
        if (!m(r, j).is_zero()) m(i, j) -= f * m(r, j);
      }
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const Matrix& m) {
  if (m.empty()) return 0;
  return rref(m).pivots.size();
}

Matrix kernel(const Matrix& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) return Matrix::identity(n);
  Echelon e = rref(m);
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = -e.reduced(i, f);
    basis.push_back(std::move(v));
  }
  return Matrix::from_columns(basis, n);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  const std::size_t n = a.cols();
  Echelon e = rref(Matrix::hstack(a, b));
  Matrix x(n, b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    if (e.pivots[i] >= n) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(e.pivots[i], j) = e.reduced(i, n + j);
  }
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("inverse of non-square matrix");
  const std::size_t n = m.rows();
  Echelon e = rref(Matrix::hstack(m, Matrix::identity(n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
    throw std::domain_error("singular matrix");
  }
  return e.reduced.block(0, n, n, n);
}

Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw std::domain_error("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i) {
      if (!m(i, c).is_zero()) {
        piv = i;
        break;
      }
    }
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Rational inv = m(c, c).inverse();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m(i, c).is_zero()) continue;
      Rational f = m(i, c) * inv;
      for (std::size_t j = c; j < n; ++j) {
        if (!m(c, j).is_zero()) m(i, j) -= f * m(c, j);
      }
    }
  }
  return det;
}

namespace {

// Reduces v against echelon rows, accumulating the subtracted multiples.
void reduce_against(const std::vector<Vec>& rows, const std::vector<std::size_t>& pivots, Vec& v,
                    Vec* coeffs) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const Rational f = v[pivots[i]];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j) {
      if (!rows[i][j].is_zero()) v[j] -= f * rows[i][j];
    }
    if (coeffs) (*coeffs)[i] += f;
  }
}

}  // namespace

bool SpanBasis::insert(const Vec& v) {
  if (v.size() != dim_) throw std::invalid_argument("SpanBasis: dimension mismatch");
  Vec r = v;
  Vec used(rows_.size());
  reduce_against(rows_, pivots_, r, &used);
  std::size_t p = 0;
  while (p < dim_ && r[p].is_zero()) ++p;
  if (p == dim_) return false;
  const std::size_t k = rows_.size();
  // new row = (v - sum used_i row_i) / r[p]
  Vec combo(k + 1);
  for (std::size_t i = 0; i < k; ++i) {
    if (used[i].is_zero()) continue;
    for (std::size_t t = 0; t < k; ++t) {
      if (!combo_[i][t].is_zero()) combo[t] -= used[i] * combo_[i][t];
    }
  }
  combo[k] = 1;
  Rational inv = r[p].inverse();
  for (auto& x : r) {
    if (!x.is_zero()) x *= inv;
  }
  for (auto& x : combo) {
    if (!x.is_zero()) x *= inv;
  }
  // keep rows reduced at the new pivot
  for (std::size_t i = 0; i < k; ++i) {
    combo_[i].push_back(0);
    const Rational f = rows_[i][p];
    if (f.is_zero()) continue;
    for (std::size_t j = 0; j < dim_; ++j) {
      if (!r[j].is_zero()) rows_[i][j] -= f * r[j];
    }
    for (std::size_t t = 0; t <= k; ++t) {
      if (!combo[t].is_zero()) combo_[i][t] -= f * combo[t];
    }
  }
  rows_.push_back(std::move(r));
  pivots_.push_back(p);
  combo_.push_back(std::move(combo));
  return true;
}

Vec SpanBasis::residual(const Vec& v) const {
  Vec r = v;
  reduce_against(rows_, pivots_, r, nullptr);
  return r;
}

bool SpanBasis::contains(const Vec& v) const { return hatilt::is_zero(residual(v)); }

std::optional<Vec> SpanBasis::coordinates(const Vec& v) const {
  Vec r = v;
  Vec used(rows_.size());
  reduce_against(rows_, pivots_, r, &used);
  if (!hatilt::is_zero(r)) return std::nullopt;
  Vec out(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (used[i].is_zero()) continue;
    for (std::size_t t = 0; t < rows_.size(); ++t) {
      if (!combo_[i][t].is_zero()) out[t] += used[i] * combo_[i][t];
    }
  }
  return out;
}

}  // namespace hatilt
