#include "gonality/matrix.hpp"

#include "gonality/errors.hpp"

#include <string>

namespace gonality {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, field.zero()) {}

Matrix Matrix::from_rows(Field field, const std::vector<Vector>& rows) {
  std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionError("Matrix::from_rows: ragged rows");
    for (std::size_t c = 0; c < cols; ++c) {
      if (rows[r][c].field() != field) throw FieldMismatch("Matrix::from_rows: entry in wrong field");
      m(r, c) = rows[r][c];
    }
  }
  return m;
}

Matrix Matrix::from_columns(Field field, const std::vector<Vector>& cols) {
  return from_rows(field, cols).transpose();
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = field.one();
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector v;
  v.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v.push_back((*this)(r, c));
  return v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  }
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionError("Matrix product: inner dimensions differ");
  if (a.field_ != b.field_) throw FieldMismatch("Matrix product: fields differ");
  Matrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
      }
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

Vector operator*(const Matrix& m, std::span<const Scalar> v) {
  if (v.size() != m.cols()) throw DimensionError("Matrix-vector product: size mismatch");
  Vector out(m.rows(), m.field().zero());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (!m(r, c).is_zero() && !v[c].is_zero()) out[r] += m(r, c) * v[c];
    }
  }
  return out;
}

RowEchelon row_reduce(Matrix m) {
  RowEchelon out;
  std::size_t lead_row = 0;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t c = 0; c < cols && lead_row < rows; ++c) {
    std::size_t pivot = lead_row;
    while (pivot < rows && m(pivot, c).is_zero()) ++pivot;
    if (pivot == rows) continue;
    if (pivot != lead_row) {
      for (std::size_t j = c; j < cols; ++j) std::swap(m(pivot, j), m(lead_row, j));
    }
    Scalar inv = m(lead_row, c).inverse();
    for (std::size_t j = c; j < cols; ++j) {
      if (!m(lead_row, j).is_zero()) m(lead_row, j) *= inv;
    }
    std::vector<std::size_t> support;
    for (std::size_t j = c; j < cols; ++j) {
      if (!m(lead_row, j).is_zero()) support.push_back(j);
    }
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == lead_row || m(r, c).is_zero()) continue;
      Scalar factor = m(r, c);
      for (std::size_t j : support) m(r, j) -= factor * m(lead_row, j);
    }
    out.pivots.push_back(c);
    ++lead_row;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

std::vector<Vector> kernel(const Matrix& m) {
  const Field& f = m.field();
  RowEchelon ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<Vector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vector v(m.cols(), f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) v[ech.pivots[r]] = -ech.reduced(r, free);
    basis.push_back(std::move(v));
  }
  if (basis.empty()) return basis;
  RowEchelon canon = row_reduce(Matrix::from_rows(f, basis));
  std::vector<Vector> out;
  for (std::size_t r = 0; r < canon.pivots.size(); ++r) out.push_back(canon.reduced.row(r));
  return out;
}

std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b) {
  if (b.size() != m.rows()) throw DimensionError("solve: right-hand side has wrong length");
  const Field& f = m.field();
  Matrix aug(f, m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  RowEchelon ech = row_reduce(std::move(aug));
  Vector x(m.cols(), f.zero());
  for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
    if (ech.pivots[r] == m.cols()) return std::nullopt;
    x[ech.pivots[r]] = ech.reduced(r, m.cols());
  }
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionError("inverse: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return m;
  Matrix aug(m.field(), n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = m.field().one();
  }
  RowEchelon ech = row_reduce(std::move(aug));
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) throw DomainError("inverse: matrix is singular");
  Matrix out(m.field(), n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) out(r, c) = ech.reduced(r, n + c);
  }
  return out;
}

}  // namespace gonality
