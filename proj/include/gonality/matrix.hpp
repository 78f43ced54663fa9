#pragma once

#include "gonality/field.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace gonality {

using Vector = std::vector<Scalar>;

/// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);
  /// Rows must be non-empty and rectangular.
  static Matrix from_rows(Field field, const std::vector<Vector>& rows);
  static Matrix from_columns(Field field, const std::vector<Vector>& cols);
  static Matrix identity(Field field, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Matrix transpose() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

Vector operator*(const Matrix& m, std::span<const Scalar> v);

struct RowEchelon {
  Matrix reduced;                    // reduced row-echelon form, zero rows at the bottom
  std::vector<std::size_t> pivots;   // pivot column of each nonzero row
};

/// Gauss-Jordan elimination. Zero entries are skipped, so sparse inputs stay cheap.
RowEchelon row_reduce(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of the right kernel {v : M v = 0}, returned as the rows of a reduced row-echelon
/// matrix, so equal kernels give identical bases.
std::vector<Vector> kernel(const Matrix& m);

/// Some solution of M v = b, or nullopt if the system is inconsistent.
std::optional<Vector> solve(const Matrix& m, std::span<const Scalar> b);

/// Throws DomainError when M is singular.
Matrix inverse(const Matrix& m);

}  // namespace gonality
