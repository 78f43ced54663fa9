#pragma once

#include "gonality/matrix.hpp"

#include <span>
#include <string>
#include <vector>

namespace gonality {

/// A point of projective space, stored with its first nonzero coordinate equal to 1.
class ProjPoint {
 public:
  ProjPoint() = default;
  /// Throws DomainError if all coordinates vanish.
  ProjPoint(Field field, std::vector<Scalar> coords);
  static ProjPoint from_ints(Field field, std::span<const std::int64_t> coords);

  const Field& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return coords_.size(); }
  const std::vector<Scalar>& coords() const noexcept { return coords_; }
  const Scalar& operator[](std::size_t i) const { return coords_[i]; }

  friend bool operator==(const ProjPoint& a, const ProjPoint& b) {
    return a.field_ == b.field_ && a.coords_ == b.coords_;
  }
  friend bool operator!=(const ProjPoint& a, const ProjPoint& b) { return !(a == b); }

  std::string to_string() const;

 private:
  Field field_;
  std::vector<Scalar> coords_;
};

/// A line of P^m, stored as the unique reduced row-echelon 2 x (m+1) matrix of its span.
class ProjLine {
 public:
  ProjLine() = default;
  /// Throws DomainError if the two vectors are dependent.
  static ProjLine through(std::span<const Scalar> a, std::span<const Scalar> b);
  static ProjLine through(const ProjPoint& a, const ProjPoint& b);
  /// Row-reduces a 2-row matrix of rank 2.
  static ProjLine from_span(const Matrix& span);

  const Field& field() const noexcept { return span_.field(); }
  /// m + 1.
  std::size_t ambient_size() const noexcept { return span_.cols(); }
  const Matrix& span() const noexcept { return span_; }
  Vector first() const { return span_.row(0); }
  Vector second() const { return span_.row(1); }
  std::size_t first_pivot() const noexcept { return pivots_[0]; }
  std::size_t second_pivot() const noexcept { return pivots_[1]; }

  bool contains(std::span<const Scalar> v) const;
  bool contains(const ProjPoint& p) const { return contains(p.coords()); }

  /// Coordinates [s:t] with p = s * first() + t * second(); throws DomainError if p is off the line.
  ProjPoint parameter_of(const ProjPoint& p) const;

  friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.span_ == b.span_; }
  friend bool operator!=(const ProjLine& a, const ProjLine& b) { return !(a == b); }
  /// Lexicographic order on the flattened canonical matrix.
  friend bool operator<(const ProjLine& a, const ProjLine& b);

  std::string to_string() const;

 private:
  Matrix span_;
  std::size_t pivots_[2] = {0, 0};
};

/// Coordinates z with T z = v, for T square and invertible.
Vector preimage(const Matrix& t, std::span<const Scalar> v);

}  // namespace gonality
