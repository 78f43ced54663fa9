#pragma once

#include "gonality/multipoly.hpp"
#include "gonality/projective.hpp"

#include <limits>
#include <utility>
#include <vector>

namespace gonality {

/// Root multiplicity reported when the form vanishes identically.
inline constexpr int kInfiniteContact = std::numeric_limits<int>::max();

/// Homogeneous form in (s, t); coefficient i multiplies s^(d-i) t^i.
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(Field field, std::vector<Scalar> coeffs);
  static BinaryForm zero(Field field, int degree);
  /// Reads a MultiPoly in two variables.
  static BinaryForm from_poly(const MultiPoly& f);

  const Field& field() const noexcept { return field_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const noexcept { return c_; }
  bool is_zero() const;

  Scalar eval(const Scalar& s, const Scalar& t) const;

  /// Multiplicity of the root at [s:t] (0 if it is not a root), or kInfiniteContact for the
  /// zero form. Computed from the Taylor shift at the point, so exact in every characteristic.
  int multiplicity_at(const ProjPoint& param) const;

  /// Roots in P^1(F_p) with multiplicity: [1:r] by ascending r, then [0:1]. Prime fields
  /// only; the zero form throws DomainError.
  std::vector<std::pair<ProjPoint, int>> rational_roots() const;

  MultiPoly to_poly() const;

  friend bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.field_ == b.field_ && a.c_ == b.c_; }

 private:
  Field field_;
  std::vector<Scalar> c_;
};

}  // namespace gonality
