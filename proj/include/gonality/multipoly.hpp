#pragma once

#include "gonality/field.hpp"
#include "gonality/matrix.hpp"

#include <span>
#include <string>
#include <vector>

namespace gonality {

using Exponents = std::vector<int>;

struct Term {
  Exponents exp;
  Scalar coeff;
};

/// Sparse homogeneous polynomial.
///
/// Every exponent vector has length nvars() and sums to degree(). Terms are kept in
/// descending lexicographic order of exponents (graded lex, since all degrees agree) with
/// no zero coefficients, so equal polynomials have identical term lists. The zero
/// polynomial still carries a degree.
class MultiPoly {
 public:
  MultiPoly() = default;
  /// The zero form of the given degree.
  MultiPoly(Field field, int nvars, int degree);

  /// Merges duplicate exponents, drops zeros and sorts. Throws DimensionError on exponent
  /// vectors of the wrong length or sum, CharacteristicError per the field's degree guard.
  static MultiPoly from_terms(Field field, int nvars, int degree, std::vector<Term> terms);
  static MultiPoly monomial(Field field, Exponents exp, Scalar coeff);
  static MultiPoly variable(Field field, int nvars, int index);
  /// Linear form sum_i coeffs[i] y_i.
  static MultiPoly linear(Field field, std::span<const Scalar> coeffs);

  const Field& field() const noexcept { return field_; }
  int nvars() const noexcept { return nvars_; }
  int degree() const noexcept { return degree_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Scalar coefficient(const Exponents& exp) const;
  Scalar eval(std::span<const Scalar> point) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly operator-() const;
  MultiPoly scaled(const Scalar& c) const;

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  /// Human-readable form such as "y0*y2 - y1^2" (prime fields print residues).
  std::string to_string(char var = 'y') const;

 private:
  void check_compatible(const MultiPoly& o, const char* op) const;

  Field field_;
  int nvars_ = 0;
  int degree_ = 0;
  std::vector<Term> terms_;
};

/// Number of monomials of the given degree in nvars variables.
std::size_t monomial_count(int nvars, int degree);

/// All exponent vectors of the given degree, in the canonical (descending lex) order.
std::vector<Exponents> monomials(int nvars, int degree);

/// Substitutes y_j -> sum_c m(j, c) z_c; `m` is nvars x k and the result has k variables.
/// A ring homomorphism: substitute(f, M) then N equals substitute(f, M * N).
MultiPoly substitute_linear(const MultiPoly& f, const Matrix& m);

/// d f / d y_var, a form of degree deg f - 1.
MultiPoly partial_derivative(const MultiPoly& f, int var);

/// Coefficient list of F(base + t * y) by powers of t: entry k is the degree-k form in y
/// multiplying t^k, for k = 0..max_order. Binomial weights are reduced from exact
/// integers, so the expansion is valid in every characteristic.
std::vector<MultiPoly> taylor_coefficients(const MultiPoly& f, std::span<const Scalar> base, int max_order);

/// Exact binomial coefficient as a field element.
Scalar binomial(const Field& field, int n, int k);

}  // namespace gonality
