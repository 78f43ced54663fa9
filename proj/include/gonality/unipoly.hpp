#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace gonality {

class Rng;

/// Dense univariate polynomial over F_p with residues stored low degree first.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs);
  static UniPoly constant(std::uint64_t p, std::uint64_t c) { return UniPoly(p, {c}); }
  static UniPoly x(std::uint64_t p) { return UniPoly(p, {0, 1}); }

  std::uint64_t modulus() const noexcept { return p_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<std::uint64_t>& coeffs() const noexcept { return c_; }
  std::uint64_t operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }
  std::uint64_t lead() const { return c_.empty() ? 0 : c_.back(); }

  std::uint64_t eval(std::uint64_t x) const;
  UniPoly monic() const;
  UniPoly derivative() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }
  friend bool operator<(const UniPoly& a, const UniPoly& b);

 private:
  void trim();

  std::uint64_t p_ = 2;
  std::vector<std::uint64_t> c_;
};

struct DivMod {
  UniPoly quotient;
  UniPoly remainder;
};

/// Throws DomainError when dividing by zero.
DivMod divmod(const UniPoly& a, const UniPoly& b);
/// Monic gcd (zero if both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// base^e mod m.
UniPoly powmod(UniPoly base, std::uint64_t e, const UniPoly& m);

struct Factor {
  UniPoly poly;  // monic irreducible
  int multiplicity;
};

/// Complete factorization over F_p: square-free decomposition, distinct-degree
/// factorization, then Cantor-Zassenhaus equal-degree splitting. Requires p > deg f
/// (CharacteristicError otherwise) and f nonzero. Factors are sorted by (degree, coefficients).
std::vector<Factor> factor(const UniPoly& f, Rng& rng);

/// Roots in F_p with multiplicity, ascending. Works for every p and degree.
std::vector<std::pair<std::uint64_t, int>> roots(const UniPoly& f);

}  // namespace gonality
