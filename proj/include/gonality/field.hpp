#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace gonality {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Scalar;

namespace modp {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  if (s >= p || s < a) s -= p;
  return s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p);
}

std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

/// Inverse by the extended Euclidean algorithm; `a` must be nonzero mod p.
std::uint64_t inv(std::uint64_t a, std::uint64_t p);

/// Deterministic Miller-Rabin, exact for all 64-bit inputs.
bool is_prime(std::uint64_t n);

}  // namespace modp

/// Whether polynomial constructors insist on p > degree.
///
/// The strict guard is the default. `relaxed` is for small-field exhaustive checks whose
/// algorithms are characteristic-free (Taylor coefficients, root multiplicities).
enum class DegreeGuard { strict, relaxed };

/// Coefficient field: F_p for a machine-word prime p, or the rationals.
class Field {
 public:
  Field() = default;  // the rationals

  static Field rational() { return Field{}; }
  static Field prime(std::uint64_t p, DegreeGuard guard = DegreeGuard::strict);

  bool is_prime() const noexcept { return p_ != 0; }
  bool is_rational() const noexcept { return p_ == 0; }
  std::uint64_t characteristic() const noexcept { return p_; }
  DegreeGuard guard() const noexcept { return guard_; }

  /// Throws CharacteristicError when this is a strictly guarded F_p with p <= degree.
  void require_degree(int degree) const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_bigint(const BigInt& v) const;
  Scalar from_rational(const Rational& q) const;
  /// Residue r in [0, p); prime fields only.
  Scalar from_residue(std::uint64_t r) const;
  /// Parses "123", "-4" or "a/b".
  Scalar parse(std::string_view text) const;

  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b) noexcept { return a.p_ == b.p_; }
  friend bool operator!=(const Field& a, const Field& b) noexcept { return a.p_ != b.p_; }

 private:
  std::uint64_t p_ = 0;
  DegreeGuard guard_ = DegreeGuard::strict;
};

/// An element of a Field. Prime-field elements are stored as a residue, rational ones
/// reduced with positive denominator.
class Scalar {
 public:
  Scalar() = default;  // rational zero

  const Field& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  std::uint64_t residue() const;
  const Rational& rational() const;

  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }
  /// Total order (by residue, or by rational value); used only for canonical sorting.
  friend bool operator<(const Scalar& a, const Scalar& b);

  /// Residue as decimal, or "a" / "a/b" for rationals.
  std::string to_string() const;

 private:
  friend class Field;
  void check_same_field(const Scalar& o) const;

  Field field_;
  std::uint64_t residue_ = 0;
  Rational q_;
};

}  // namespace gonality
