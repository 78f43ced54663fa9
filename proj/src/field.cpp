#include "gonality/field.hpp"

#include "gonality/errors.hpp"

#include <array>
#include <charconv>

namespace gonality {

namespace modp {

std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp) {
    if (exp & 1) result = mul(result, base, p);
    base = mul(base, base, p);
    exp >>= 1;
  }
  return result;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  a %= p;
  if (a == 0) throw DomainError("modp::inv: zero has no inverse");
  // Signed 128-bit Bezout coefficients avoid overflow for any 64-bit modulus.
  __int128 t = 0, new_t = 1;
  __int128 r = p, new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw DomainError("modp::inv: element not invertible");
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  static constexpr std::array<std::uint64_t, 12> small = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (auto q : small) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (auto a : small) {
    std::uint64_t x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

}  // namespace modp

Field Field::prime(std::uint64_t p, DegreeGuard guard) {
  if (!modp::is_prime(p)) throw DomainError("Field::prime: " + std::to_string(p) + " is not prime");
  Field f;
  f.p_ = p;
  f.guard_ = guard;
  return f;
}

void Field::require_degree(int degree) const {
  if (p_ != 0 && guard_ == DegreeGuard::strict && p_ <= static_cast<std::uint64_t>(degree < 0 ? 0 : degree)) {
    throw CharacteristicError("characteristic " + std::to_string(p_) + " does not exceed degree " +
                              std::to_string(degree));
  }
}

Scalar Field::zero() const {
  Scalar s;
  s.field_ = *this;
  return s;
}

Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  Scalar s;
  s.field_ = *this;
  if (p_) {
    auto m = static_cast<__int128>(v) % static_cast<__int128>(p_);
    if (m < 0) m += p_;
    s.residue_ = static_cast<std::uint64_t>(m);
  } else {
    s.q_ = v;
  }
  return s;
}

Scalar Field::from_bigint(const BigInt& v) const {
  Scalar s;
  s.field_ = *this;
  if (p_) {
    BigInt m = v % p_;
    if (m < 0) m += p_;
    s.residue_ = m.convert_to<std::uint64_t>();
  } else {
    s.q_ = Rational(v);
  }
  return s;
}

Scalar Field::from_rational(const Rational& q) const {
  if (!p_) {
    Scalar s;
    s.field_ = *this;
    s.q_ = q;
    return s;
  }
  return from_bigint(numerator(q)) / from_bigint(denominator(q));
}

Scalar Field::from_residue(std::uint64_t r) const {
  if (!p_) throw std::logic_error("Field::from_residue on the rationals");
  Scalar s;
  s.field_ = *this;
  s.residue_ = r % p_;
  return s;
}

Scalar Field::parse(std::string_view text) const {
  auto parse_int = [&](std::string_view part) {
    if (part.empty()) throw ParseError("empty integer in coefficient '" + std::string(text) + "'");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw ParseError("bad integer '" + std::string(part) + "'");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') throw ParseError("bad integer '" + std::string(part) + "'");
    }
    BigInt v(std::string(part.substr(start)));
    return part[0] == '-' ? BigInt(-v) : v;
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return from_bigint(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
  if (p_) {
    Scalar d = from_bigint(den);
    if (d.is_zero()) throw ParseError("denominator divisible by p in '" + std::string(text) + "'");
    return from_bigint(num) / d;
  }
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return from_rational(Rational(num, den));
}

std::string Field::to_string() const { return p_ ? "F_" + std::to_string(p_) : "Q"; }

bool Scalar::is_zero() const { return field_.is_prime() ? residue_ == 0 : q_ == 0; }

bool Scalar::is_one() const { return field_.is_prime() ? residue_ == 1 % field_.characteristic() : q_ == 1; }

std::uint64_t Scalar::residue() const {
  if (!field_.is_prime()) throw std::logic_error("Scalar::residue on a rational");
  return residue_;
}

const Rational& Scalar::rational() const {
  if (field_.is_prime()) throw std::logic_error("Scalar::rational on a prime-field element");
  return q_;
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_) {
    throw FieldMismatch("arithmetic between " + field_.to_string() + " and " + o.field_.to_string());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DomainError("Scalar::inverse of zero");
  Scalar r = *this;
  if (field_.is_prime()) {
    r.residue_ = modp::inv(residue_, field_.characteristic());
  } else {
    r.q_ = 1 / q_;
  }
  return r;
}

Scalar Scalar::pow(std::uint64_t e) const {
  Scalar r = field_.one();
  if (field_.is_prime()) {
    r.residue_ = modp::pow(residue_, e, field_.characteristic());
    return r;
  }
  Scalar base = *this;
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_prime()) {
    residue_ = modp::add(residue_, o.residue_, field_.characteristic());
  } else {
    q_ += o.q_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_prime()) {
    residue_ = modp::sub(residue_, o.residue_, field_.characteristic());
  } else {
    q_ -= o.q_;
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_prime()) {
    residue_ = modp::mul(residue_, o.residue_, field_.characteristic());
  } else {
    q_ *= o.q_;
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  if (field_.is_prime()) {
    r.residue_ = residue_ == 0 ? 0 : field_.characteristic() - residue_;
  } else {
    r.q_ = -q_;
  }
  return r;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  return a.field_.is_prime() ? a.residue_ == b.residue_ : a.q_ == b.q_;
}

bool operator<(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  return a.field_.is_prime() ? a.residue_ < b.residue_ : a.q_ < b.q_;
}

std::string Scalar::to_string() const {
  if (field_.is_prime()) return std::to_string(residue_);
  if (denominator(q_) == 1) return numerator(q_).str();
  return numerator(q_).str() + "/" + denominator(q_).str();
}

}  // namespace gonality
