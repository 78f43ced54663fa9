#include "gonality/unipoly.hpp"

#include "gonality/errors.hpp"
#include "gonality/field.hpp"
#include "gonality/random.hpp"

#include <algorithm>

namespace gonality {

UniPoly::UniPoly(std::uint64_t p, std::vector<std::uint64_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  for (auto& c : c_) c %= p_;
  trim();
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

std::uint64_t UniPoly::eval(std::uint64_t x) const {
  std::uint64_t acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = modp::add(modp::mul(acc, x, p_), *it, p_);
  return acc;
}

UniPoly UniPoly::monic() const {
  if (c_.empty() || c_.back() == 1) return *this;
  std::uint64_t inv = modp::inv(c_.back(), p_);
  UniPoly out = *this;
  for (auto& c : out.c_) c = modp::mul(c, inv, p_);
  return out;
}

UniPoly UniPoly::derivative() const {
  std::vector<std::uint64_t> d;
  for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(modp::mul(c_[i], i % p_, p_));
  return UniPoly(p_, std::move(d));
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = modp::add(a[i], b[i], a.p_);
  return UniPoly(a.p_, std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<std::uint64_t> c(std::max(a.c_.size(), b.c_.size()), 0);
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = modp::sub(a[i], b[i], a.p_);
  return UniPoly(a.p_, std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly(a.p_, {});
  std::vector<std::uint64_t> c(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) {
      c[i + j] = modp::add(c[i + j], modp::mul(a.c_[i], b.c_[j], a.p_), a.p_);
    }
  }
  return UniPoly(a.p_, std::move(c));
}

bool operator<(const UniPoly& a, const UniPoly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return std::lexicographical_compare(a.c_.rbegin(), a.c_.rend(), b.c_.rbegin(), b.c_.rend());
}

DivMod divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw DomainError("divmod: division by the zero polynomial");
  const std::uint64_t p = a.modulus();
  std::vector<std::uint64_t> r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {UniPoly(p, {}), a};
  std::vector<std::uint64_t> q(static_cast<std::size_t>(a.degree() - db + 1), 0);
  const std::uint64_t inv = modp::inv(b.lead(), p);
  for (int i = a.degree(); i >= db; --i) {
    std::uint64_t c = modp::mul(r[i], inv, p);
    q[i - db] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] = modp::sub(r[i - db + j], modp::mul(c, b[j], p), p);
  }
  r.resize(static_cast<std::size_t>(db));
  return {UniPoly(p, std::move(q)), UniPoly(p, std::move(r))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).remainder;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly powmod(UniPoly base, std::uint64_t e, const UniPoly& m) {
  UniPoly result = divmod(UniPoly::constant(m.modulus(), 1), m).remainder;
  base = divmod(base, m).remainder;
  while (e) {
    if (e & 1) result = divmod(result * base, m).remainder;
    e >>= 1;
    if (e) base = divmod(base * base, m).remainder;
  }
  return result;
}

namespace {

UniPoly exact_div(const UniPoly& a, const UniPoly& b) { return divmod(a, b).quotient; }

// Yun's algorithm; valid because p exceeds the degree, so f' = 0 only for constants.
std::vector<std::pair<UniPoly, int>> squarefree(const UniPoly& f) {
  std::vector<std::pair<UniPoly, int>> out;
  UniPoly fd = f.derivative();
  UniPoly a = gcd(f, fd);
  UniPoly b = exact_div(f, a);
  UniPoly c = exact_div(fd, a);
  UniPoly d = c - b.derivative();
  for (int i = 1; b.degree() > 0; ++i) {
    UniPoly g = gcd(b, d);
    b = exact_div(b, g);
    c = exact_div(d, g);
    d = c - b.derivative();
    if (g.degree() > 0) out.emplace_back(g, i);
  }
  return out;
}

std::vector<std::pair<UniPoly, int>> distinct_degree(UniPoly f) {
  std::vector<std::pair<UniPoly, int>> out;
  const std::uint64_t p = f.modulus();
  UniPoly h = UniPoly::x(p);
  for (int i = 1; 2 * i <= f.degree(); ++i) {
    h = powmod(h, p, f);
    UniPoly g = gcd(h - UniPoly::x(p), f);
    if (g.degree() > 0) {
      out.emplace_back(g, i);
      f = exact_div(f, g);
      h = divmod(h, f).remainder;
    }
  }
  if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
  return out;
}

UniPoly random_below(std::uint64_t p, int degree, Rng& rng) {
  std::vector<std::uint64_t> c(static_cast<std::size_t>(degree));
  for (auto& x : c) x = rng.below(p);
  return UniPoly(p, std::move(c));
}

// Splits a monic square-free f whose irreducible factors all have degree k. Odd p only.
void equal_degree(const UniPoly& f, int k, Rng& rng, std::vector<UniPoly>& out) {
  if (f.degree() == k) {
    out.push_back(f.monic());
    return;
  }
  const std::uint64_t p = f.modulus();
  const UniPoly one = UniPoly::constant(p, 1);
  for (;;) {
    UniPoly a = random_below(p, f.degree(), rng);
    if (a.degree() <= 0) continue;
    UniPoly g = gcd(a, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, k, rng, out);
      equal_degree(exact_div(f, g), k, rng, out);
      return;
    }
    // (p^k - 1)/2 = (1 + p + ... + p^{k-1}) * (p-1)/2: take the norm-like product first.
    UniPoly norm = a;
    UniPoly frob = a;
    for (int i = 1; i < k; ++i) {
      frob = powmod(frob, p, f);
      norm = divmod(norm * frob, f).remainder;
    }
    UniPoly b = powmod(norm, (p - 1) / 2, f) - one;
    g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree(g, k, rng, out);
      equal_degree(exact_div(f, g), k, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Factor> factor(const UniPoly& f, Rng& rng) {
  if (f.is_zero()) throw DomainError("factor: zero polynomial");
  if (static_cast<std::uint64_t>(f.degree()) >= f.modulus()) {
    throw CharacteristicError("factor: the characteristic must exceed the degree");
  }
  std::vector<Factor> out;
  for (auto& [sq, mult] : squarefree(f.monic())) {
    for (auto& [part, k] : distinct_degree(sq)) {
      std::vector<UniPoly> irreducibles;
      if (f.modulus() == 2) {
        // Here deg f <= 1, so each part is already irreducible.
        irreducibles.push_back(part);
      } else {
        equal_degree(part, k, rng, irreducibles);
      }
      for (auto& g : irreducibles) out.push_back(Factor{std::move(g), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const Factor& a, const Factor& b) { return a.poly < b.poly; });
  return out;
}

std::vector<std::pair<std::uint64_t, int>> roots(const UniPoly& f) {
  if (f.is_zero()) throw DomainError("roots: zero polynomial");
  const std::uint64_t p = f.modulus();
  std::vector<std::uint64_t> candidates;
  if (p <= 4096 || f.degree() <= 0) {
    for (std::uint64_t r = 0; r < p && f.degree() > 0; ++r) {
      if (f.eval(r) == 0) candidates.push_back(r);
    }
  } else {
    UniPoly m = f.monic();
    UniPoly linear_part = gcd(powmod(UniPoly::x(p), p, m) - UniPoly::x(p), m);
    if (linear_part.degree() > 0) {
      Rng rng(0);
      std::vector<UniPoly> lin;
      equal_degree(linear_part, 1, rng, lin);
      for (auto& l : lin) candidates.push_back(modp::sub(0, l[0], p));
      std::sort(candidates.begin(), candidates.end());
    }
  }
  std::vector<std::pair<std::uint64_t, int>> out;
  for (auto r : candidates) {
    UniPoly lin(p, {modp::sub(0, r, p), 1});
    UniPoly g = f;
    int mult = 0;
    for (;;) {
      DivMod qr = divmod(g, lin);
      if (!qr.remainder.is_zero()) break;
      g = std::move(qr.quotient);
      ++mult;
    }
    out.emplace_back(r, mult);
  }
  return out;
}

}  // namespace gonality
