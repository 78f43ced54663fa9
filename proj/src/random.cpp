#include "gonality/random.hpp"

#include "gonality/errors.hpp"

namespace gonality {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw DomainError("Rng::below: empty range");
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return v % bound;
}

Scalar Rng::uniform(const Field& field) {
  if (!field.is_prime()) throw DomainError("Rng::uniform: sampling needs a prime field");
  return field.from_residue(below(field.characteristic()));
}

Scalar Rng::nonzero(const Field& field) {
  if (!field.is_prime()) throw DomainError("Rng::nonzero: sampling needs a prime field");
  return field.from_residue(1 + below(field.characteristic() - 1));
}

Rng Rng::split(std::uint64_t index) const { return Rng(splitmix64(seed_ ^ splitmix64(index + 1))); }

MultiPoly random_poly(int nvars, int degree, const Field& field, Rng& rng) {
  if (!field.is_prime()) throw DomainError("random_poly: uniform sampling is only defined over F_p");
  field.require_degree(degree);
  std::vector<Term> terms;
  for (auto& e : monomials(nvars, degree)) {
    Scalar c = rng.uniform(field);
    if (!c.is_zero()) terms.push_back(Term{std::move(e), std::move(c)});
  }
  return MultiPoly::from_terms(field, nvars, degree, std::move(terms));
}

MultiPoly random_poly(int nvars, int degree, const Field& field, std::uint64_t seed) {
  Rng rng(seed);
  return random_poly(nvars, degree, field, rng);
}

}  // namespace gonality
