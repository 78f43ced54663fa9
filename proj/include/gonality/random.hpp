#pragma once

#include "gonality/multipoly.hpp"

#include <cstdint>
#include <random>

namespace gonality {

/// Seeded generator. Not shared between tasks: derive a child with split() instead.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound), by rejection so the result does not depend on the library's
  /// distribution implementation.
  std::uint64_t below(std::uint64_t bound);
  Scalar uniform(const Field& field);
  Scalar nonzero(const Field& field);

  /// Independent child stream keyed by `index` (splitmix64 of seed and index).
  Rng split(std::uint64_t index) const;

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

std::uint64_t splitmix64(std::uint64_t x);

/// Every monomial coefficient independently uniform over F_p. Throws DomainError on the
/// rationals and CharacteristicError when p <= degree (under the strict guard).
MultiPoly random_poly(int nvars, int degree, const Field& field, Rng& rng);
MultiPoly random_poly(int nvars, int degree, const Field& field, std::uint64_t seed);

}  // namespace gonality
